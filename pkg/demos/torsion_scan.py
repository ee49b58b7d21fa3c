"""
Torsion certificates for line bundle classes on a hyperelliptic curve
=====================================================================

A degree-0 class on a hyperelliptic Jacobian can be stored as a graded
matrix pair.  The pair carries an intrinsic torsion test: the class is
n-torsion exactly when a certain linear system built from the matrix
has a solution.  Here we draw random classes on a genus-2 curve over
F_101, run the matrix test for n = 2..8, and compare with the group
order computed by Cantor arithmetic.
"""

import random

from dihedralcovers.fields import GF
from dihedralcovers.homog import HForm
from dihedralcovers.poly import Poly
from dihedralcovers.hyperelliptic import (HECurve, matrix_from_class,
                                          class_order, is_n_torsion)

K = GF(101)

# a genus-2 curve whose branch form splits: roots 0, 1, -1, 2, -2, 3
f = Poly.one(K)
for r in (0, 1, 100, 2, 99, 3):
    f = f * (Poly.x(K) - Poly.const(K, K.of(r)))
curve = HECurve(K, 2, HForm.from_univar(f, 6))
model = curve.odd_model()

rng = random.Random(1)


def random_class():
    # sum two random points to get a typical degree-0 class
    acc = model.zero_class()
    while True:
        x = K.random(rng)
        y = K.sqrt(model.fodd(x))
        if y is None:
            continue
        acc = acc + model.point_class(x, y)
        if not acc.is_zero():
            return acc


for trial in range(5):
    c = random_class()
    pair = matrix_from_class(curve, c)
    order = class_order(c, bound=20000)
    hits = [n for n in range(2, 9) if is_n_torsion(pair, n)]
    print("class order %3d   matrix test says n-torsion for n in %s"
          % (order, hits))
    # the matrix test must agree with divisibility of the order
    for n in range(2, 9):
        assert is_n_torsion(pair, n) == (n % order == 0)

print("all certificates agree with the Cantor oracle")
print()

# honest 2-torsion classes come from even subsets of the branch roots,
# and the matrix test certifies them without any group arithmetic
from dihedralcovers.hyperelliptic import enumerate_two_torsion

pairs = enumerate_two_torsion(curve)
print("the curve has", len(pairs), "nonzero 2-torsion classes")
for pair in pairs[:3]:
    hits = [n for n in range(2, 9) if is_n_torsion(pair, n)]
    print("  sample 2-torsion pair: matrix test hits n in", hits)
    assert hits == [2, 4, 6, 8]

import random

import pytest

from dihedralcovers.fields import GF
from dihedralcovers.homog import HForm
from dihedralcovers.poly import Poly
from dihedralcovers.hyperelliptic import HECurve


def split_curve(p, g):
    """A genus-g curve over GF(p) whose branch form splits into
    distinct rational linear factors (roots 0 and small +-r)."""
    K = GF(p)
    roots = [0]
    r = 1
    while len(roots) < 2 * g + 2:
        roots.append(r)
        roots.append(p - r)
        r += 1
    roots = roots[:2 * g + 2]
    f = Poly.one(K)
    x = Poly.x(K)
    for t in roots:
        f = f * (x - Poly.const(K, K.of(t)))
    return HECurve(K, g, HForm.from_univar(f, 2 * g + 2))


def random_point_class(model, rng):
    K = model.field
    while True:
        x = K.random(rng)
        y = K.sqrt(model.fodd(x))
        if y is None:
            continue
        return model.point_class(x, y)


def random_class(model, g, rng):
    c = model.zero_class()
    for _ in range(g):
        c = c + random_point_class(model, rng)
    return c


@pytest.fixture
def rng():
    return random.Random(20260824)

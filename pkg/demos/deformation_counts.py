"""
Counting deformations of branched covers of the plane
=====================================================

The natural deformations of a degree-2n cover of P^d move the two
defining forms.  Their number is a sum of h^0 values of line bundles,
computed here in closed form, and an h^1 vanishing statement decides
whether that count is exact.  Everything reduces to the cohomology of
line bundles and twisted differential forms on projective space, which
is available in exact terms through Bott's formula.
"""

from dihedralcovers import deformations as df

# dimensions of spaces of forms and twisted vector fields on P^2
print("h^0(P^2, O(2)) =", df.h_line(2, 2, 0))
print("h^0(P^2, T(-3)) =", df.h_tangent(2, -3, 0),
      "  h^1(P^2, T(-3)) =", df.h_tangent(2, -3, 1))
print()

# the full deformation count for the del Pezzo case n = 2, m = 1
rep = df.def_prime_dims(2, 1, 2)
print("n=2, m=1 over P^2:")
print("  natural deformation target:", rep.target)
print("  reparametrization source:  ", rep.source,
      "(exact)" if rep.source_exact else "(upper bound)")
print("  moduli lower bound:        ", rep.lower_bound)
print()

# the same count for a range of n and m; the h^1 obstruction shows up
# only for (n, m) = (3, 1), where the offending group is h^1 of the
# twisted tangent sheaf
for n in range(2, 6):
    for m in (1, 2):
        r = df.def_prime_dims(n, m, 2)
        flag = "h1 ok" if r.h1_vanishing else "obstruction %s" % (r.offender,)
        print("n=%d m=%d:  target %4d  source %3d  bound %4d   %s"
              % (n, m, r.target, r.source, r.lower_bound, flag))

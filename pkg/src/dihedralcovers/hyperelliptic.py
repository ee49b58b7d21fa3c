"""Hyperelliptic Jacobian arithmetic and its bridge to bundle pairs.

A curve is given by its even model z^2 = F(x0, x1) with F binary,
squarefree of degree 2g + 2.  When F has a rational root the coordinate
change sending that root to (1:0) produces an odd model y^2 = fodd(x)
with deg fodd = 2g + 1 and a single rational point at infinity, which
is where divisor class arithmetic happens: classes are reduced Mumford
pairs (u, v) and the group law is composition and reduction.

The two directions of the dictionary between divisor classes and
trace-free matrix pairs:

* ``class_from_matrix`` intersects a section of the twisted pair with
  its z-image, giving a semireduced divisor (u, v) = (norm form,
  z-value) which reduces to the class;
* ``matrix_from_class`` computes Riemann-Roch spaces of the class
  twisted by multiples of the degree-two pencil, finds the splitting
  (a, b), and reads the matrix off the action of y on a basis adapted
  to the splitting.

Torsion is certified two ways: by iterating the group law (the oracle)
and by the rank of a resultant-style band matrix built from (P, f, q),
which is rank deficient exactly when the class is n-torsion
(``torsion_matrix`` / ``is_n_torsion``).
"""

import itertools

from .poly import Poly, poly_gcd, poly_xgcd
from .homog import HForm
from .double_cover import (DoubleCoverRing, BundlePair, DegenerateSectionError,
                           divisor_of_section, tensor)
from . import linalg, parsing


class HECurve:
    """A hyperelliptic curve of genus g in its even model z^2 = F."""

    def __init__(self, field, g, F):
        if F.nvars != 2 or F.deg != 2 * g + 2:
            raise ValueError("even model needs a binary form of degree %d" % (2 * g + 2))
        if not F.is_squarefree():
            raise ValueError("branch form must be squarefree")
        self.field = field
        self.g = g
        self.F = F
        self._odd = None

    @classmethod
    def from_odd_poly(cls, field, g, fodd):
        """Build the curve from y^2 = fodd(x) with deg fodd = 2g + 1."""
        if fodd.degree != 2 * g + 1:
            raise ValueError("odd model needs degree %d" % (2 * g + 1))
        F = HForm.from_univar(fodd, 2 * g + 2)
        return cls(field, g, F)

    def ring(self):
        return DoubleCoverRing(self.field, self.g + 1, self.F)

    def rational_branch_root(self):
        """A root (r0 : r1) of F over the base field, or None."""
        f = self.F.to_univar()
        if self.F.x1_multiplicity() > 0:
            return (self.field.one, self.field.zero)
        if self.field.characteristic:
            for v in range(self.field.characteristic):
                x = self.field.of(v)
                if not f(x):
                    return (x, self.field.one)
            return None
        # rational root search: candidates p/q from the extreme coefficients
        from fractions import Fraction
        import math
        den = math.lcm(*[Fraction(c).denominator for c in f.c])
        ic = [int(Fraction(c) * den) for c in f.c]
        lo = next(c for c in ic if c)
        hi = ic[-1]
        for p in _divisors(abs(lo)) | {0}:
            for q in _divisors(abs(hi)):
                for s in (1, -1):
                    x = Fraction(s * p, q)
                    if not f(x):
                        return (x, self.field.one)
        return None

    def odd_model(self):
        """The odd model after moving a rational branch root to (1:0)."""
        if self._odd is None:
            root = self.rational_branch_root()
            if root is None:
                raise ValueError("no rational branch point; odd model unavailable")
            self._odd = OddModel(self, root)
        return self._odd

    def __eq__(self, other):
        return (isinstance(other, HECurve) and other.field == self.field
                and other.g == self.g and other.F == self.F)

    def __repr__(self):
        return "HECurve(g=%d, F=%s)" % (self.g, self.F)

    def to_json(self):
        return {"g": self.g, "F": parsing.format_form(self.F)}

    @classmethod
    def from_json(cls, data, field):
        g = int(data["g"])
        return cls(field, g, parsing.parse_form(data["F"], field, 2))


def _divisors(n):
    if n == 0:
        return {1}
    out = set()
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.add(d)
            out.add(n // d)
        d += 1
    return out


class OddModel:
    """Coordinates with one branch point at infinity: y^2 = fodd(x)."""

    def __init__(self, curve, root):
        field = curve.field
        r0, r1 = root
        # complete (r0, r1) to an invertible matrix T, columns T(1,0)=(r0,r1)
        if r1:
            s0, s1 = field.one, field.zero
        else:
            s0, s1 = field.zero, field.one
        self.curve = curve
        self.field = field
        self.g = curve.g
        self.T = ((r0, s0), (r1, s1))
        det = r0 * s1 - r1 * s0
        dinv = field.inv(det)
        self.Tinv = ((s1 * dinv, -s0 * dinv), (-r1 * dinv, r0 * dinv))
        FT = _substitute_matrix(curve.F, self.T)
        fodd = FT.to_univar()
        if fodd.degree != 2 * curve.g + 1:
            raise ValueError("chosen branch root does not give an odd model")
        self.fodd = fodd

    def transform_form(self, form):
        return _substitute_matrix(form, self.T)

    def untransform_form(self, form):
        return _substitute_matrix(form, self.Tinv)

    def zero_class(self):
        return MumfordClass(self, Poly.one(self.field), Poly.zero(self.field))

    def point_class(self, x0, y0):
        """The class of (x0, y0) minus infinity."""
        if self.fodd(x0) != y0 * y0:
            raise ValueError("point is not on the curve")
        return MumfordClass(self, Poly(self.field, [-x0, self.field.one]),
                            Poly.const(self.field, y0))

    def semireduced(self, u, v):
        """A (possibly unreduced) Mumford pair, validated then reduced."""
        u = u.monic()
        v = v % u if u.degree > 0 else Poly.zero(self.field)
        if not ((v * v - self.fodd) % u).is_zero():
            raise ValueError("pair is not semireduced: u does not divide v^2 - f")
        return _reduce(self, u, v)


def _substitute_matrix(form, m):
    field = form.field
    x0 = HForm(field, 2, 1, {(1, 0): m[0][0], (0, 1): m[0][1]})
    x1 = HForm(field, 2, 1, {(1, 0): m[1][0], (0, 1): m[1][1]})
    return form.substitute([x0, x1])


class MumfordClass:
    """A reduced divisor class (u, v) on an odd model."""

    __slots__ = ("model", "u", "v")

    def __init__(self, model, u, v):
        if u.is_zero() or u.lead() != model.field.one:
            raise ValueError("u must be monic")
        if u.degree > model.g:
            raise ValueError("not reduced: deg u > g")
        if u.degree == 0:
            if not v.is_zero():
                raise ValueError("v must vanish when u is constant")
        elif not v.is_zero() and v.degree >= u.degree:
            raise ValueError("v must be reduced mod u")
        if not ((v * v - model.fodd) % u).is_zero():
            raise ValueError("u does not divide v^2 - f")
        self.model = model
        self.u = u
        self.v = v

    def is_zero(self):
        return self.u.degree == 0

    def __add__(self, other):
        return cantor_add(self, other)

    def __neg__(self):
        u = self.u
        return MumfordClass(self.model, u, (-self.v) % u if u.degree else self.v)

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return (-n) * (-self)
        acc = self.model.zero_class()
        base = self
        while n:
            if n & 1:
                acc = acc + base
            base = base + base
            n >>= 1
        return acc

    def __eq__(self, other):
        if not isinstance(other, MumfordClass):
            return NotImplemented
        return (self.model.fodd == other.model.fodd
                and self.u == other.u and self.v == other.v)

    def __hash__(self):
        return hash((tuple(self.u.c), tuple(self.v.c)))

    def __repr__(self):
        return "MumfordClass(u=%s, v=%s)" % (self.u, self.v)

    def to_json(self):
        return {"u": parsing.format_univar(self.u),
                "v": parsing.format_univar(self.v)}

    @classmethod
    def from_json(cls, data, model):
        u = parsing.parse_univar(data["u"], model.field)
        v = parsing.parse_univar(data["v"], model.field)
        return model.semireduced(u, v)


def cantor_add(c1, c2):
    """Composition and reduction of two reduced Mumford pairs."""
    if c1.model is not c2.model and c1.model.fodd != c2.model.fodd:
        raise ValueError("classes live on different curves")
    model = c1.model
    f = model.fodd
    u1, v1, u2, v2 = c1.u, c1.v, c2.u, c2.v
    d0, e1, e2 = poly_xgcd(u1, u2)
    if d0.is_zero():
        raise ValueError("invalid Mumford pairs")
    d, c1_, c2_ = poly_xgcd(d0, v1 + v2)
    s1 = c1_ * e1
    s2 = c1_ * e2
    s3 = c2_
    u = (u1 * u2).exact_div(d * d)
    num = s1 * u1 * v2 + s2 * u2 * v1 + s3 * (v1 * v2 + f)
    v = num.exact_div(d) % u
    return _reduce(model, u.monic(), v)


def _reduce(model, u, v):
    f = model.fodd
    g = model.g
    while u.degree > g:
        u = (f - v * v).exact_div(u)
        u = u.monic()
        v = (-v) % u if u.degree else Poly.zero(model.field)
    return MumfordClass(model, u.monic(), v)


def class_order(c, bound=512):
    """The order of a class in the Jacobian, by iterated addition."""
    acc = c
    for n in range(1, bound + 1):
        if acc.is_zero():
            return n
        acc = acc + c
    raise ValueError("class order exceeds bound %d" % bound)


# ---------------------------------------------------------------------------
# Riemann-Roch spaces on the odd model


class RRFunction:
    """A function (A + B y) / u on an odd model."""

    __slots__ = ("model", "A", "B", "den")

    def __init__(self, model, A, B, den):
        self.model = model
        self.A = A
        self.B = B
        self.den = den

    def __repr__(self):
        return "(%s + (%s)*y) / (%s)" % (self.A, self.B, self.den)


def rr_space(model, u, v, k):
    """Basis of L(D + k*inf) for the semireduced affine divisor D = (u, v).

    Functions are (A + B y)/u with A = B v mod u plus a polynomial
    multiple of u; the basis consists of powers of x and of
    x^i (v + y)-type generators whose pole at infinity fits the budget.
    deg D + k < 0 returns the empty list.
    """
    field = model.field
    g = model.g
    d = u.degree
    basis = []
    for j in range(0, k // 2 + 1 if k >= 0 else 0):
        basis.append(RRFunction(model, Poly.x(field) ** j * u, Poly.zero(field), u))
    i = 0
    while 2 * i + 2 * g + 1 - 2 * d <= k:
        B = Poly.x(field) ** i
        A = (B * v) % u if d > 0 else Poly.zero(field)
        pole = max(2 * A.degree if not A.is_zero() else -1,
                   2 * i + 2 * g + 1) - 2 * d
        if pole <= k:
            basis.append(RRFunction(model, A, B, u))
        i += 1
    return basis


def rr_dim(model, u, v, k):
    return len(rr_space(model, u, v, k))


def rr_dim_zeros(model, u, v, t):
    """dim L(t*inf - D) for the semireduced divisor D = (u, v): functions
    regular away from infinity, with pole at most t there, vanishing on D."""
    field = model.field
    g = model.g
    d = u.degree
    if t < 0:
        return 0
    # A + B y with A = -(B v mod u) + u C, pole max(2 deg A, 2 deg B + 2g+1) <= t
    db = (t - 2 * g - 1) // 2
    dc = t // 2 - d
    nb = db + 1 if db >= 0 else 0
    nc = dc + 1 if dc >= 0 else 0
    if nb + nc == 0:
        return 0
    # columns: B coeffs then C coeffs; constraints: coefficients of A above t/2
    damax = max(t // 2, d + max(dc, 0))
    rows = []
    cols = []
    for s in range(nb):
        A = -((Poly.x(field) ** s * v) % u) if d > 0 else Poly.zero(field)
        cols.append(A)
    for s in range(nc):
        cols.append(u * Poly.x(field) ** s)
    ncols = len(cols)
    for c in range(t // 2 + 1, damax + 1):
        rows.append([col.coeff(c) for col in cols])
    if not rows:
        return ncols
    return ncols - linalg.rank(rows)


# ---------------------------------------------------------------------------
# dictionary between classes and pairs


def class_from_matrix(pair, rng=None):
    """The divisor class of a degree-zero pair, as a reduced Mumford pair
    on the odd model of the pair's curve."""
    ring = pair.ring
    field = ring.field
    g = ring.l - 1
    curve = HECurve(field, g, ring.F)
    model = curve.odd_model()
    if pair.is_trivial():
        return model.zero_class()
    if pair.a + pair.b != g + 1:
        raise ValueError("class extraction needs a degree-zero pair")
    # move the pair into odd-model coordinates
    PT = model.transform_form(pair.P)
    fT = model.transform_form(pair.f)
    qT = model.transform_form(pair.q)
    pairT = BundlePair(DoubleCoverRing(field, g + 1, model.transform_form(ring.F)),
                       pair.a, pair.b, PT, fT, qT, normalize=False)
    sections = [(HForm.const(field, 2, field.one), 0)]
    if pair.a == pair.b:
        sections.append((0, HForm.const(field, 2, field.one)))
        lam = field.of(1)
        if rng is not None:
            lam = field.random_nonzero(rng)
        sections.append((HForm.const(field, 2, field.one),
                         HForm.const(field, 2, lam)))
    last_err = None
    for alpha, beta in sections:
        try:
            uform, vpoly = divisor_of_section(pairT, pairT.a, alpha, beta)
        except (DegenerateSectionError, ValueError) as e:
            last_err = e
            continue
        ua = uform.to_univar()
        if ua.is_zero():
            continue
        # the eigenvalue of N on the section is the z-value at the
        # conjugate point, so the vanishing divisor carries -v
        return model.semireduced(ua.monic(), -vpoly)
    raise DegenerateSectionError("all candidate sections were degenerate: %s" % last_err)


def stratum(pair, rng=None):
    """The splitting type (a, b) of a degree-zero pair, cross-checked
    against Riemann-Roch dimensions of its divisor class."""
    c = class_from_matrix(pair, rng=rng)
    model = c.model
    g = model.g
    d = c.u.degree
    a = None
    for m in range(0, g + 2):
        if rr_dim(model, c.u, c.v, 2 * m - d) > 0:
            a = m
            break
    if a is None:
        raise ValueError("no section found in the expected twist range")
    if (pair.a, pair.b) != (a, g + 1 - a):
        raise AssertionError("splitting (%d, %d) disagrees with Riemann-Roch (%d, %d)"
                             % (pair.a, pair.b, a, g + 1 - a))
    return (a, g + 1 - a)


def matrix_from_class(curve, c):
    """The trace-free pair of a reduced divisor class on curve's odd model."""
    field = curve.field
    g = curve.g
    ring = curve.ring()
    model = curve.odd_model()
    if c.is_zero():
        return ring.trivial_pair()
    d = c.u.degree
    u, v = c.u, c.v
    a = None
    for m in range(0, g + 2):
        Vm = rr_space(model, u, v, 2 * m - d)
        if Vm:
            a = m
            break
    b = g + 1 - a
    Va = rr_space(model, u, v, 2 * a - d)
    Vb = rr_space(model, u, v, 2 * b - d)
    e1 = Va[0]
    if a < b:
        e2 = _complement(field, model, Vb, e1, b - a)
    else:
        if len(Va) < 2:
            raise ValueError("balanced stratum without a two-dimensional section space")
        e2 = Va[1]
    # solve y e1 = P e1 + q e2 and y e2 = f e1 - P e2 with
    # deg P <= g+1, deg q <= 2a, deg f <= 2b
    P_aff, q_aff = _solve_y_action(field, model, u, e1, e1, e2, g + 1, 2 * a)
    f_aff, D_aff = _solve_y_action(field, model, u, e2, e1, e2, 2 * b, g + 1)
    if not (P_aff + D_aff).is_zero():
        raise AssertionError("y-action is not trace free on the chosen basis")
    P = HForm.from_univar(P_aff, g + 1)
    q = HForm.from_univar(q_aff, 2 * a)
    f = HForm.from_univar(f_aff, 2 * b)
    Pb = model.untransform_form(P)
    qb = model.untransform_form(q)
    fb = model.untransform_form(f)
    return BundlePair(ring, a, b, Pb, fb, qb)


def _mul_y(model, fn):
    """Multiply an RRFunction by y."""
    return RRFunction(model, fn.B * model.fodd, fn.A, fn.den)


def _fn_coords(fn, dA, dB):
    """Coefficient vector of (A, B) padded to degrees dA, dB."""
    return ([fn.A.coeff(i) for i in range(dA + 1)]
            + [fn.B.coeff(i) for i in range(dB + 1)])


def _complement(field, model, Vb, e1, shift):
    """A member of Vb independent of x^j e1, j = 0..shift."""
    x = Poly.x(field)
    cands = [RRFunction(model, e1.A * x ** j, e1.B * x ** j, e1.den)
             for j in range(shift + 1)]
    dA = max([f.A.degree for f in cands + Vb if not f.A.is_zero()] + [0])
    dB = max([f.B.degree for f in cands + Vb if not f.B.is_zero()] + [0])
    span = [_fn_coords(f, dA, dB) for f in cands]
    r0 = linalg.rank(span)
    for f in Vb:
        if linalg.rank(span + [_fn_coords(f, dA, dB)]) > r0:
            return f
    raise ValueError("no complement found in section space")


def _solve_y_action(field, model, u, src, e1, e2, deg1, deg2):
    """Write y*src = p1(x) e1 + p2(x) e2 with deg p1 <= deg1 and
    deg p2 <= deg2, by an exact linear solve on numerator coefficients.
    Returns (p1, p2)."""
    target = _mul_y(model, src)
    x = Poly.x(field)
    cols = []
    for j in range(deg1 + 1):
        cols.append(RRFunction(model, e1.A * x ** j, e1.B * x ** j, u))
    for j in range(deg2 + 1):
        cols.append(RRFunction(model, e2.A * x ** j, e2.B * x ** j, u))
    allf = cols + [target]
    dA = max([f.A.degree for f in allf if not f.A.is_zero()] + [0])
    dB = max([f.B.degree for f in allf if not f.B.is_zero()] + [0])
    mat = [_fn_coords(f, dA, dB) for f in cols]
    rhs = _fn_coords(target, dA, dB)
    # transpose to equations-per-coefficient
    rows = [[mat[c][r] for c in range(len(cols))] for r in range(len(rhs))]
    sol = linalg.solve(rows, rhs, field)
    if sol is None:
        raise ValueError("y-action does not close on the chosen basis")
    return Poly(field, sol[:deg1 + 1]), Poly(field, sol[deg1 + 1:])


# ---------------------------------------------------------------------------
# torsion certificates


def torsion_matrix(pair, n):
    """The band matrix whose rank deficiency certifies n-torsion.

    Rows are indexed by coefficient blocks c_i, i = 0..n, of degrees
    i*a + (n-i)*b - 2; columns by target blocks k = 0..n-2 of degrees
    (k+2)*a + (n-k)*b - 2.  Block (i, k) carries the coefficient band of
    f when i = k+2, of -2P when i = k+1, of -q when i = k.
    """
    if n < 2:
        raise ValueError("torsion index must be at least 2")
    a, b = pair.a, pair.b
    field = pair.ring.field
    fc = _form_coeffs(pair.f)
    pc = [x * field.of(-2) for x in _form_coeffs(pair.P)]
    qc = [-x for x in _form_coeffs(pair.q)]
    row_blocks = [i * a + (n - i) * b - 2 for i in range(n + 1)]
    col_blocks = [(k + 2) * a + (n - k) * b - 2 for k in range(n - 1)]
    rows = sum(db + 1 for db in row_blocks if db >= 0)
    cols = sum(db + 1 for db in col_blocks if db >= 0)
    M = [[field.zero] * cols for _ in range(rows)]
    roff = []
    pos = 0
    for db in row_blocks:
        roff.append(pos)
        if db >= 0:
            pos += db + 1
    coff = []
    pos = 0
    for db in col_blocks:
        coff.append(pos)
        if db >= 0:
            pos += db + 1
    for k in range(n - 1):
        if col_blocks[k] < 0:
            continue
        for i, band in ((k + 2, fc), (k + 1, pc), (k, qc)):
            if row_blocks[i] < 0:
                continue
            for s in range(row_blocks[i] + 1):
                for t, coefv in enumerate(band):
                    cidx = s + t
                    if cidx <= col_blocks[k] and coefv:
                        M[roff[i] + s][coff[k] + cidx] = \
                            M[roff[i] + s][coff[k] + cidx] + coefv
    return M


def _form_coeffs(form):
    """Full homogeneous coefficient list of a binary form, x0-power order."""
    u = form.to_univar()
    return [u.coeff(i) for i in range(form.deg + 1)]


def is_n_torsion(pair, n):
    """True when n times the pair's class is trivial, certified by the
    rank of the torsion band matrix."""
    if pair.is_trivial():
        return True
    M = torsion_matrix(pair, n)
    cols = len(M[0]) if M else 0
    if cols == 0:
        return True
    return linalg.rank(M) < cols


def sym_power_pushforward(pair, n):
    """Splitting type of the pushforward of the n-th power of the pair's
    line bundle, via iterated tensor, with Chern class bookkeeping."""
    if n < 1:
        raise ValueError("power must be positive")
    acc = pair
    for _ in range(n - 1):
        acc = tensor(acc, pair)
    s = pair.a + pair.b
    lhs = -s * (n * (n + 1) // 2)
    if n >= 2:
        k2 = -s - pair.ring.l
        lhs -= -s * ((n - 2) * (n - 1) // 2) + (n - 1) * k2
    if lhs != acc.c1():
        raise AssertionError("Chern class bookkeeping failed for the symmetric power")
    return acc.splitting


def enumerate_two_torsion(curve):
    """All nontrivial 2-torsion pairs of a curve with split branch form.

    Each pair has P = 0 and q a product of an even number of branch
    factors; complementary factor sets give the same pair and are
    deduplicated.  The count is 2^(2g) - 1.
    """
    field = curve.field
    g = curve.g
    factors = _split_linear_factors(curve.F)
    if factors is None:
        raise ValueError("branch form does not split over the base field")
    n = len(factors)
    out = []
    seen = set()
    ring = curve.ring()
    for a in range(1, (g + 1) // 2 + 1):
        for S in itertools.combinations(range(n), 2 * a):
            key = frozenset(S)
            comp = frozenset(range(n)) - key
            if 2 * a == g + 1 and comp in seen:
                continue
            seen.add(key)
            q = HForm.const(field, 2, field.one)
            f = HForm.const(field, 2, field.one)
            for i in range(n):
                if i in S:
                    q = q * factors[i]
                else:
                    f = f * factors[i]
            out.append(BundlePair(ring, a, g + 1 - a, HForm.zero(field, 2, g + 1), f, q))
    return out


def _split_linear_factors(F):
    """Linear factors of a split binary form, or None if it does not split."""
    field = F.field
    u = F.to_univar()
    k = F.x1_multiplicity()
    factors = [HForm(field, 2, 1, {(0, 1): field.one})] * k
    lead = u.lead()
    roots = []
    p = u
    if field.characteristic:
        for vv in range(field.characteristic):
            x = field.of(vv)
            while p.degree > 0 and not p(x):
                roots.append(x)
                p = p.exact_div(Poly(field, [-x, field.one]))
    else:
        from fractions import Fraction
        import math
        changed = True
        while changed and p.degree > 0:
            changed = False
            den = math.lcm(*[Fraction(cc).denominator for cc in p.c])
            ic = [int(Fraction(cc) * den) for cc in p.c]
            lo = next(cc for cc in ic if cc)
            hi = ic[-1]
            for pp in _divisors(abs(lo)) | {0}:
                for qq in _divisors(abs(hi)):
                    for sgn in (1, -1):
                        x = Fraction(sgn * pp, qq)
                        if p.degree > 0 and not p(x):
                            roots.append(x)
                            p = p.exact_div(Poly(field, [-x, field.one]))
                            changed = True
    if p.degree > 0:
        return None
    for r in roots:
        factors.append(HForm(field, 2, 1, {(1, 0): field.one, (0, 1): -r}))
    # fold the leading unit into the first factor
    factors[0] = factors[0] * lead
    return factors


# ---------------------------------------------------------------------------
# small-field brute force oracle


def enumerate_jacobian(model, limit=20000):
    """All reduced Mumford classes over a small prime field.

    Used as an independent oracle for the group law; refuses to run when
    the state space is too large.
    """
    field = model.field
    p = field.characteristic
    if not p:
        raise ValueError("enumeration needs a finite field")
    g = model.g
    if p ** (2 * g) > limit:
        raise ValueError("field too large for brute-force enumeration")
    out = [model.zero_class()]
    for d in range(1, g + 1):
        for uc in itertools.product(range(p), repeat=d):
            u = Poly(field, [field.of(c) for c in uc] + [field.one])
            for vc in itertools.product(range(p), repeat=d):
                v = Poly(field, [field.of(c) for c in vc])
                if ((v * v - model.fodd) % u).is_zero():
                    try:
                        out.append(MumfordClass(model, u, v))
                    except ValueError:
                        pass
    return out

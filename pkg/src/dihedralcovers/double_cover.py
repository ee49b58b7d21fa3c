"""Rank-one modules on a double cover of the line, as trace-free matrices.

The cover is Spec of R = O + z O(-l) with z^2 = F for a binary form F
of degree 2l.  A line bundle on the cover pushes down to a rank-two
bundle E = O(-a) + O(-b) on the line, and the action of z is a
trace-free graded matrix

    N = [[P, f], [q, -P]],   N^2 = F * Id,

so P^2 + q f = F with deg P = l, deg f = l - a + b, deg q = l + a - b.
A :class:`BundlePair` stores (a, b, P, f, q) over a
:class:`DoubleCoverRing` and normalizes q (or f, when q vanishes) to be
monic, which is the scaling freedom of the choice of basis.

Operations:

* ``tensor`` multiplies two modules by presenting the product as the
  cokernel of psi = N1 (x) Id - Id (x) N2 and reading the z-action off a
  kernel basis of the transpose;
* ``inverse`` flips the sign of P, which realizes the dual module up to
  the standard twist;
* ``is_isomorphic`` solves the intertwining equation exactly and
  decides whether the solution space contains an invertible element by
  evaluating the determinant quadratic form on a basis and on pairwise
  sums (valid in characteristic != 2);
* ``divisor_of_section`` returns the vanishing divisor of a global
  section in (u, v) coordinates.

Rings whose branch form F is not squarefree describe non-normal covers;
module operations that presuppose invertibility refuse to run on them.
"""

from .homog import HForm
from .poly import Poly
from .graded import GradedMatrix, kernel_basis
from . import linalg, parsing


class NonNormalRingError(ValueError):
    """Raised when an operation needs a squarefree branch form."""


class DegenerateSectionError(ValueError):
    """Raised when a section lies in a z-eigenline, so its divisor is
    not given by a finite scheme of the expected length."""


class DoubleCoverRing:
    """R = O + z O(-l), z^2 = F, with F a binary form of degree 2l."""

    def __init__(self, field, l, F):
        if field.characteristic == 2:
            raise ValueError("characteristic 2 is not supported")
        if F.nvars != 2 or F.deg != 2 * l:
            raise ValueError("branch form must be binary of degree %d" % (2 * l))
        if F.is_zero():
            raise ValueError("branch form must be nonzero")
        self.field = field
        self.l = l
        self.F = F
        self.is_normal = F.is_squarefree()

    def require_normal(self, what):
        if not self.is_normal:
            raise NonNormalRingError(
                "%s needs a squarefree branch form (normal cover)" % what)

    def trivial_pair(self):
        """The structure sheaf as a module over itself: N = [[0, F], [1, 0]]."""
        return BundlePair(self, 0, self.l,
                          HForm.zero(self.field, 2, self.l),
                          self.F,
                          HForm.const(self.field, 2, self.field.one))

    def __eq__(self, other):
        return (isinstance(other, DoubleCoverRing) and other.field == self.field
                and other.l == self.l and other.F == self.F)

    def __repr__(self):
        return "DoubleCoverRing(l=%d, F=%s)" % (self.l, self.F)

    def to_json(self):
        return {"l": self.l, "F": parsing.format_form(self.F)}

    @classmethod
    def from_json(cls, data, field):
        l = int(data["l"])
        return cls(field, l, parsing.parse_form(data["F"], field, 2))


class BundlePair:
    """A trace-free matrix presentation (a, b, P, f, q) of a rank-one
    module on a double cover ring."""

    __slots__ = ("ring", "a", "b", "P", "f", "q")

    def __init__(self, ring, a, b, P, f, q, normalize=True):
        field = ring.field
        l = ring.l
        if a > b:
            a, b = b, a
            P = -P
            f, q = q, f
        deg_f = l - a + b
        deg_q = l + a - b
        P = _as_form(field, P, l)
        f = _as_form(field, f, deg_f)
        q = _as_form(field, q, deg_q) if deg_q >= 0 else _zero_or_raise(field, q)
        if P.deg != l and not P.is_zero():
            raise ValueError("P must have degree %d" % l)
        check = P * P + q * f if deg_q >= 0 else P * P
        if deg_q < 0:
            check = check + _lift_zero(field, 2 * l)
        if check != ring.F:
            raise ValueError("determinant constraint P^2 + q*f = F violated")
        self.ring = ring
        self.a = a
        self.b = b
        self.P = P
        self.f = f
        self.q = q
        if normalize:
            self._normalize()

    def _normalize(self):
        field = self.ring.field
        if not self.q.is_zero():
            lead = self.q.to_univar().lead()
        elif not self.f.is_zero():
            lead = self.f.to_univar().lead()
        else:
            return
        if lead == field.one:
            return
        inv = field.inv(lead)
        # conjugating by diag(1, lead) scales q by 1/lead and f by lead
        if not self.q.is_zero():
            self.q = self.q * inv
            self.f = self.f * lead
        else:
            self.f = self.f * inv
            self.q = self.q * lead

    @property
    def splitting(self):
        return (-self.a, -self.b)

    def degrees(self):
        return {"P": self.P.deg, "f": self.f.deg, "q": self.q.deg}

    def matrix(self):
        """The z-action E(-L) -> E as a graded matrix."""
        l = self.ring.l
        rows = [self.a, self.b]
        cols = [self.a + l, self.b + l]
        return GradedMatrix(self.ring.field, rows, cols,
                            [[self.P, self.f], [self.q, -self.P]])

    def validate(self):
        """Re-check all structural invariants; raises on violation."""
        m = self.matrix()
        sq = m.compose(m.twist(self.ring.l))
        F = self.ring.F
        for i in range(2):
            for j in range(2):
                want = F if i == j else HForm.zero(self.ring.field, 2, F.deg)
                got = sq.entry(i, j)
                if (got - want if got.deg == want.deg else got):
                    raise ValueError("z-action does not square to F")
        return True

    def is_locally_free(self):
        """True when the module is invertible: the entries have no
        common zero on the branch locus."""
        self.ring.require_normal("local freeness test")
        h = _form_gcd(self.P, _form_gcd(self.q, self.f))
        if h is None:
            return False          # zero matrix cannot happen over a field, guard anyway
        g = _form_gcd(h, self.ring.F)
        return g is not None and g.deg == 0 and g.x1_multiplicity() == 0

    def is_trivial(self):
        return self.a == 0 and self.P.is_zero() and self.q.deg == 0

    def c1(self):
        return -self.a - self.b

    def __eq__(self, other):
        if not isinstance(other, BundlePair):
            return NotImplemented
        return (self.ring == other.ring and self.a == other.a and self.b == other.b
                and self.P == other.P and self.f == other.f and self.q == other.q)

    def __repr__(self):
        return "BundlePair(a=%d, b=%d, P=%s, f=%s, q=%s)" % (
            self.a, self.b, self.P, self.f, self.q)

    def to_json(self):
        return {"a": self.a, "b": self.b,
                "P": parsing.format_form(self.P),
                "f": parsing.format_form(self.f),
                "q": parsing.format_form(self.q)}

    @classmethod
    def from_json(cls, data, ring):
        field = ring.field
        return cls(ring, int(data["a"]), int(data["b"]),
                   parsing.parse_form(data["P"], field, 2),
                   parsing.parse_form(data["f"], field, 2),
                   parsing.parse_form(data["q"], field, 2))


def _as_form(field, val, deg):
    if isinstance(val, HForm):
        if val.is_zero() and val.deg != deg:
            return HForm.zero(field, 2, deg)
        return val
    if isinstance(val, int):
        if val == 0:
            return HForm.zero(field, 2, deg)
        if deg == 0:
            return HForm.const(field, 2, val)
    raise ValueError("expected a binary form of degree %d" % deg)


def _zero_or_raise(field, val):
    f = val if isinstance(val, HForm) else HForm.zero(field, 2, 0)
    if not f.is_zero():
        raise ValueError("entry of negative forced degree must vanish")
    return HForm.zero(field, 2, 0)


def _lift_zero(field, deg):
    return HForm.zero(field, 2, deg)


def _form_gcd(A, B):
    """Gcd of two binary forms, tracking the x1 content; None if both zero."""
    if A.is_zero() and B.is_zero():
        return None
    if A.is_zero():
        return B
    if B.is_zero():
        return A
    from .poly import poly_gcd
    g = poly_gcd(A.to_univar(), B.to_univar())
    k = min(A.x1_multiplicity(), B.x1_multiplicity())
    return HForm.from_univar(g, g.degree + k)


def tensor(p1, p2):
    """The product module of two pairs over the same ring.

    The product is the cokernel of psi = N1 (x) Id - Id (x) N2 acting on
    the tensor of the underlying bundles; its dual is the kernel of the
    transpose, which a graded kernel basis computes exactly.  The
    z-action is read off by factoring (N1 (x) Id)^T through the kernel.
    """
    if p1.ring != p2.ring:
        raise ValueError("pairs live over different rings")
    ring = p1.ring
    ring.require_normal("tensor product")
    field = ring.field
    l = ring.l
    rows = [p1.a + p2.a, p1.a + p2.b, p1.b + p2.a, p1.b + p2.b]
    cols = [r + l for r in rows]

    def pad(entries):
        """Resize zero entries to the forced degree of their slot."""
        out = []
        for i in range(4):
            row = []
            for j in range(4):
                e = entries[i][j]
                d = cols[j] - rows[i]
                row.append(HForm.zero(field, 2, max(d, 0)) if e is None or e.is_zero() else e)
            out.append(row)
        return out

    P1, f1, q1 = p1.P, p1.f, p1.q
    a_ent = pad([
        [P1, None, f1, None],
        [None, P1, None, f1],
        [q1, None, -P1, None],
        [None, q1, None, -P1],
    ])
    P2, f2, q2 = p2.P, p2.f, p2.q
    b_ent = pad([
        [P2, f2, None, None],
        [q2, -P2, None, None],
        [None, None, P2, f2],
        [None, None, q2, -P2],
    ])
    psi_ent = [[a_ent[i][j] - b_ent[i][j] for j in range(4)] for i in range(4)]
    psi = GradedMatrix(field, rows, cols, psi_ent)
    K = kernel_basis(psi.transpose())
    if K.ncols != 2:
        raise ValueError("product module is not locally free of rank one")
    A = GradedMatrix(field, rows, cols, a_ent)          # N1 (x) Id
    AtK = A.transpose().compose(K)
    # factor: K(-l) . M = At . K, with M the z-action on the kernel
    KmL = K.twist(-l)
    M = _factor_through(KmL, AtK)
    N3 = M.twist(l).transpose().twist(l)
    tw = N3.row_twists
    a3, b3 = tw[0], tw[1]
    P3, f3, q3 = N3.entry(0, 0), N3.entry(0, 1), N3.entry(1, 0)
    minusP3 = N3.entry(1, 1)
    if (P3 + minusP3):
        raise AssertionError("tensor z-action is not trace free")
    res = BundlePair(ring, a3, b3, P3, f3, q3)
    if res.c1() != p1.c1() + p2.c1() - ring.trivial_pair().c1():
        raise AssertionError("first Chern class bookkeeping failed in tensor")
    return res


def _factor_through(K, B):
    """Solve K . M = B for a graded matrix M, given that K has full
    column rank; coefficient-wise exact linear solve."""
    field = K.field
    if K.row_twists != B.row_twists:
        raise ValueError("row twist mismatch")
    m_rows = K.col_twists
    m_cols = B.col_twists
    Ku = K.univar()
    Bu = B.univar()
    ent = []
    for i in range(len(m_rows)):
        ent.append([None] * len(m_cols))
    for j, ct in enumerate(m_cols):
        # unknown column: entries M[k][j] of degree ct - m_rows[k]
        offs = []
        pos = 0
        for rt in m_rows:
            d = ct - rt
            offs.append((pos, d))
            if d >= 0:
                pos += d + 1
        rows_eq = []
        rhs = []
        for i, rt in enumerate(K.row_twists):
            dtar = ct - rt
            bpoly = Bu[i][j]
            for c in range(max(dtar, bpoly.degree if bpoly else -1) + 1):
                row = [field.zero] * pos
                for k, (o, d) in enumerate(offs):
                    if d < 0:
                        continue
                    e = Ku[i][k]
                    for s in range(d + 1):
                        a = e.coeff(c - s)
                        if a:
                            row[o + s] = row[o + s] + a
                rows_eq.append(row)
                rhs.append(bpoly.coeff(c))
        sol = linalg.solve(rows_eq, rhs, field) if rows_eq else [field.zero] * pos
        if sol is None:
            raise ValueError("factorization through kernel failed")
        for k, (o, d) in enumerate(offs):
            if d >= 0:
                p = Poly(field, [sol[o + s] for s in range(d + 1)])
                ent[k][j] = HForm.from_univar(p, d)
            else:
                ent[k][j] = HForm.zero(field, 2, 0)
    return GradedMatrix(field, m_rows, m_cols, ent)


def inverse(pair):
    """The inverse module: same splitting with P negated."""
    pair.ring.require_normal("inverse")
    return BundlePair(pair.ring, pair.a, pair.b, -pair.P, pair.f, pair.q)


def is_isomorphic(p1, p2):
    """Exact isomorphism test for two pairs over the same ring.

    Solves the intertwining equation Psi N1 = N2 Psi(-L) for graded Psi
    and decides invertibility on the solution space.  det Psi is
    homogeneous of degree zero, hence a quadratic form Q in the solution
    coordinates; Q is nonzero on the space iff it is nonzero at a basis
    vector or a sum of two (characteristic != 2).
    """
    if p1.ring != p2.ring:
        raise ValueError("pairs live over different rings")
    p1.ring.require_normal("isomorphism test")
    if (p1.a, p1.b) != (p2.a, p2.b):
        return False
    field = p1.ring.field
    l = p1.ring.l
    src = [p1.a, p1.b]
    tgt = [p2.a, p2.b]
    # unknown Psi entries: deg src[j] - tgt[i], negative -> zero
    degs = [[src[j] - tgt[i] for j in range(2)] for i in range(2)]
    offs = {}
    pos = 0
    for i in range(2):
        for j in range(2):
            d = degs[i][j]
            if d >= 0:
                offs[(i, j)] = (pos, d)
                pos += d + 1
    n1 = [[p1.P, p1.f], [p1.q, -p1.P]]
    n2 = [[p2.P, p2.f], [p2.q, -p2.P]]
    n1u = [[e.to_univar() for e in r] for r in n1]
    n2u = [[e.to_univar() for e in r] for r in n2]
    rows_eq = []
    # equation entry (i, j): sum_k Psi[i][k] n1[k][j] - n2[i][k] Psi[k][j] = 0,
    # a form of degree src[j] + l - tgt[i]
    for i in range(2):
        for j in range(2):
            dtar = src[j] + l - tgt[i]
            for c in range(dtar + 1):
                row = [field.zero] * pos
                for k in range(2):
                    if (i, k) in offs:
                        o, d = offs[(i, k)]
                        e = n1u[k][j]
                        for s in range(d + 1):
                            a = e.coeff(c - s)
                            if a:
                                row[o + s] = row[o + s] + a
                    if (k, j) in offs:
                        o, d = offs[(k, j)]
                        e = n2u[i][k]
                        for s in range(d + 1):
                            a = e.coeff(c - s)
                            if a:
                                row[o + s] = row[o + s] - a
                if any(row):
                    rows_eq.append(row)
    basis = linalg.nullspace(rows_eq, field) if rows_eq else [
        [field.one if t == u else field.zero for t in range(pos)] for u in range(pos)]
    if not basis:
        return False

    def det_of(vec):
        def ent(i, j):
            if (i, j) not in offs:
                return Poly.zero(field)
            o, d = offs[(i, j)]
            return Poly(field, [vec[o + s] for s in range(d + 1)])
        a_, b_, c_, d_ = ent(0, 0), ent(0, 1), ent(1, 0), ent(1, 1)
        det = a_ * d_ - b_ * c_
        return det.coeff(0) if not det.is_zero() else field.zero

    for i, v in enumerate(basis):
        if det_of(v):
            return True
        for w in basis[i + 1:]:
            if det_of([x + y for x, y in zip(v, w)]):
                return True
    return False


def divisor_of_section(pair, m, alpha, beta):
    """Vanishing divisor of the section (alpha, beta) of the pair
    twisted by m, in (u, v) coordinates.

    alpha must be a form of degree m - a and beta of degree m - b (zero
    allowed).  Returns (u, v): u is the binary form det(s | Ns), the
    norm form of the section, and v is the univariate polynomial of
    degree < deg u(x, 1) with z = v(x) on the divisor, reduced in the
    affine chart x1 = 1.  Raises DegenerateSectionError when u vanishes
    identically, and ValueError when no single v interpolates the
    z-values (the vanishing scheme is then not reduced in a compatible
    way).
    """
    ring = pair.ring
    ring.require_normal("divisor of a section")
    field = ring.field
    da, db = m - pair.a, m - pair.b
    alpha = _as_form(field, alpha, max(da, 0))
    beta = _as_form(field, beta, max(db, 0))
    if (not alpha.is_zero() and alpha.deg != da) or (not beta.is_zero() and beta.deg != db):
        raise ValueError("section degrees must be (%d, %d)" % (da, db))
    if alpha.is_zero() and beta.is_zero():
        raise ValueError("zero section has no divisor")
    udeg = 2 * m + ring.l - pair.a - pair.b
    u = HForm.zero(field, 2, udeg)
    for term in (pair.q * alpha * alpha,
                 -2 * (pair.P * alpha * beta),
                 -(pair.f * beta * beta)):
        if not term.is_zero():
            u = u + term
    if u.is_zero():
        raise DegenerateSectionError("section lies in a z-eigenline")
    ua = u.to_univar()
    d = ua.degree
    Pa, fa, qa = (pair.P.to_univar(), pair.f.to_univar(), pair.q.to_univar())
    aa, ba = alpha.to_univar(), beta.to_univar()
    if d == 0:
        return u, Poly.zero(field)
    # solve (P - v) alpha + f beta = 0 and q alpha - (P + v) beta = 0 mod u
    rows_eq = []
    rhs = []
    c1 = (Pa * aa + fa * ba) % ua
    c2 = (qa * aa - Pa * ba) % ua
    for target, mult in ((c1, aa), (c2, -1 * ba)):
        # v * mult = target (mod ua)
        cols = []
        for s in range(d):
            cols.append((Poly.x(field) ** s * mult) % ua)
        for c in range(d):
            rows_eq.append([col.coeff(c) for col in cols])
            rhs.append(target.coeff(c))
    sol = linalg.solve(rows_eq, rhs, field)
    if sol is None:
        raise ValueError("no z-value polynomial exists along the divisor")
    v = Poly(field, sol)
    return u, v

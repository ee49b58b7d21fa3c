"""Validation and numerical invariants of simple and almost-simple
dihedral covers.

A simple cover of degree 2n over a base with polarization L is cut out
by u v = F and u^n + v^n = 2a with a a section of nL and F of 2L.  Over
the projective plane with L = O(m) this module checks the two
construction hypotheses exactly:

(i)  the curve a^2 - F^n = 0 is smooth wherever F does not vanish, and
(ii) the curves a = 0 and F = 0 meet transversally in finitely many
     reduced points.

Condition (ii) gets a certificate: after a random linear change of
coordinates, the resultant of a and F with respect to the last variable
is a squarefree binary form.  Condition (i) is tested by projecting the
singular scheme of a^2 - F^n with iterated resultants of the partial
derivatives and certifying that every candidate point lies over the
common zeros of a and F.  Verdicts are "pass", "fail" or
"inconclusive"; a pass is always backed by an exact computation, never
by sampling alone.

Invariants for surfaces (the projective plane or abstract intersection
data) are computed twice, from the closed formulas

    K_X^2    = 2n (K_Y + nL)^2
    chi(O_X) = 2n chi(O_Y) + n(2n^2+1)/6 L.L + n^2/2 L.K_Y

and from the Riemann-Roch sum over the 2n line-bundle summands of the
pushforward of the structure sheaf; any disagreement is a hard error.
Classification reads the sign of the canonical pullback degree.

The normality criterion for covers over a hyperelliptic base reduces to
exact divisor-class arithmetic: with kappa the gcd of n and the indices
of the nonzero branch components, the cover is normal when kappa = 1 or
when the class (n/kappa) F1 - sum (k/kappa) D_k has order exactly kappa.
"""

import random
from fractions import Fraction

from .fields import QQ, GF
from .poly import Poly, poly_gcd, resultant, lagrange_interpolate
from .homog import HForm
from .hyperelliptic import class_from_matrix, class_order


class ProjectiveSpace:
    """Projective d-space polarized by O(m)."""

    def __init__(self, d, m):
        if d < 1 or m < 1:
            raise ValueError("need d >= 1 and m >= 1")
        self.d = d
        self.m = m

    def __repr__(self):
        return "ProjectiveSpace(d=%d, m=%d)" % (self.d, self.m)


class AbstractSurface:
    """A polarized surface given by its intersection numbers."""

    def __init__(self, chi, K2, KL, L2):
        self.chi = chi
        self.K2 = K2
        self.KL = KL
        self.L2 = L2

    def __repr__(self):
        return ("AbstractSurface(chi=%d, K2=%d, KL=%d, L2=%d)"
                % (self.chi, self.K2, self.KL, self.L2))


class SimpleCoverSpec:
    """Degree-2n simple cover data over the plane: a of degree n*m and
    F of degree 2m."""

    def __init__(self, n, base, a, F):
        if n < 2:
            raise ValueError("need n >= 2")
        self.n = n
        self.base = base
        self.a = a
        self.F = F
        if a is not None or F is not None:
            if not isinstance(base, ProjectiveSpace) or base.d != 2:
                raise ValueError("concrete sections need the projective plane")
            if a.nvars != 3 or F.nvars != 3:
                raise ValueError("sections must be ternary forms")
            if a.deg != n * base.m:
                raise ValueError("deg a = %d, expected %d" % (a.deg, n * base.m))
            if F.deg != 2 * base.m:
                raise ValueError("deg F = %d, expected %d" % (F.deg, 2 * base.m))


class AlmostSimpleSpec:
    """Almost-simple cover data: F of degree 2m, a_inf of degree e and
    a_0 of degree n*m + e."""

    def __init__(self, n, base, F, a0, ainf):
        if n < 2:
            raise ValueError("need n >= 2")
        self.n = n
        self.base = base
        self.F = F
        self.a0 = a0
        self.ainf = ainf
        if not isinstance(base, ProjectiveSpace) or base.d != 2:
            raise ValueError("concrete sections need the projective plane")
        if F.deg != 2 * base.m:
            raise ValueError("deg F = %d, expected %d" % (F.deg, 2 * base.m))
        self.e = ainf.deg
        if a0.deg != n * base.m + self.e:
            raise ValueError("deg a0 = %d, expected %d"
                             % (a0.deg, n * base.m + self.e))


# -- resultants of ternary forms ----------------------------------------


def resultant_wrt_last(f, g):
    """Resultant of two ternary forms with respect to x2, as a binary
    form in (x0, x1) of degree deg(f)*deg(g).

    Requires both forms to have full degree in x2 (their x2-leading
    coefficients are nonzero scalars), which a generic linear change of
    coordinates guarantees; computed by specializing x1 = 1 at enough
    values of x0 and interpolating.
    """
    cf = f.coeffs_in(2)
    cg = g.coeffs_in(2)
    if cf[f.deg].is_zero() or cg[g.deg].is_zero():
        raise ValueError("forms must have full degree in x2")
    field = f.field
    D = f.deg * g.deg
    xs, ys = [], []
    s = 0
    while len(xs) < D + 1:
        x = field.of(s)
        s += 1
        fu = Poly(field, [c((x, field.one)) for c in cf])
        gu = Poly(field, [c((x, field.one)) for c in cg])
        xs.append(x)
        ys.append(resultant(fu, gu))
    r = lagrange_interpolate(field, list(zip(xs, ys)))
    return HForm.from_univar(r, D)


def form_gcd(f, g):
    """Gcd of two binary forms, monic in the univariate chart."""
    if f.is_zero():
        return g
    if g.is_zero():
        return f
    u = poly_gcd(f.to_univar(), g.to_univar())
    mult = min(f.x1_multiplicity(), g.x1_multiplicity())
    return HForm.from_univar(u, u.degree + mult)


def radical_divides(h, r):
    """True when every projective root of the binary form h is a root
    of the binary form r (with any multiplicity)."""
    if h.is_zero():
        raise ValueError("zero form has every root")
    if h.deg == 0:
        return True
    if r.is_zero():
        return True
    if h.x1_multiplicity() >= 1 and r.x1_multiplicity() < 1:
        return False
    hu = h.to_univar()
    if hu.degree <= 0:
        return True
    ru = r.to_univar() % hu
    acc = Poly.one(h.field)
    for _ in range(hu.degree):
        acc = (acc * ru) % hu
    return acc.is_zero()


def random_coordinate_change(field, rng):
    """An invertible linear substitution with small integer entries."""
    while True:
        rows = [[rng.randint(-10, 10) for _ in range(3)] for _ in range(3)]
        det = (rows[0][0] * (rows[1][1] * rows[2][2] - rows[1][2] * rows[2][1])
               - rows[0][1] * (rows[1][0] * rows[2][2] - rows[1][2] * rows[2][0])
               + rows[0][2] * (rows[1][0] * rows[2][1] - rows[1][1] * rows[2][0]))
        if det:
            break
    images = []
    for i in range(3):
        t = {}
        for j in range(3):
            if rows[i][j]:
                e = [0, 0, 0]
                e[j] = 1
                t[tuple(e)] = field.of(rows[i][j])
        images.append(HForm(field, 3, 1, t))
    return images


def _full_x2_degree(form):
    c = form.coeffs_in(2)
    return not c[form.deg].is_zero()


# -- hypothesis checks --------------------------------------------------


class CheckReport:
    """Verdicts for the construction hypotheses of a cover spec."""

    def __init__(self, condition_i, condition_ii, irreducible, details, seed):
        self.condition_i = condition_i
        self.condition_ii = condition_ii
        self.irreducible = irreducible
        self.details = details
        self.seed = seed

    def passed(self):
        return self.condition_i == "pass" and self.condition_ii == "pass"

    def to_json(self):
        return {"conditionI": self.condition_i,
                "conditionII": self.condition_ii,
                "irreducible": self.irreducible,
                "details": self.details,
                "seed": self.seed}

    def __repr__(self):
        return "CheckReport(i=%s, ii=%s)" % (self.condition_i, self.condition_ii)


def check_simple(spec, seed=0, retries=5):
    """Check hypotheses (i) and (ii) for a simple cover over the plane.

    (ii) passes with an exact certificate: a squarefree resultant of a
    and F after a random coordinate change, confirmed by a Jacobian
    minor test at the common zeros over a prime field.  (ii) fails with
    a certificate when a and F share a component.  (i) passes when the
    projected singular candidates of a^2 - F^n all lie over the common
    zeros of a and F.  Exhausted randomization yields "inconclusive".
    """
    if spec.a is None or spec.F is None:
        raise ValueError("geometric checks need concrete sections")
    field = spec.a.field
    rng = random.Random(seed)
    n, m = spec.n, spec.base.m
    details = {}
    cond_ii = "inconclusive"
    cond_i = "inconclusive"
    for attempt in range(retries):
        images = random_coordinate_change(field, rng)
        a = spec.a.substitute(images)
        F = spec.F.substitute(images)
        if not (_full_x2_degree(a) and _full_x2_degree(F)):
            continue
        R = resultant_wrt_last(a, F)
        if R.is_zero():
            details["commonComponent"] = True
            cond_ii = "fail"
            break
        if cond_ii != "pass" and R.is_squarefree():
            if _jacobian_minor_check(spec.a, spec.F):
                cond_ii = "pass"
                details["resultantDegree"] = R.deg
            else:
                details["jacobianWitness"] = True
                cond_ii = "fail"
                break
        if cond_i != "pass":
            verdict = _singular_containment(a, F, R, n)
            if verdict is not None:
                cond_i = verdict
        if cond_i == "pass" and cond_ii == "pass":
            break
    irreducible = None
    if cond_ii == "pass":
        # two plane curves of positive degree always meet
        irreducible = True
        details["intersectionNonempty"] = True
    details["branchDegree"] = 2 * n * m
    details["cuspCount"] = 2 * n * m * m if cond_ii == "pass" else None
    return CheckReport(cond_i, cond_ii, irreducible, details, seed)


def _singular_containment(a, F, R, n):
    """Certify that the singular scheme of G = a^2 - F^n lies over the
    common zeros of a and F.  Returns "pass" or None (retry)."""
    G = a * a - F ** n
    parts = [G.partial(i) for i in range(3)]
    if any(p.is_zero() for p in parts):
        return None
    if not all(_full_x2_degree(p) for p in parts):
        return None
    r1 = resultant_wrt_last(parts[0], parts[1])
    r2 = resultant_wrt_last(parts[0], parts[2])
    if r1.is_zero() or r2.is_zero():
        return None
    h = form_gcd(r1, r2)
    if h.deg == 0:
        return "pass"
    return "pass" if radical_divides(h, R) else None


def _jacobian_minor_check(a, F, primes=(101, 211, 401)):
    """Scan the plane over a prime field for common zeros of a and F
    and require a nonvanishing 2x2 Jacobian minor at each of them."""
    for p in primes:
        K = GF(p)
        try:
            ap = _reduce_mod(a, K)
            Fp = _reduce_mod(F, K)
        except ZeroDivisionError:
            continue
        pa = [ap.partial(i) for i in range(3)]
        pF = [Fp.partial(i) for i in range(3)]
        for pt in _plane_points(K):
            if ap(pt) or Fp(pt):
                continue
            va = [g(pt) for g in pa]
            vF = [g(pt) for g in pF]
            minors = [va[i] * vF[j] - va[j] * vF[i]
                      for i in range(3) for j in range(i + 1, 3)]
            if not any(minors):
                return False
        return True
    return True


def _reduce_mod(form, K):
    return HForm(K, form.nvars, form.deg,
                 {e: K.of(c) for e, c in form.terms.items()})


def _plane_points(K):
    p = K.p
    for x in range(p):
        for y in range(p):
            yield (K.of(x), K.of(y), K.one)
    for x in range(p):
        yield (K.of(x), K.one, K.zero)
    yield (K.one, K.zero, K.zero)


def check_almost_simple(spec, seed=0, retries=5):
    """Check the almost-simple hypotheses.

    With a constant twisting section (e = 0) this is exactly the simple
    check.  For e >= 1 on the plane the divisors A_0 and A_inf have
    positive degrees, so they always intersect and the disjointness
    requirement fails; the report says so with the Bezout count.
    """
    n = spec.n
    if spec.e == 0:
        c = spec.ainf.coeff((0, 0, 0))
        scale = spec.a0.field.inv(c)
        simple = SimpleCoverSpec(n, spec.base, spec.a0 * scale, spec.F)
        return check_simple(simple, seed=seed, retries=retries)
    R = None
    field = spec.F.field
    rng = random.Random(seed)
    for attempt in range(retries):
        images = random_coordinate_change(field, rng)
        a0 = spec.a0.substitute(images)
        ainf = spec.ainf.substitute(images)
        if not (_full_x2_degree(a0) and _full_x2_degree(ainf)):
            continue
        R = resultant_wrt_last(a0, ainf)
        break
    details = {"disjointnessRequired": True,
               "bezoutIntersection": spec.a0.deg * spec.e}
    if R is not None and R.is_zero():
        details["commonComponent"] = True
    # a binary form of positive degree always has projective roots, so
    # A0 and Ainf meet and condition (i) cannot hold on the plane
    return CheckReport("fail", "inconclusive", None, details, seed)


# -- branch divisor and invariants --------------------------------------


def branch_divisor(spec):
    """The branch polynomial, its degree, and for transversal simple
    plane covers the count of the points a = F = 0.

    Returns a dict with keys "polynomial", "degree", "pointCount"
    (simple) or "factors", "degree" (almost-simple).
    """
    if isinstance(spec, AlmostSimpleSpec):
        inner = spec.a0 * spec.a0 - (spec.ainf * spec.ainf) * spec.F ** spec.n
        poly = spec.ainf * inner
        return {"factors": [spec.ainf, inner], "polynomial": poly,
                "degree": poly.deg}
    n, m = spec.n, spec.base.m
    out = {"degree": 2 * n * m, "pointCount": 2 * n * m * m}
    if spec.a is not None:
        out["polynomial"] = spec.F ** n - spec.a * spec.a
    return out


class InvariantReport:
    """Numerical invariants of a simple cover over a surface."""

    def __init__(self, n, omega_degree, K2, chi, pushforward_degrees,
                 branch_degree, cusp_count, label):
        self.n = n
        self.omega_degree = omega_degree
        self.K2 = K2
        self.chi = chi
        self.pushforward_degrees = pushforward_degrees
        self.branch_degree = branch_degree
        self.cusp_count = cusp_count
        self.label = label

    def to_json(self):
        return {"n": self.n, "omegaDegree": self.omega_degree,
                "K2": self.K2, "chi": self.chi,
                "pushforwardDegrees": self.pushforward_degrees,
                "branchDegree": self.branch_degree,
                "cuspCount": self.cusp_count, "label": self.label}

    def __repr__(self):
        return ("InvariantReport(n=%d, chi=%s, K2=%s, label=%s)"
                % (self.n, self.chi, self.K2, self.label))


def pushforward_degrees(n, m, e=0):
    """Twist degrees of the 2n line-bundle summands of the pushforward
    of the cover's structure sheaf."""
    degs = [0, -n * m - e]
    for i in range(1, n):
        degs.append(-i * m - e)
        degs.append(-(n - i) * m - e)
    return degs


def invariants(n, base):
    """Closed-formula invariants, cross-checked by the Riemann-Roch sum
    over the pushforward summands when the base is a surface."""
    if isinstance(base, ProjectiveSpace):
        m = base.m
        degs = pushforward_degrees(n, m)
        omega = n * m - (base.d + 1)
        if base.d != 2:
            report = InvariantReport(n, omega, None, None, degs,
                                     2 * n * m, None, None)
            report.label = classify(report)
            return report
        chi_y, K2_y, KL, L2 = 1, 9, -3 * m, m * m
        cusps = 2 * n * m * m
    else:
        chi_y, K2_y, KL, L2 = base.chi, base.K2, base.KL, base.L2
        m = None
        degs = pushforward_degrees(n, 1)
        omega = None
        cusps = None
    K2 = 2 * n * (K2_y + 2 * n * KL + n * n * L2)
    chi = (Fraction(2 * n) * chi_y + Fraction(n * (2 * n * n + 1), 6) * L2
           + Fraction(n * n, 2) * KL)
    if chi.denominator != 1:
        raise ArithmeticError("non-integral Euler characteristic")
    chi = int(chi)
    # Riemann-Roch cross-check over the pushforward summands
    if isinstance(base, ProjectiveSpace):
        rr = sum(1 + Fraction(t * (t + 3), 2) for t in degs)
    else:
        rr = sum(chi_y + Fraction(t * t, 2) * L2 - Fraction(t, 2) * KL
                 for t in [d for d in degs])
    if rr != chi:
        raise ArithmeticError("Euler characteristic mismatch: %s vs %s"
                              % (chi, rr))
    branch = 2 * n * m if m is not None else None
    report = InvariantReport(n, omega, K2, chi, degs, branch, cusps, None)
    report.label = classify(report)
    return report


def invariants_of_spec(spec):
    return invariants(spec.n, spec.base)


def classify(report):
    """Coarse classification from the sign of the canonical pullback."""
    w = report.omega_degree
    if w is None:
        return "other"
    if w == 0:
        if report.chi is not None and report.chi != 2:
            return "other"
        return "K3"
    if w < 0:
        return "del-Pezzo-like"
    return "general-type-minimal"


# -- normality over a hyperelliptic base --------------------------------


def normality_criterion(n, pair, components, order_bound=512):
    """Normality test for a dihedral cover built over a hyperelliptic
    curve from a divisorial sheaf F1 and branch components D_k.

    ``components`` is a list of (k, MumfordClass) with 1 <= k < n; the
    classes must be pairwise without common support.  With kappa the
    gcd of n and the labels of the nonzero components, the cover is
    normal exactly when kappa = 1 or the class
    (n/kappa) F1 - sum (k/kappa) D_k has order kappa.
    """
    import math
    ks = []
    classes = []
    for k, c in components:
        if not 1 <= k < n:
            raise ValueError("component label out of range")
        if c.is_zero():
            continue
        ks.append(k)
        classes.append((k, c))
    for i in range(len(classes)):
        for j in range(i + 1, len(classes)):
            ui = classes[i][1].u
            uj = classes[j][1].u
            if poly_gcd(ui, uj).degree > 0:
                raise ValueError("branch components share support")
    kappa = n
    for k in ks:
        kappa = math.gcd(kappa, k)
    if kappa == 1:
        return True
    c = (n // kappa) * class_from_matrix(pair)
    for k, d in classes:
        c = c - (k // kappa) * d
    order = class_order(c, bound=order_bound)
    return order == kappa


def building_data_degree_check(m, L_deg, D_degs):
    """Degree bookkeeping for cyclic building data: m*L must equal the
    weighted sum of the component degrees."""
    return m * L_deg == sum(i * d for i, d in enumerate(D_degs, start=1))


def dn_epimorphism_criterion(spec, seed=0, retries=5):
    """When the simple-cover hypotheses hold, the complement of the
    branch curve has a dihedral quotient of its fundamental group.

    Returns (verdict, explanation dict); no group computation is done,
    only the certified hypotheses plus the nonemptiness of a = F = 0,
    automatic on the plane.
    """
    report = check_simple(spec, seed=seed, retries=retries)
    ok = report.passed() and report.irreducible
    explanation = {
        "check": report.to_json(),
        "branchDegree": 2 * spec.n * spec.base.m,
        "conclusion": ("the complement of the branch curve has a "
                       "fundamental group with a dihedral quotient of "
                       "order %d" % (2 * spec.n)) if ok else None,
    }
    return ("pass" if ok else report.condition_ii
            if report.condition_ii != "pass" else report.condition_i,
            explanation)

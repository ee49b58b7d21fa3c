"""The coordinate algebra of a simple dihedral cover, with formal
branch data.

The cover of degree 2n is cut out by u v = F and u^n + v^n = 2a; its
pushed-forward coordinate algebra has the 2n-dimensional basis

    1,  s = u^n - v^n,  u^1 .. u^(n-1),  v^1 .. v^(n-1)

over the base, with a and F treated as formal symbols (they are the
branch data: a section and the double-cover branch equation).  All the
relations close on this basis; for instance

    u^i u^j = u^(i+j)                 (i + j < n)
    u^n     = a + s/2
    u^(n+k) = 2a u^k - F^k v^(n-k)
    u^i v^j = F^min(i,j) u^(i-j) or v^(j-i)
    s^2     = 4 a^2 - 4 F^n.

Coefficients are polynomials in a and F over an exact field of
characteristic zero or p > 2 (halves are required).  The dihedral
action is sigma(u^i) = zeta^i u^i (needing a cyclotomic coefficient
field) and tau swapping u with v, hence negating s.

On top of the algebra:

* ``m_plus`` / ``m_minus`` are the symmetrized and antisymmetrized
  pairings x, y -> (x tau(y) +- tau(x) y)/2;
* ``phi_tensor`` evaluates the degree-n form
  (w_1, .., w_n) -> tau(w_1 .. w_(n-1)) wedge w_n on the rank-two
  eigenspace spanned by u and v^(n-1), whose total symmetry is the
  algebraic heart of the triple-cover comparison;
* ``d3_resolvent`` checks w^3 = 2a + 3F w for w = u + v when n = 3 and
  returns the discriminant 108(F^3 - a^2) of the resolvent cubic;
* ``field_polynomial`` is X^(2n) - 2a X^n + F^n, and
  ``verify_field_polynomial`` multiplies out
  prod_i (X - zeta^i u)(X - zeta^i v) over Q(zeta_n) to confirm it.
"""

from fractions import Fraction

from .fields import QQ
from .cyclotomic import CyclotomicField


class AFPoly:
    """A polynomial in the two formal symbols a and F over a field."""

    __slots__ = ("K", "terms")

    def __init__(self, K, terms=None):
        self.K = K
        t = {}
        for e, c in (terms or {}).items():
            c = K.of(c) if isinstance(c, (int, Fraction)) else c
            if c:
                t[e] = c
        self.terms = t

    @classmethod
    def const(cls, K, c):
        return cls(K, {(0, 0): c})

    @classmethod
    def a(cls, K, i=1):
        return cls(K, {(i, 0): K.one})

    @classmethod
    def F(cls, K, j=1):
        return cls(K, {(0, j): K.one})

    def __add__(self, other):
        t = dict(self.terms)
        for e, c in other.terms.items():
            s = t.get(e, self.K.zero) + c
            if s:
                t[e] = s
            else:
                t.pop(e, None)
        return AFPoly(self.K, t)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return AFPoly(self.K, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, AFPoly):
            s = self.K.of(other)
            return AFPoly(self.K, {e: c * s for e, c in self.terms.items()})
        t = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1])
                s = t.get(e, self.K.zero) + c1 * c2
                if s:
                    t[e] = s
                else:
                    t.pop(e, None)
        return AFPoly(self.K, t)

    __rmul__ = __mul__

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, AFPoly):
            return NotImplemented
        return self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for (i, j) in sorted(self.terms, reverse=True):
            c = self.terms[(i, j)]
            mono = "*".join(filter(None, ["a^%d" % i if i > 1 else "a" * min(i, 1),
                                          "F^%d" % j if j > 1 else "F" * min(j, 1)]))
            parts.append("%s%s" % (c, "*" + mono if mono else ""))
        return " + ".join(parts)


class SimpleCoverAlgebra:
    """The basis-indexed algebra of a simple degree-2n dihedral cover."""

    def __init__(self, n, K=QQ):
        if n < 2:
            raise ValueError("need n >= 2")
        if K.characteristic == 2:
            raise ValueError("the algebra needs 1/2 in the coefficients")
        self.n = n
        self.K = K
        self.half = AFPoly.const(K, K.inv(K.of(2)))

    # -- element constructors -------------------------------------------

    def zero(self):
        return {}

    def one(self):
        return {"1": AFPoly.const(self.K, self.K.one)}

    def s(self):
        return {"s": AFPoly.const(self.K, self.K.one)}

    def u(self, i=1):
        self._check_index(i)
        return {("u", i): AFPoly.const(self.K, self.K.one)}

    def v(self, i=1):
        self._check_index(i)
        return {("v", i): AFPoly.const(self.K, self.K.one)}

    def basis(self):
        out = [self.one(), self.s()]
        out += [self.u(i) for i in range(1, self.n)]
        out += [self.v(i) for i in range(1, self.n)]
        return out

    def basis_keys(self):
        return (["1", "s"] + [("u", i) for i in range(1, self.n)]
                + [("v", i) for i in range(1, self.n)])

    def _check_index(self, i):
        if not 1 <= i <= self.n - 1:
            raise ValueError("monomial exponent must be in 1..n-1")

    # -- linear structure ------------------------------------------------

    def add(self, x, y):
        out = dict(x)
        for k, c in y.items():
            s = out.get(k)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        return out

    def scale(self, c, x):
        if not isinstance(c, AFPoly):
            c = AFPoly.const(self.K, self.K.of(c))
        out = {}
        for k, w in x.items():
            p = c * w
            if not p.is_zero():
                out[k] = p
        return out

    def neg(self, x):
        return {k: -c for k, c in x.items()}

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def equal(self, x, y):
        return self.sub(x, y) == {}

    # -- multiplication --------------------------------------------------

    def mul(self, x, y):
        out = {}
        for k1, c1 in x.items():
            for k2, c2 in y.items():
                prod = self._mul_basis(k1, k2)
                c = c1 * c2
                for k, w in prod.items():
                    s = out.get(k)
                    s = c * w if s is None else s + c * w
                    if s.is_zero():
                        out.pop(k, None)
                    else:
                        out[k] = s
        return out

    def _mul_basis(self, k1, k2):
        K, n = self.K, self.n
        one = AFPoly.const(K, K.one)
        a = AFPoly.a(K)
        if k1 == "1":
            return {k2: one}
        if k2 == "1":
            return {k1: one}
        if k1 == "s" and k2 == "s":
            return {"1": a * a * 4 - AFPoly.F(K, n) * 4}
        if k1 == "s" or k2 == "s":
            k = k2 if k1 == "s" else k1
            letter, i = k
            Fi = AFPoly.F(K, i)
            if letter == "u":
                return {("u", i): a * 2, ("v", n - i): Fi * (-2)}
            return {("u", n - i): Fi * 2, ("v", i): a * (-2)}
        l1, i = k1
        l2, j = k2
        if l1 == l2:
            t = i + j
            sg = 1 if l1 == "u" else -1
            if t < n:
                return {(l1, t): one}
            if t == n:
                return {"1": a, "s": self.half * sg}
            k = t - n
            other = "v" if l1 == "u" else "u"
            return {(l1, k): a * 2, (other, n - k): AFPoly.F(K, k) * (-1)}
        # mixed u^i v^j
        if l1 == "v":
            l1, i, l2, j = l2, j, l1, i
        if i > j:
            return {("u", i - j): AFPoly.F(K, j)}
        if i == j:
            return {"1": AFPoly.F(K, i)}
        return {("v", j - i): AFPoly.F(K, i)}

    # -- dihedral action -------------------------------------------------

    def tau(self, x):
        out = {}
        for k, c in x.items():
            if k == "1":
                out["1"] = out.get("1", AFPoly(self.K)) + c
            elif k == "s":
                out["s"] = out.get("s", AFPoly(self.K)) - c
            else:
                letter, i = k
                k2 = ("v" if letter == "u" else "u", i)
                out[k2] = out.get(k2, AFPoly(self.K)) + c
        return {k: c for k, c in out.items() if not c.is_zero()}

    def sigma(self, x):
        if not isinstance(self.K, CyclotomicField) or self.K.n % self.n:
            raise ValueError("sigma needs a coefficient field containing zeta_%d" % self.n)
        z = lambda k: AFPoly.const(self.K, self.K.zeta(k * (self.K.n // self.n)))
        out = {}
        for k, c in x.items():
            if k in ("1", "s"):
                out[k] = c
            else:
                letter, i = k
                out[k] = c * z(i if letter == "u" else -i)
        return {k: c for k, c in out.items() if not c.is_zero()}

    # -- symmetrized pairings -------------------------------------------

    def m_plus(self, x, y):
        return self.scale(self.half,
                          self.add(self.mul(x, self.tau(y)), self.mul(self.tau(x), y)))

    def m_minus(self, x, y):
        return self.scale(self.half,
                          self.sub(self.mul(x, self.tau(y)), self.mul(self.tau(x), y)))


def phi_tensor(n, K=QQ):
    """The values of the degree-n form on tuples from the eigenspace
    basis (u, v^(n-1)).

    Returns a dict mapping each tuple of 0/1 choices (0 = u,
    1 = v^(n-1)) to the AFPoly coefficient of u wedge v^(n-1).
    """
    if n < 3:
        raise ValueError("the tensor form needs n >= 3")
    A = SimpleCoverAlgebra(n, K)
    gens = [A.u(1), A.v(n - 1)]
    import itertools
    out = {}
    for choice in itertools.product((0, 1), repeat=n):
        prod = A.one()
        for c in choice[:-1]:
            prod = A.mul(prod, gens[c])
        w = A.tau(prod)
        # w lies in the eigenspace spanned by u and v^(n-1)
        alpha = w.get(("u", 1), AFPoly(A.K))
        beta = w.get(("v", n - 1), AFPoly(A.K))
        rest = {k: c for k, c in w.items() if k not in (("u", 1), ("v", n - 1))}
        if rest:
            raise AssertionError("product left the expected eigenspace: %r" % rest)
        if choice[-1] == 0:       # wedge with u
            val = -beta
        else:                     # wedge with v^(n-1)
            val = alpha
        out[choice] = val
    return out


def phi_is_symmetric(table):
    """True when the tensor form values depend only on the multiset of
    arguments."""
    by_count = {}
    for choice, val in table.items():
        c = sum(choice)
        if c in by_count:
            if by_count[c] != val:
                return False
        else:
            by_count[c] = val
    return True


def d3_resolvent(K=QQ):
    """Check the resolvent cubic w^3 = 2a + 3F w for w = u + v at n = 3
    and return the discriminant 108(F^3 - a^2)."""
    A = SimpleCoverAlgebra(3, K)
    w = A.add(A.u(1), A.v(1))
    w3 = A.mul(A.mul(w, w), w)
    rhs = A.add(A.scale(AFPoly.a(K) * 2, A.one()),
                A.scale(AFPoly.F(K) * 3, w))
    if not A.equal(w3, rhs):
        raise AssertionError("resolvent identity w^3 = 2a + 3Fw failed")
    return (AFPoly.F(K, 3) - AFPoly.a(K, 2)) * 108


def field_polynomial(n, K=QQ):
    """Coefficients {degree: AFPoly} of X^(2n) - 2a X^n + F^n."""
    return {2 * n: AFPoly.const(K, K.one),
            n: AFPoly.a(K) * (-2),
            0: AFPoly.F(K, n)}


def verify_field_polynomial(n):
    """Multiply out prod_i (X - zeta^i u)(X - zeta^i v) over Q(zeta_n)
    inside the algebra and compare with ``field_polynomial``."""
    K = CyclotomicField(n)
    A = SimpleCoverAlgebra(n, K)
    # polynomial in X with algebra coefficients, low degree first
    poly = [A.one()]
    for i in range(n):
        for gen in (A.u(1), A.v(1)):
            root = A.scale(AFPoly.const(K, K.zeta(i)), gen)
            new = [A.zero() for _ in range(len(poly) + 1)]
            for d, coef in enumerate(poly):
                new[d + 1] = A.add(new[d + 1], coef)
                new[d] = A.sub(new[d], A.mul(root, coef))
            poly = new
    want = field_polynomial(n, K)
    for d, coef in enumerate(poly):
        target = want.get(d)
        if target is None:
            if coef:
                return False
        else:
            if not A.equal(coef, A.scale(target, A.one())):
                return False
    return True


def eigensheaf_decomposition(n, m):
    """Line bundle degrees of the isotypic pieces of the pushforward of
    the structure sheaf of a simple cover with branch data of degree m.

    The monomial u^i (and v^i) has degree -i*m; the odd part s has
    degree -n*m.  Returns a list of (character label, sorted degrees).
    """
    from .dihedral import irreducible_labels
    out = []
    for lab in irreducible_labels(n):
        if lab == "chi1":
            out.append((lab, [0]))
        elif lab == "chi2":
            out.append((lab, [-n * m]))
        elif lab in ("chi3", "chi4"):
            out.append((lab, [-(n // 2) * m]))
        else:
            l = int(lab[3:])
            degs = sorted([-l * m, -(n - l) * m] * 2, reverse=True)
            out.append((lab, degs))
    return out

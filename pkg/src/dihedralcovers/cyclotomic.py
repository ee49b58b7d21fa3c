"""The cyclotomic field Q(zeta_n) as Q[t] modulo the n-th cyclotomic
polynomial.

Elements are residue classes of rational polynomials; arithmetic is
exact, inversion goes through the extended Euclidean algorithm, and
complex conjugation is the substitution zeta -> zeta^(n-1).  The class
satisfies the same descriptor protocol as the fields in
:mod:`dihedralcovers.fields` (zero, one, of, inv), so generic linear
algebra runs over it unchanged.
"""

from fractions import Fraction

from .fields import QQ
from .poly import Poly, poly_xgcd

_cyclo_cache = {}


def cyclotomic_polynomial(n):
    """The n-th cyclotomic polynomial over Q, by recursive division of
    t^n - 1 by the lower ones."""
    if n in _cyclo_cache:
        return _cyclo_cache[n]
    num = Poly(QQ, [-1] + [0] * (n - 1) + [1])
    for d in range(1, n):
        if n % d == 0:
            num = num.exact_div(cyclotomic_polynomial(d))
    _cyclo_cache[n] = num
    return num


class CycloElem:
    __slots__ = ("field", "rep")

    def __init__(self, field, rep):
        self.field = field
        self.rep = rep % field.modulus

    def __add__(self, other):
        return CycloElem(self.field, self.rep + self.field._rep(other))

    __radd__ = __add__

    def __sub__(self, other):
        return CycloElem(self.field, self.rep - self.field._rep(other))

    def __rsub__(self, other):
        return CycloElem(self.field, self.field._rep(other) - self.rep)

    def __mul__(self, other):
        return CycloElem(self.field, self.rep * self.field._rep(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = other if isinstance(other, CycloElem) else CycloElem(self.field, self.field._rep(other))
        return self * o.inverse()

    def __rtruediv__(self, other):
        return CycloElem(self.field, self.field._rep(other)) / self

    def __neg__(self):
        return CycloElem(self.field, -self.rep)

    def __pow__(self, e):
        r = self.field.one
        b = self
        if e < 0:
            b = b.inverse()
            e = -e
        for _ in range(e):
            r = r * b
        return r

    def inverse(self):
        g, s, _ = poly_xgcd(self.rep, self.field.modulus)
        if g.degree != 0:
            raise ZeroDivisionError("non-invertible cyclotomic element")
        return CycloElem(self.field, s * QQ.inv(g.c[0]))

    def conjugate(self):
        """Complex conjugation zeta -> zeta^(-1)."""
        n = self.field.n
        zinv = Poly(QQ, [0] * (n - 1) + [1]) % self.field.modulus
        return CycloElem(self.field, self.rep.compose(zinv))

    def is_rational(self):
        return self.rep.degree <= 0

    def rational_value(self):
        if not self.is_rational():
            raise ValueError("element is not rational")
        return self.rep.coeff(0)

    def __eq__(self, other):
        if isinstance(other, CycloElem):
            return self.field.n == other.field.n and self.rep == other.rep
        if isinstance(other, (int, Fraction)):
            return self.rep == Poly.const(QQ, Fraction(other))
        return NotImplemented

    def __hash__(self):
        return hash((self.field.n, tuple(self.rep.c)))

    def __bool__(self):
        return not self.rep.is_zero()

    def __repr__(self):
        return "(%s)" % repr(self.rep).replace("x", "z")


class CyclotomicField:
    """Q(zeta_n), with zeta_n the class of t."""

    def __init__(self, n):
        if n < 1:
            raise ValueError("n must be positive")
        self.n = n
        self.modulus = cyclotomic_polynomial(n)
        self.characteristic = 0
        self.zero = CycloElem(self, Poly.zero(QQ))
        self.one = CycloElem(self, Poly.one(QQ))

    def zeta(self, k=1):
        """zeta_n^k."""
        k %= self.n
        return CycloElem(self, Poly(QQ, [0] * k + [1]))

    def of(self, x):
        return CycloElem(self, self._rep(x))

    def inv(self, x):
        return self.of(x).inverse()

    def _rep(self, x):
        if isinstance(x, CycloElem):
            if x.field.n != self.n:
                raise ValueError("mixed cyclotomic orders %d and %d" % (self.n, x.field.n))
            return x.rep
        if isinstance(x, (int, Fraction)):
            return Poly.const(QQ, Fraction(x))
        if isinstance(x, Poly):
            return x
        raise TypeError("cannot coerce %r" % (x,))

    def __eq__(self, other):
        return isinstance(other, CyclotomicField) and other.n == self.n

    def __hash__(self):
        return hash(("cyclo", self.n))

    def __repr__(self):
        return "CyclotomicField(%d)" % self.n

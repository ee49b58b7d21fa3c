"""Exact coefficient fields: the rationals and prime fields of odd order.

Every algorithm in this package runs over one of two kinds of field,
chosen at construction time and threaded through all polynomial and
matrix arithmetic:

* ``QQ`` wraps :class:`fractions.Fraction` so rational computations are
  exact with unbounded numerators.
* ``GF(p)`` is the field with p elements, p an odd prime.  Elements are
  immutable wrappers around a reduced int.

Fields are lightweight descriptor objects exposing ``zero``, ``one``,
``of(n)`` for embedding integers, ``inv``, and ``characteristic``.
Field *elements* support the usual operator protocol so downstream code
never needs to know which field it is working over.
"""

from fractions import Fraction


class FpElem:
    """An element of GF(p), stored reduced mod p."""

    __slots__ = ("v", "p")

    def __init__(self, v, p):
        self.v = v % p
        self.p = p

    def __add__(self, other):
        return FpElem(self.v + self._val(other), self.p)

    __radd__ = __add__

    def __sub__(self, other):
        return FpElem(self.v - self._val(other), self.p)

    def __rsub__(self, other):
        return FpElem(self._val(other) - self.v, self.p)

    def __mul__(self, other):
        return FpElem(self.v * self._val(other), self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = other if isinstance(other, FpElem) else FpElem(other, self.p)
        return self * o.inverse()

    def __rtruediv__(self, other):
        return FpElem(self._val(other), self.p) / self

    def __neg__(self):
        return FpElem(-self.v, self.p)

    def __pow__(self, e):
        return FpElem(pow(self.v, e, self.p), self.p)

    def inverse(self):
        if self.v == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.p)
        return FpElem(pow(self.v, -1, self.p), self.p)

    def _val(self, other):
        if isinstance(other, FpElem):
            if other.p != self.p:
                raise ValueError("mixed characteristics %d and %d" % (self.p, other.p))
            return other.v
        if isinstance(other, int):
            return other
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, FpElem):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return self.v == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return "%d" % self.v


class GF:
    """The prime field GF(p) for an odd prime p."""

    def __init__(self, p):
        if p < 3 or any(p % q == 0 for q in range(2, int(p ** 0.5) + 1)):
            raise ValueError("GF order must be an odd prime, got %r" % (p,))
        self.p = p
        self.zero = FpElem(0, p)
        self.one = FpElem(1, p)
        self.characteristic = p

    def of(self, n):
        """Embed an integer or Fraction into GF(p)."""
        if isinstance(n, FpElem):
            return FpElem(n.v, self.p)
        if isinstance(n, Fraction):
            return FpElem(n.numerator, self.p) / FpElem(n.denominator, self.p)
        return FpElem(n, self.p)

    def inv(self, a):
        return self.of(a).inverse()

    def elements(self):
        return [FpElem(v, self.p) for v in range(self.p)]

    def random(self, rng):
        return FpElem(rng.randrange(self.p), self.p)

    def random_nonzero(self, rng):
        return FpElem(rng.randrange(1, self.p), self.p)

    def sqrt(self, a):
        """A square root of a in GF(p), or None if a is a non-residue."""
        a = self.of(a)
        if not a:
            return self.zero
        if pow(a.v, (self.p - 1) // 2, self.p) != 1:
            return None
        # Tonelli-Shanks; the p % 4 == 3 shortcut covers most test fields.
        p = self.p
        if p % 4 == 3:
            return FpElem(pow(a.v, (p + 1) // 4, p), p)
        q, s = p - 1, 0
        while q % 2 == 0:
            q, s = q // 2, s + 1
        z = 2
        while pow(z, (p - 1) // 2, p) != p - 1:
            z += 1
        m, c, t, r = s, pow(z, q, p), pow(a.v, q, p), pow(a.v, (q + 1) // 2, p)
        while t != 1:
            i, t2 = 0, t
            while t2 != 1:
                t2 = t2 * t2 % p
                i += 1
            b = pow(c, 1 << (m - i - 1), p)
            m, c = i, b * b % p
            r, t = r * b % p, t * c % p
        return FpElem(r, p)

    def __eq__(self, other):
        return isinstance(other, GF) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return "GF(%d)" % self.p


class _QQ:
    """The rational field, with Fraction elements."""

    def __init__(self):
        self.zero = Fraction(0)
        self.one = Fraction(1)
        self.characteristic = 0

    def of(self, n):
        return Fraction(n)

    def inv(self, a):
        return 1 / Fraction(a)

    def random(self, rng):
        return Fraction(rng.randrange(-20, 21))

    def random_nonzero(self, rng):
        v = rng.randrange(-20, 20)
        return Fraction(v if v < 0 else v + 1)

    def __eq__(self, other):
        return isinstance(other, _QQ)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


QQ = _QQ()


def field_from_name(name):
    """Parse a field tag: "Q" for the rationals, "Fp:101" for GF(101)."""
    if name in ("Q", "QQ"):
        return QQ
    if name.startswith("Fp:"):
        return GF(int(name[3:]))
    raise ValueError("unknown field %r (expected Q or Fp:<prime>)" % name)

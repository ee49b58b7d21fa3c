"""Dihedral groups, their character tables, and isotypic projectors.

The group D_n = <sigma, tau | sigma^n = tau^2 = 1, tau sigma tau =
sigma^(-1)> is stored as pairs (k, t) meaning sigma^k tau^t.  Its
irreducible characters over Q(zeta_n):

* two linear characters for odd n, four for even n;
* two-dimensional characters rho_l for 0 < l < n/2 with
  chi(sigma^k) = zeta^(kl) + zeta^(-kl) and chi vanishing off the
  rotation subgroup.

``projector`` realizes the isotypic projector of each character on the
monomial representation with basis (1, s, u^1..u^(n-1), v^1..v^(n-1)),
where sigma scales u^i by zeta^i and v^i by zeta^(-i) and tau swaps u
with v and negates s.  That representation is isomorphic to the regular
representation, so each projector is idempotent of rank (dim)^2 and the
projectors sum to the identity.

``epsilon`` is the cocycle exponent table: for the subgroup generated
by sigma^k, the product of the restrictions of the characters indexed
i and j contains the trivial character with a shift exactly when the
normalized exponents add up past the subgroup order.
"""

import math

from .cyclotomic import CyclotomicField
from . import linalg


class DihedralGroup:
    """D_n with elements (k, t) = sigma^k tau^t."""

    def __init__(self, n):
        if n < 2:
            raise ValueError("dihedral order parameter must be at least 2")
        self.n = n

    def elements(self):
        return [(k, t) for t in (0, 1) for k in range(self.n)]

    def multiply(self, g, h):
        k1, t1 = g
        k2, t2 = h
        k = (k1 + (k2 if t1 == 0 else -k2)) % self.n
        return (k, (t1 + t2) % 2)

    def inverse(self, g):
        k, t = g
        if t == 0:
            return ((-k) % self.n, 0)
        return (k, 1)

    def order(self):
        return 2 * self.n


def irreducible_labels(n):
    """Labels of the irreducible characters of D_n in a fixed order."""
    labels = ["chi1", "chi2"]
    if n % 2 == 0:
        labels += ["chi3", "chi4"]
    labels += ["rho%d" % l for l in range(1, (n - 1) // 2 + 1 if n % 2 else n // 2)]
    return labels


def character(n, label, K=None):
    """The character as a function (k, t) -> Q(zeta_n) element."""
    if K is None:
        K = CyclotomicField(n)
    if label == "chi1":
        return lambda g: K.one
    if label == "chi2":
        return lambda g: K.of(1 if g[1] == 0 else -1)
    if label == "chi3":
        if n % 2:
            raise ValueError("chi3 exists only for even n")
        return lambda g: K.of((-1) ** (g[0] % 2))
    if label == "chi4":
        if n % 2:
            raise ValueError("chi4 exists only for even n")
        return lambda g: K.of((-1) ** ((g[0] + g[1]) % 2))
    if label.startswith("rho"):
        l = int(label[3:])
        if not 0 < l < n / 2:
            raise ValueError("rho index out of range")
        def chi(g):
            k, t = g
            if t:
                return K.zero
            return K.zeta(k * l) + K.zeta(-k * l)
        return chi
    raise ValueError("unknown label %r" % label)


def char_degree(label):
    return 1 if label.startswith("chi") else 2


def character_table(n):
    """All irreducible characters, as {label: {element: value}}."""
    G = DihedralGroup(n)
    K = CyclotomicField(n)
    table = {}
    for lab in irreducible_labels(n):
        chi = character(n, lab, K)
        table[lab] = {g: chi(g) for g in G.elements()}
    return table


def monomial_representation(n, K=None):
    """Matrices of sigma and tau on the basis (1, s, u^i, v^i).

    Basis order: index 0 is 1, index 1 is s, indices 2..n is u^1..u^(n-1),
    indices n+1..2n-1 is v^1..v^(n-1).
    """
    if K is None:
        K = CyclotomicField(n)
    dim = 2 * n
    zero = K.zero
    sigma = [[zero] * dim for _ in range(dim)]
    tau = [[zero] * dim for _ in range(dim)]
    sigma[0][0] = K.one
    sigma[1][1] = K.one
    tau[0][0] = K.one
    tau[1][1] = -K.one
    for i in range(1, n):
        ui = 1 + i
        vi = n + i
        sigma[ui][ui] = K.zeta(i)
        sigma[vi][vi] = K.zeta(-i)
        tau[ui][vi] = K.one
        tau[vi][ui] = K.one
    return sigma, tau


def representation_matrix(n, g, K=None):
    """The matrix of sigma^k tau^t in the monomial representation."""
    if K is None:
        K = CyclotomicField(n)
    sigma, tau = monomial_representation(n, K)
    k, t = g
    m = _identity(2 * n, K)
    for _ in range(k):
        m = _matmul(m, sigma, K)
    if t:
        m = _matmul(m, tau, K)
    return m


def projector(n, label, K=None):
    """The isotypic projector of the labelled character on the monomial
    representation: (deg/2n) sum over g of conj(chi(g)) rho(g)."""
    if K is None:
        K = CyclotomicField(n)
    G = DihedralGroup(n)
    chi = character(n, label, K)
    dim = 2 * n
    acc = [[K.zero] * dim for _ in range(dim)]
    sigma, tau = monomial_representation(n, K)
    rho = _identity(dim, K)
    mats = {}
    for k in range(n):
        mats[(k, 0)] = rho
        mats[(k, 1)] = _matmul(rho, tau, K)
        rho = _matmul(rho, sigma, K)
    for g in G.elements():
        c = chi(g).conjugate()
        if not c:
            continue
        m = mats[g]
        for i in range(dim):
            for j in range(dim):
                acc[i][j] = acc[i][j] + c * m[i][j]
    scale = K.of(char_degree(label)) / K.of(2 * n)
    return [[scale * x for x in row] for row in acc]


def projector_rank(p):
    return linalg.rank(p)


def _identity(dim, K):
    return [[K.one if i == j else K.zero for j in range(dim)] for i in range(dim)]


def _matmul(a, b, K):
    dim = len(a)
    out = [[K.zero] * dim for _ in range(dim)]
    for i in range(dim):
        for k in range(dim):
            if not a[i][k]:
                continue
            aik = a[i][k]
            for j in range(dim):
                if b[k][j]:
                    out[i][j] = out[i][j] + aik * b[k][j]
    return out


def epsilon(n, k, i, j):
    """The cocycle exponent for the cyclic subgroup generated by sigma^k.

    The subgroup has order d = n/gcd(n, k); the character indexed by i
    restricts to the d-th root of unity raised to
    i*k/gcd(n, k) mod d.  The value is 1 when the normalized exponents
    of i and j add to at least d, and 0 otherwise.
    """
    k %= n
    if k == 0:
        return 0
    g = math.gcd(n, k)
    d = n // g
    ii = (i * (k // g)) % d
    jj = (j * (k // g)) % d
    return 1 if ii + jj >= d else 0

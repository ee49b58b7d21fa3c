import itertools

import pytest

from dihedralcovers import dihedral
from dihedralcovers.cyclotomic import CyclotomicField, cyclotomic_polynomial
from dihedralcovers.fields import QQ
from dihedralcovers.poly import Poly


def test_cyclotomic_polynomials():
    x = Poly.x(QQ)
    assert cyclotomic_polynomial(1) == x - Poly.one(QQ)
    assert cyclotomic_polynomial(2) == x + Poly.one(QQ)
    assert cyclotomic_polynomial(4) == x * x + Poly.one(QQ)
    assert cyclotomic_polynomial(12).degree == 4
    # product of all cyclotomic divisors rebuilds t^n - 1
    for n in (6, 8, 12):
        prod = Poly.one(QQ)
        for d in range(1, n + 1):
            if n % d == 0:
                prod = prod * cyclotomic_polynomial(d)
        assert prod == Poly(QQ, [-1] + [0] * (n - 1) + [1])


def test_cyclotomic_field_arithmetic():
    K = CyclotomicField(7)
    z = K.zeta()
    assert z ** 7 == 1
    s = sum((z ** i for i in range(7)), K.zero)
    assert s == 0
    a = K.of(2) + z
    assert a * a.inverse() == 1
    assert (z * z.conjugate()) == 1
    assert (z + z.conjugate()).conjugate() == z + z.conjugate()


def test_group_law():
    G = dihedral.DihedralGroup(5)
    els = G.elements()
    assert len(els) == G.order() == 10
    for g in els:
        assert G.multiply(g, G.inverse(g)) == (0, 0)
    # tau sigma tau = sigma^(-1)
    s, t = (1, 0), (0, 1)
    assert G.multiply(G.multiply(t, s), t) == (4, 0)


def test_character_tables():
    for n in range(2, 9):
        table = dihedral.character_table(n)
        labels = dihedral.irreducible_labels(n)
        assert set(table) == set(labels)
        assert sum(dihedral.char_degree(l) ** 2 for l in labels) == 2 * n
        # first orthogonality relations
        G = dihedral.DihedralGroup(n)
        K = CyclotomicField(n)
        for l1 in labels:
            for l2 in labels:
                s = K.zero
                for g in G.elements():
                    s = s + table[l1][g] * table[l2][g].conjugate()
                assert s == (2 * n if l1 == l2 else 0), (n, l1, l2)


def test_projector_identities():
    # idempotence, orthogonality, completeness and ranks, for all n <= 12
    for n in range(2, 13):
        K = CyclotomicField(n)
        dim = 2 * n
        labels = dihedral.irreducible_labels(n)
        projs = {lab: dihedral.projector(n, lab, K) for lab in labels}
        total = [[K.zero] * dim for _ in range(dim)]
        for lab, p in projs.items():
            sq = dihedral._matmul(p, p, K)
            assert sq == p, (n, lab)
            assert dihedral.projector_rank(p) == dihedral.char_degree(lab) ** 2
            for i in range(dim):
                for j in range(dim):
                    total[i][j] = total[i][j] + p[i][j]
        assert total == dihedral._identity(dim, K), n
        for l1, l2 in itertools.combinations(labels, 2):
            prod = dihedral._matmul(projs[l1], projs[l2], K)
            assert all(not x for row in prod for x in row), (n, l1, l2)


def test_monomial_representation_is_regular():
    # the character of the monomial representation equals that of the
    # regular representation: 2n at the identity, 0 elsewhere
    for n in (3, 4, 6):
        K = CyclotomicField(n)
        G = dihedral.DihedralGroup(n)
        for g in G.elements():
            m = dihedral.representation_matrix(n, g, K)
            tr = sum((m[i][i] for i in range(2 * n)), K.zero)
            assert tr == (2 * n if g == (0, 0) else 0), (n, g)


def test_epsilon_exponents():
    assert dihedral.epsilon(3, 0, 1, 1) == 0
    assert dihedral.epsilon(3, 1, 1, 1) == 0
    assert dihedral.epsilon(3, 1, 1, 2) == 1
    assert dihedral.epsilon(3, 1, 2, 2) == 1
    assert dihedral.epsilon(4, 2, 1, 1) == 1
    assert dihedral.epsilon(4, 2, 2, 2) == 0
    # indices reduce modulo the subgroup order
    assert dihedral.epsilon(6, 2, 3, 3) == 0
    assert dihedral.epsilon(6, 3, 1, 1) == 1


def test_rho_index_range():
    with pytest.raises(ValueError):
        dihedral.character(4, "rho2")
    with pytest.raises(ValueError):
        dihedral.character(5, "chi3")

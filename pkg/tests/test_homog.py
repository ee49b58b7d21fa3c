import pytest

from dihedralcovers.fields import QQ, GF
from dihedralcovers.homog import HForm
from dihedralcovers.poly import Poly
from dihedralcovers.parsing import (parse_univar, parse_form,
                                    format_univar, format_form)


def form(s, nvars=2, field=QQ):
    return parse_form(s, field, nvars)


def test_degree_is_part_of_the_data():
    z2 = HForm.zero(QQ, 2, 2)
    z3 = HForm.zero(QQ, 2, 3)
    assert z2 != z3
    with pytest.raises(ValueError):
        z2 + z3


def test_inhomogeneous_rejected():
    with pytest.raises(ValueError):
        HForm(QQ, 2, 2, {(1, 0): 1})
    with pytest.raises(ValueError):
        parse_form("x0^2 + x1", QQ, 2)


def test_arithmetic_and_evaluation():
    f = form("x0^2 - x1^2")
    g = form("x0 + x1")
    assert f == g * form("x0 - x1")
    assert (f * g).deg == 3
    two, three = QQ.of(2), QQ.of(3)
    assert f((two, three)) == QQ.of(-5)


def test_univar_roundtrip():
    f = form("x0^3 - 2*x0*x1^2")
    p = f.to_univar()
    assert HForm.from_univar(p, 3) == f
    assert f.x1_multiplicity() == 0
    assert form("x0^2*x1").x1_multiplicity() == 1


def test_exact_div():
    f = form("x0^4 - x1^4")
    g = form("x0^2 + x1^2")
    q = f.exact_div(g)
    assert q == form("x0^2 - x1^2")
    with pytest.raises(ValueError):
        f.exact_div(form("x0 + 2*x1"))


def test_squarefree():
    assert form("x0^2 - x1^2").is_squarefree()
    assert not form("x0^2 + 2*x0*x1 + x1^2").is_squarefree()
    assert not form("x0*x1^2").is_squarefree()


def test_partial_and_euler_relation():
    f = form("x0^3 + x1^3 + x2^3 - 3*x0*x1*x2", nvars=3)
    parts = [f.partial(i) for i in range(3)]
    x = [HForm.monomial(QQ, e) for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1))]
    euler = parts[0] * x[0] + parts[1] * x[1] + parts[2] * x[2]
    assert euler == f * 3


def test_substitute_linear_change():
    f = form("x0*x1")
    imgs = [form("x0 + x1"), form("x0 - x1")]
    assert f.substitute(imgs) == form("x0^2 - x1^2")


def test_coeffs_in():
    f = form("x0^2*x2 + x1*x2^2 + x0^3", nvars=3)
    cs = f.coeffs_in(2)
    assert len(cs) == 4
    assert cs[0] == form("x0^3")
    assert cs[1] == form("x0^2")
    assert cs[2] == form("x1")
    assert cs[3].is_zero()


def test_parsing_rationals_and_format_stability():
    f = form("1/2*x0^2 - 3*x0*x1 + x1^2")
    s = format_form(f)
    assert parse_form(s, QQ, 2) == f
    assert format_form(parse_form(s, QQ, 2)) == s


def test_univar_parsing():
    p = parse_univar("x^3 - 2*x + 5/7", QQ)
    assert p.degree == 3
    s = format_univar(p)
    assert parse_univar(s, QQ) == p


def test_parse_errors_are_value_errors():
    for bad in ("x0^2 +", "x3", "x0 x1", ""):
        with pytest.raises(ValueError):
            parse_form(bad, QQ, 2)


def test_finite_field_forms():
    K = GF(7)
    f = parse_form("x0^2 + 3*x1^2", K, 2)
    assert f((K.of(2), K.one)) == K.of(0)
    assert format_form(parse_form(format_form(f), K, 2)) == format_form(f)

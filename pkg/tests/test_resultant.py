import random

import pytest
from hypothesis import assume, given, settings

from conftest import F3, F5, F101, cofactor_det, nonzero_polys, polys
from kuores.errors import (
    DegenerateInput, DegenerateResultant, FieldMismatch, NonMonicInput, VariableMismatch,
)
from kuores.expr_parse import parse_poly
from kuores.factor_ff import random_monic
from kuores.numeric import QQ
from kuores.polynomial import Poly, PolyRing
from kuores.resultant import (
    det_bareiss, kuo_resultant, resultant, resultant_bareiss, resultant_interpolation,
    resultant_subresultant, sylvester_matrix,
)


def P(text, domain=QQ, var="Y"):
    return parse_poly(text, (var,), domain)


def QX(text, outer="Y"):
    return parse_poly(text, (outer, "X"))


def test_sylvester_layout():
    S = sylvester_matrix(P("Y^2 + 2*Y + 3"), P("4*Y + 5"))
    assert S.dimension == 3
    assert [list(r) for r in S.rows] == [[1, 2, 3], [4, 5, 0], [0, 4, 5]]


def test_linear_resultants():
    for a in range(-3, 4):
        for b in range(-3, 4):
            assert resultant(P(f"Y - ({a})"), P(f"Y - ({b})"), check=True) == a - b


def test_small_examples():
    assert resultant(P("Y^2 + 1"), P("Y + 1"), check=True) == 2
    assert resultant(P("Y^2 - 1"), P("Y - 1"), check=True) == 0
    # lc(a)^deg(b) * prod b(roots of a): roots 1, 2 of a, b = Y^2 + 1
    assert resultant(P("Y^2 - 3*Y + 2"), P("Y^2 + 1"), check=True) == 2 * 5


def test_constant_operands():
    assert resultant(P("Y^2 + 1"), P("3")) == 9
    assert resultant(P("2"), P("Y^3 + 1")) == 8
    assert resultant(P("Y"), Poly([], QQ)) == 0
    with pytest.raises(DegenerateResultant):
        resultant(P("2"), P("3"))


def test_mismatched_inputs():
    with pytest.raises(VariableMismatch):
        resultant(P("Y"), P("T", var="T"))
    with pytest.raises(FieldMismatch):
        resultant(P("Y"), P("Y", F5))
    with pytest.raises(VariableMismatch):
        resultant(P("Y"), P("Y + 1"), var="X")


@settings(max_examples=60)
@given(nonzero_polys(QQ, min_deg=1, max_deg=4), nonzero_polys(QQ, min_deg=1, max_deg=4))
def test_bareiss_matches_cofactor_expansion(a, b):
    S = sylvester_matrix(a, b)
    assert det_bareiss(S) == cofactor_det([list(r) for r in S.rows])


@given(nonzero_polys(QQ, min_deg=1), nonzero_polys(QQ, min_deg=1))
def test_antisymmetry(a, b):
    sign = -1 if (a.degree * b.degree) % 2 else 1
    assert resultant(a, b) == sign * resultant(b, a)


@given(nonzero_polys(F101, min_deg=1), nonzero_polys(F101, min_deg=1),
       nonzero_polys(F101, min_deg=1))
def test_multiplicativity(a, b, c):
    assert resultant(a, b * c) == resultant(a, b) * resultant(a, c)


@given(polys(QQ), polys(QQ))
def test_bareiss_matches_subresultant_q(a, b):
    assume(a.degree > 0 or b.degree > 0)
    assert resultant_bareiss(a, b) == resultant_subresultant(a, b)


@given(polys(F3), polys(F3))
def test_bareiss_matches_subresultant_f3(a, b):
    assume(a.degree > 0 or b.degree > 0)
    assert resultant_bareiss(a, b) == resultant_subresultant(a, b)


def test_bivariate_three_way():
    a = QX("Y^3 + X*Y + X^2 - 1")
    b = QX("X*Y^2 - Y + X^3")
    r = resultant_bareiss(a, b)
    assert r == resultant_subresultant(a, b) == resultant_interpolation(a, b)
    assert r.domain == QQ and r.var == "X"


def test_interpolation_gives_up_over_tiny_field():
    a = parse_poly("Y^3 + X^4*Y + 1", ("Y", "X"), F3)
    b = parse_poly("Y^2 + X^3", ("Y", "X"), F3)
    assert resultant_interpolation(a, b) is None
    assert resultant_bareiss(a, b) == resultant_subresultant(a, b)


def test_kuo_worked_examples():
    r = kuo_resultant(QX("(Y^2 - X^3)^2 - X^7"), QX("Y^2 - X^3"))
    assert str(r.h) == "T^4 - 2*X^7*T^2 + X^14"
    assert r.degree == 4 and r.sign == 1 and r.interpolation_checked
    r = kuo_resultant(QX("(Y^2 - X^3)^2 - X^5*Y"), QX("Y^2 - X^3"))
    assert str(r.h) == "T^4 - X^10*T - X^13"


def test_kuo_identity_and_constant_f():
    g = QX("Y^3 - X*Y + X^2")
    assert kuo_resultant(g, QX("Y")).h == g.with_var("T")
    assert str(kuo_resultant(g, QX("X")).h) == "T^3 - 3*X*T^2 + 3*X^2*T - X^3"


def test_kuo_linear_g():
    # g = Y - c gives T - f(c)
    f = P("Y^3 + 2*Y + 5", F5)
    for c in range(5):
        h = kuo_resultant(P(f"Y - {c}", F5), f).h
        assert h == Poly([-f(F5(c)), 1], F5, "T")


def test_kuo_errors():
    with pytest.raises(NonMonicInput):
        kuo_resultant(P("2*Y + 1"), P("Y"))
    with pytest.raises(DegenerateInput):
        kuo_resultant(P("1"), P("Y"))
    with pytest.raises(VariableMismatch):
        kuo_resultant(P("T", var="T"), P("T", var="T"))


@pytest.mark.parametrize("K", [F3, F5, F101], ids=str)
def test_kuo_monic_of_degree_deg_g(K):
    rng = random.Random(7)
    for _ in range(40):
        g = random_monic(rng.randint(1, 5), K, rng)
        f = random_monic(rng.randint(0, 5), K, rng)
        r = kuo_resultant(g, f)
        assert r.h.is_monic() and r.h.degree == g.degree

import random

import pytest

from conftest import F2, F3, F5, F13
from kuores.expr_parse import parse_poly
from kuores.factor_ff import is_irreducible, random_irreducible, random_monic
from kuores.galois_harness import (
    frobenius_orbits, minimal_polynomial, product_formula_check, splitting_field,
    transitivity_check,
)
from kuores.numeric import ExtField, frobenius
from kuores.polynomial import Poly, eval_lifted


def P(text, K, var="X"):
    return parse_poly(text, (var,), K)


def test_splitting_field_x2_plus_1_over_f3():
    f = P("X^2 + 1", F3)
    S = splitting_field(f)
    assert S.degree == 2
    a, b = S.distinct_roots
    assert a * a == S.field.convert(-1) and b == -a
    assert all(eval_lifted(f, r) == S.field.zero for r in S.distinct_roots)


def test_splitting_field_over_base():
    S = splitting_field(P("X^2 - 1", F5))
    assert S.degree == 1
    assert sorted(r.to_base().value for r in S.distinct_roots) == [1, 4]


def test_square_doubles_multiplicities():
    g = random_irreducible(3, F5, seed=2, var="X")
    Sg, Sf = splitting_field(g), splitting_field(g * g)
    assert Sf.degree == Sg.degree
    assert len(Sf.roots) == 3
    assert all(m == 2 for _, m in Sf.roots)
    assert sum(m for _, m in Sf.roots) == 6


def test_orbit_examples():
    g = random_irreducible(3, F5, seed=1, var="X")
    orbits = frobenius_orbits(splitting_field(g)).orbits
    assert [len(o) for o in orbits] == [3]
    h = random_irreducible(2, F5, seed=1, var="X")
    assert len(frobenius_orbits(splitting_field(g * h))) == 2
    assert [len(o) for o in frobenius_orbits(splitting_field(P("X^4 - 1", F5))).orbits] == [1] * 4


def test_orbits_are_cycles():
    g = random_irreducible(4, F3, seed=5, var="X")
    for orbit in frobenius_orbits(splitting_field(g)).orbits:
        for i, r in enumerate(orbit):
            assert frobenius(r) == orbit[(i + 1) % len(orbit)]


def test_transitivity_examples():
    g = random_irreducible(3, F5, seed=4, var="X")
    assert transitivity_check(g)
    assert transitivity_check(g ** 3)
    assert not transitivity_check(g * random_irreducible(2, F5, seed=4, var="X"))


def test_product_formula_examples():
    rng = random.Random(3)
    for _ in range(10):
        g = random_irreducible(3, F5, rng)
        f = random_monic(2, F5, rng)
        assert product_formula_check(g, f)
    g = random_irreducible(3, F13, seed=9)
    assert product_formula_check(g, Poly.gen(F13, "Y"))
    assert product_formula_check(g, Poly.constant(4, F13, "Y"))


def test_product_formula_with_repeated_roots():
    g = P("(Y^2 + 1)^2*(Y + 2)", F3, "Y")
    f = P("Y^2 + Y", F3, "Y")
    assert product_formula_check(g, f)


def test_minimal_polynomial_examples():
    F4 = ExtField(2, [1, 1, 1])
    assert minimal_polynomial(F4.gen) == P("X^2 + X + 1", F2)
    assert minimal_polynomial(F5(3)) == P("X - 3", F5)
    assert minimal_polynomial(F4.one) == P("X + 1", F2)


@pytest.mark.parametrize("p, d", [(2, 4), (3, 3), (5, 2), (2, 6)])
def test_minimal_polynomial_properties(p, d):
    E = ExtField(p, random_irreducible(d, p, seed=0, var="Z"))
    rng = random.Random(p * d)
    for _ in range(20):
        a = E.random_element(rng)
        m = minimal_polynomial(a)
        assert d % m.degree == 0
        assert is_irreducible(m)
        assert eval_lifted(m, a) == E.zero

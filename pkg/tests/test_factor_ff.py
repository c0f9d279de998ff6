import itertools
import random
from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from conftest import F2, F3, F5, F7, F101
from kuores.errors import NonMonicInput
from kuores.expr_parse import parse_poly
from kuores.factor_ff import (
    factor, factor_any, is_irreducible, prime_power_structure, random_irreducible,
    random_monic, squarefree_decomposition,
)
from kuores.numeric import ExtField
from kuores.polynomial import Poly


def P(text, K, var="X"):
    return parse_poly(text, (var,), K)


def test_factor_examples():
    assert str(factor(P("X^2 + 1", F5))) == "(X + 2)(X + 3)"
    fz = factor(P("X^4 - 1", F5))
    assert [str(b) for b, _ in fz.factors] == ["X + 1", "X + 2", "X + 3", "X + 4"]
    fz = factor(P("X^2 + 1", F3))
    assert fz.factors == ((P("X^2 + 1", F3), 1),)


def test_is_irreducible_examples():
    assert is_irreducible(P("X + 3", F5))
    assert not is_irreducible(P("X^2 + 1", F5))
    assert is_irreducible(P("X^2 + X + 1", F2))
    assert not is_irreducible(P("X^4 + X^2 + 1", F2))  # (X^2 + X + 1)^2


def test_squarefree_examples():
    a = P("(Y - 1)^2*(Y + 1)", F5, "Y")
    assert squarefree_decomposition(a) == [(P("Y + 1", F5, "Y"), 1), (P("Y + 4", F5, "Y"), 2)]
    assert squarefree_decomposition(P("Y^5 - 2", F5, "Y")) == [(P("Y - 2", F5, "Y"), 5)]
    s = P("Y^3 + Y + 1", F5, "Y")
    assert squarefree_decomposition(s) == [(s, 1)]


def test_squarefree_pth_power_in_extension():
    F4 = ExtField(2, [1, 1, 1])
    z = F4.gen
    y = Poly.gen(F4, "Y")
    a = (y + z) ** 2 * (y + 1) ** 4
    parts = squarefree_decomposition(a)
    back = Poly.constant(1, F4, "Y")
    for b, m in parts:
        back = back * b ** m
    assert back == a


def test_prime_power_examples():
    s = prime_power_structure(P("(X + 1)^3", F5))
    assert (s.base, s.exponent) == (P("X + 1", F5), 3)
    s = prime_power_structure(P("X^2 + 1", F3))
    assert (s.base, s.exponent) == (P("X^2 + 1", F3), 1)
    assert prime_power_structure(P("X*(X + 1)", F5)) is None


def test_non_monic_rejected():
    with pytest.raises(NonMonicInput):
        factor(P("2*X + 1", F5))
    with pytest.raises(NonMonicInput):
        is_irreducible(P("2*X^2 + 1", F5))
    fz = factor_any(P("2*X^2 + 2", F5))
    assert fz.unit == 2 and fz.expand() == P("2*X^2 + 2", F5)


def test_random_irreducible():
    a = random_irreducible(3, 5, seed=11)
    assert a.degree == 3 and is_irreducible(a)
    assert a == random_irreducible(3, 5, seed=11)
    lin = random_irreducible(1, F7, seed=3)
    assert lin.degree == 1 and lin.is_monic()


@pytest.mark.parametrize("K", [F2, F3, F5, F101], ids=str)
def test_multiply_back_and_irreducible_factors(K):
    rng = random.Random(K.p)
    for _ in range(40):
        a = random_monic(rng.randint(1, 10), K, rng)
        if rng.random() < 0.3:
            a = a * a
        fz = factor(a, seed=rng.randrange(100))
        assert fz.expand() == a
        assert fz.degree == a.degree
        assert all(is_irreducible(b) and b.is_monic() for b, _ in fz.factors)


@settings(max_examples=40)
@given(st.lists(st.integers(0, 4), min_size=1, max_size=8), st.integers(0, 1000))
def test_seed_independence(tail, seed):
    a = Poly(tail + [1], F5, "Y")
    assert Counter(factor(a, 0).factors) == Counter(factor(a, seed).factors)


@pytest.mark.parametrize("K", [F2, F3, F5, F7], ids=str)
def test_low_degree_matches_root_search(K):
    # degree <= 3: irreducible iff no root, and linear factors match the roots
    p = K.p
    for n in (1, 2, 3):
        for tail in itertools.product(range(p), repeat=n):
            a = Poly(list(tail) + [1], K, "Y")
            roots = Counter()
            b = a
            for r in range(p):
                while b.degree > 0 and b(K(r)) == 0:
                    roots[r] += 1
                    b = b.exquo(Poly([-r, 1], K, "Y"))
            assert is_irreducible(a) == (n == 1 or not roots)
            found = Counter({int(-f.coeffs[0].value) % p: m
                             for f, m in factor(a).factors if f.degree == 1})
            assert found == roots

"""Factorization of univariate polynomials over F_q, q = p^d.

Pipeline: squarefree decomposition (with the p-th root step needed in
characteristic p), distinct-degree splitting by gcd with ``Y^(q^i) - Y``,
then Cantor-Zassenhaus equal-degree splitting.  Randomness comes from an
explicit seed so results are reproducible.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional, Union

from .errors import NonMonicInput
from .numeric import ExtField, PrimeField, field_pow
from .polynomial import Poly, gcd_monic, powmod


@dataclass(frozen=True)
class Factorization:
    unit: object
    factors: tuple  # ((monic irreducible Poly, multiplicity), ...)

    def expand(self) -> Poly:
        first = self.factors[0][0]
        result = Poly.constant(self.unit, first.domain, first.var)
        for b, e in self.factors:
            result = result * b ** e
        return result

    @property
    def degree(self) -> int:
        return sum(b.degree * e for b, e in self.factors)

    def __str__(self) -> str:
        parts = []
        if self.unit != 1:
            parts.append(str(self.unit))
        for b, e in self.factors:
            parts.append(f"({b})" + (f"^{e}" if e > 1 else ""))
        return "".join(parts) or "1"


@dataclass(frozen=True)
class PrimePowerStructure:
    base: Poly
    exponent: int


def _require_monic(a: Poly) -> None:
    if a.degree < 1:
        raise ValueError("input must have degree at least 1")
    if not a.is_monic():
        raise NonMonicInput("input must be monic")


def _canonical(factors) -> tuple:
    return tuple(sorted(factors, key=lambda be: (be[0].sort_key(), be[1])))


def _xpoly(a: Poly) -> Poly:
    return Poly.gen(a.domain, a.var)


def pth_root(a: Poly) -> Poly:
    """``C`` with ``C(Y)^p = a`` when ``a`` is a polynomial in ``Y^p``."""
    K = a.domain
    p = K.characteristic
    e = p ** (K.degree - 1)
    coeffs = a.coeffs[::p]
    if any(c for i, c in enumerate(a.coeffs) if i % p):
        raise ValueError("not a p-th power")
    return Poly._new([field_pow(c, e) for c in coeffs], K, a.var)


def squarefree_decomposition(a: Poly) -> list[tuple[Poly, int]]:
    _require_monic(a)
    return list(_canonical(_sqf(a)))


def _sqf(a: Poly) -> list[tuple[Poly, int]]:
    p = a.domain.characteristic
    out = []
    da = a.derivative()
    if not da:
        return [(b, m * p) for b, m in _sqf(pth_root(a))]
    c = gcd_monic(a, da)
    w = a.exquo(c)
    i = 1
    while w.degree > 0:
        y = gcd_monic(w, c)
        z = w.exquo(y)
        if z.degree > 0:
            out.append((z, i))
        i += 1
        w = y
        c = c.exquo(y)
    if c.degree > 0:
        out.extend((b, m * p) for b, m in _sqf(pth_root(c)))
    return out


def distinct_degree(a: Poly) -> list[tuple[Poly, int]]:
    """Split a squarefree monic ``a`` into products of equal-degree irreducibles."""
    q = a.domain.order
    x = _xpoly(a)
    h = x.divrem(a)[1]
    out = []
    i = 1
    while a.degree >= 2 * i:
        h = powmod(h, q, a)
        g = gcd_monic(a, h - x)
        if g.degree > 0:
            out.append((g, i))
            a = a.exquo(g)
            h = h.divrem(a)[1]
        i += 1
    if a.degree > 0:
        out.append((a, a.degree))
    return out


def _random_poly(K, n: int, var: str, rng: random.Random) -> Poly:
    return Poly._new([K.random_element(rng) for _ in range(n)], K, var)


def equal_degree(a: Poly, d: int, rng: random.Random) -> list[Poly]:
    """Cantor-Zassenhaus: split ``a`` (product of degree-``d`` irreducibles)."""
    if a.degree == d:
        return [a]
    K = a.domain
    q = K.order
    n = a.degree
    while True:
        r = _random_poly(K, n, a.var, rng)
        if r.degree < 1:
            continue
        if K.characteristic == 2:
            # absolute trace: sum of r^(2^i), i < d * log2(q)
            t = r.divrem(a)[1]
            s = t
            for _ in range(d * K.degree - 1):
                t = (t * t).divrem(a)[1]
                s = s + t
        else:
            s = powmod(r, (q ** d - 1) // 2, a) - 1
        g = gcd_monic(a, s) if s else a
        if 0 < g.degree < n:
            return equal_degree(g, d, rng) + equal_degree(a.exquo(g), d, rng)


def factor(a: Poly, seed: int = 0) -> Factorization:
    """Complete factorization of a monic polynomial over a finite field."""
    _require_monic(a)
    rng = random.Random(seed)
    out = []
    for b, m in squarefree_decomposition(a):
        for part, d in distinct_degree(b):
            for irr in equal_degree(part, d, rng):
                out.append((irr, m))
    return Factorization(a.domain.one, _canonical(out))


def factor_any(a: Poly, seed: int = 0) -> Factorization:
    """Like :func:`factor` but accepts a non-monic input and records the unit."""
    if a.degree < 1:
        raise ValueError("input must have degree at least 1")
    lc = a.lc
    fz = factor(a.monic(), seed)
    return Factorization(lc, fz.factors)


def _prime_divisors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible(a: Poly) -> bool:
    """Rabin's test: ``Y^(q^n) = Y mod a`` and ``gcd(Y^(q^(n/r)) - Y, a) = 1``."""
    _require_monic(a)
    n = a.degree
    if n == 1:
        return True
    q = a.domain.order
    x = _xpoly(a)
    checkpoints = {n // r for r in _prime_divisors(n)}
    h = x.divrem(a)[1]
    for k in range(1, n + 1):
        h = powmod(h, q, a)
        if k in checkpoints:
            if gcd_monic(a, h - x).degree > 0:
                return False
    return h == x


def _as_field(field_or_q) -> Union[PrimeField, ExtField]:
    if isinstance(field_or_q, int):
        return PrimeField(field_or_q)
    return field_or_q


def random_monic(n: int, field, rng: random.Random, var: str = "Y") -> Poly:
    K = _as_field(field)
    return Poly._new([K.random_element(rng) for _ in range(n)] + [K.one], K, var)


def random_irreducible(n: int, field, seed: int = 0, var: str = "Y") -> Poly:
    """A monic irreducible polynomial of degree ``n``, deterministic in ``seed``."""
    if n < 1:
        raise ValueError("degree must be at least 1")
    K = _as_field(field)
    rng = random.Random(seed) if not isinstance(seed, random.Random) else seed
    while True:
        cand = random_monic(n, K, rng, var)
        if is_irreducible(cand):
            return cand


def prime_power_structure(a: Poly, seed: int = 0) -> Optional[PrimePowerStructure]:
    """``(B, e)`` when ``a = B^e`` with ``B`` irreducible, else ``None``."""
    fz = factor(a, seed)
    if len(fz.factors) != 1:
        return None
    b, e = fz.factors[0]
    return PrimePowerStructure(b, e)

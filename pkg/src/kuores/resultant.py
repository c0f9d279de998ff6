"""Resultants by three independent routes, and the composed resultant.

Convention: ``Res(A, B) = lc(A)^deg(B) * prod B(a)`` over the roots ``a`` of
``A``, which is the determinant of the Sylvester matrix whose first
``deg B`` rows hold the shifted coefficients of ``A``.  With this
orientation the composed resultant

    h(T) = (-1)^deg(g) * Res_Y(g, f - T) = prod (T - f(y_i))

is literally the product over the roots ``y_i`` of a monic ``g``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Any, Iterator, Optional, Sequence

from .errors import (
    DegenerateInput,
    DegenerateResultant,
    FieldMismatch,
    NonMonicInput,
    ResultantMismatch,
    VariableMismatch,
)
from .polynomial import Poly, PolyRing, lift_coefficients


@dataclass(frozen=True)
class SylvesterMatrix:
    rows: tuple
    domain: Any

    @property
    def dimension(self) -> int:
        return len(self.rows)


@dataclass(frozen=True)
class KuoResult:
    """``h = (-1)^m Res_Y(g, f - T)`` together with how it was obtained."""

    h: Poly
    degree: int
    sign: int
    interpolation_checked: bool


def _check_pair(a: Poly, b: Poly, var: Optional[str]) -> None:
    if a.var != b.var:
        raise VariableMismatch(f"resultant of polynomials in {a.var} and {b.var}")
    if var is not None and var != a.var:
        raise VariableMismatch(f"eliminating {var} from polynomials in {a.var}")
    if a.domain != b.domain:
        raise FieldMismatch(f"{a.domain} vs {b.domain}")


def sylvester_matrix(a: Poly, b: Poly, var: Optional[str] = None) -> SylvesterMatrix:
    _check_pair(a, b, var)
    m, n = a.degree, b.degree
    if m <= 0 and n <= 0:
        raise DegenerateResultant("Sylvester matrix of two constants")
    if m < 0 or n < 0:
        raise DegenerateResultant("Sylvester matrix of the zero polynomial")
    zero = a.domain.zero
    size = m + n
    rows = []
    for src, count in ((a, n), (b, m)):
        top = list(reversed(src.coeffs))
        for i in range(count):
            row = [zero] * size
            row[i:i + len(top)] = top
            rows.append(tuple(row))
    return SylvesterMatrix(tuple(rows), a.domain)


def det_bareiss(matrix, domain=None):
    """Fraction-free determinant; every division performed is exact."""
    if isinstance(matrix, SylvesterMatrix):
        domain = matrix.domain
        matrix = matrix.rows
    if domain is None:
        raise TypeError("domain required for a bare matrix")
    M = [list(r) for r in matrix]
    n = len(M)
    if any(len(r) != n for r in M):
        raise ValueError("matrix is not square")
    if n == 0:
        return domain.one
    is_zero = domain.is_zero
    sign = 1
    prev = None
    for k in range(n - 1):
        if is_zero(M[k][k]):
            for i in range(k + 1, n):
                if not is_zero(M[i][k]):
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return domain.zero
        pivot = M[k][k]
        for i in range(k + 1, n):
            row, lead = M[i], M[i][k]
            lead_zero = is_zero(lead)
            for j in range(k + 1, n):
                x = row[j] * pivot
                if not lead_zero:
                    x = x - lead * M[k][j]
                row[j] = x if prev is None else domain.exquo(x, prev)
            row[k] = domain.zero
        prev = pivot
    d = M[n - 1][n - 1]
    return d if sign == 1 else -d


def _trivial_resultant(a: Poly, b: Poly):
    """Handle zero and constant operands; None when a real computation is needed."""
    m, n = a.degree, b.degree
    if m <= 0 and n <= 0:
        raise DegenerateResultant("resultant of two constants")
    if m < 0 or n < 0:
        return a.domain.zero
    if n == 0:
        return b.lc ** m
    if m == 0:
        return a.lc ** n
    return None


def resultant_bareiss(a: Poly, b: Poly, var: Optional[str] = None):
    _check_pair(a, b, var)
    t = _trivial_resultant(a, b)
    if t is not None:
        return t
    return det_bareiss(sylvester_matrix(a, b))


def resultant_subresultant(a: Poly, b: Poly, var: Optional[str] = None):
    """Resultant from the subresultant polynomial remainder sequence."""
    _check_pair(a, b, var)
    t = _trivial_resultant(a, b)
    if t is not None:
        return t
    m, n = a.degree, b.degree
    if m < n:
        r = _subresultant_prs(b, a)
        return -r if (m * n) % 2 else r
    return _subresultant_prs(a, b)


def _subresultant_prs(f: Poly, g: Poly):
    # Requires deg f >= deg g >= 1; every division below is exact.
    K = f.domain
    n, m = f.degree, g.degree
    d = n - m
    one = K.one
    b = (-one) ** (d + 1)
    h = f.prem(g) * b
    lc = g.lc
    c = lc ** d
    s_last = c
    c = -c
    while h:
        k = h.degree
        f, g, m, d = g, h, k, m - k
        b = -lc * c ** d
        h = f.prem(g).exquo(b)
        lc = g.lc
        if d > 1:
            c = K.exquo((-lc) ** d, c ** (d - 1))
        else:
            c = -lc
        s_last = -c
    if g.degree > 0:
        return K.zero
    return s_last


# -- evaluation / interpolation ----------------------------------------------


def ground_field(domain):
    while isinstance(domain, PolyRing):
        domain = domain.base
    return domain


def _nodes(F) -> Iterator:
    if getattr(F, "is_finite", False):
        yield from F.elements()
        return
    yield F.convert(0)
    for k in itertools.count(1):
        yield F.convert(k)
        yield F.convert(-k)


def _max_inner_degree(p: Poly) -> int:
    return max((c.degree for c in p.coeffs), default=0)


def interpolate(nodes: Sequence, values: Sequence, domain, var: str) -> Poly:
    """Newton interpolation; ``nodes`` in the ground field, ``values`` in ``domain``."""
    F = ground_field(domain)
    coef = list(values)
    n = len(nodes)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) * F.inv(nodes[i] - nodes[i - j])
    result = Poly.constant(coef[n - 1], domain, var)
    for i in range(n - 2, -1, -1):
        lin = Poly._new([domain.convert(-nodes[i]), domain.one], domain, var)
        result = result * lin + Poly.constant(coef[i], domain, var)
    return result


def resultant_interpolation(a: Poly, b: Poly, var: Optional[str] = None) -> Optional[Poly]:
    """Resultant over ``K[v]`` by evaluating ``v`` at ground-field points.

    Returns ``None`` when the ground field has too few usable points
    (points where either leading coefficient vanishes are skipped).
    """
    _check_pair(a, b, var)
    ring = a.domain
    if not isinstance(ring, PolyRing):
        raise TypeError("interpolation needs coefficients in a polynomial ring")
    t = _trivial_resultant(a, b)
    if t is not None:
        return t
    K = ring.base
    F = ground_field(K)
    bound = b.degree * _max_inner_degree(a) + a.degree * _max_inner_degree(b)
    need = bound + 1
    if getattr(F, "is_finite", False) and F.order < need:
        return None
    nodes, values = [], []
    for t in _nodes(F):
        tk = K.convert(t)
        la, lb = a.lc(tk), b.lc(tk)
        if K.is_zero(la) or K.is_zero(lb):
            continue
        sa = Poly._new([c(tk) for c in a.coeffs], K, a.var)
        sb = Poly._new([c(tk) for c in b.coeffs], K, b.var)
        nodes.append(t)
        values.append(resultant_subresultant(sa, sb))
        if len(nodes) == need:
            break
    if len(nodes) < need:
        return None
    return interpolate(nodes, values, K, ring.var)


def resultant(a: Poly, b: Poly, var: Optional[str] = None, check: bool = False):
    """``Res_var(a, b)``; with ``check`` the Bareiss determinant must agree."""
    r = resultant_subresultant(a, b, var)
    if check:
        r2 = resultant_bareiss(a, b, var)
        if r != r2:
            raise ResultantMismatch(f"subresultant {r} != Bareiss {r2}")
    return r


def kuo_resultant(g: Poly, f: Poly, check: bool = True) -> KuoResult:
    """``h(T) = (-1)^deg(g) Res_Y(g, f - T)`` for monic ``g``.

    ``h`` is computed with the Bareiss determinant over ``K[T]``.  With
    ``check`` it is recomputed by evaluation at ground-field points and
    interpolation whenever the ground field has enough points.
    """
    _check_pair(g, f, None)
    if g.var == "T":
        raise VariableMismatch("g and f must not be polynomials in T")
    if g.degree < 1:
        raise DegenerateInput("g must have degree at least 1")
    if not g.is_monic():
        raise NonMonicInput("g must be monic")
    m = g.degree
    ring = PolyRing(g.domain, "T")
    gl = lift_coefficients(g, ring)
    fl = lift_coefficients(f, ring) - ring.gen
    sign = -1 if m % 2 else 1
    res = resultant_bareiss(gl, fl)
    h = res if sign == 1 else -res
    checked = False
    if check:
        alt = resultant_interpolation(gl, fl)
        if alt is not None:
            checked = True
            if alt != res:
                raise ResultantMismatch(f"Bareiss {res} != interpolation {alt}")
    assert h.degree == m and h.is_monic(), "composed resultant must be monic of degree deg g"
    return KuoResult(h, m, sign, checked)

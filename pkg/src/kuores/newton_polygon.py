"""Newton polygons over k[X][T] and the Eisenstein-Dumas criterion.

Coefficients are polynomials in X; only their X-orders matter.  A monic
``h`` of T-degree ``n`` whose polygon is the single segment from
``(0, m)`` to ``(n, 0)`` with ``gcd(n, m) = 1`` is irreducible over
``k((X))`` (the segment has no interior lattice point), hence over
``k[[X]]`` and ``k[X]``.  The test is one-sided: failure is reported as
inconclusive, never as reducible.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd
from typing import Union

from .errors import ExactDivisionError, NonMonicInput, UndefinedResult
from .factor_ff import PrimePowerStructure
from .polynomial import Poly, PolyRing, primitive_gcd


class Verdict(str, enum.Enum):
    IRREDUCIBLE = "irreducible"
    REDUCIBLE = "reducible"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class IrreducibilityVerdict:
    verdict: Verdict
    reason: str

    @property
    def irreducible(self) -> bool:
        return self.verdict is Verdict.IRREDUCIBLE


@dataclass(frozen=True)
class NewtonPolygon:
    points: tuple  # (T-degree, X-order) for each nonzero coefficient
    vertices: tuple

    @property
    def edges(self) -> tuple:
        return tuple(zip(self.vertices, self.vertices[1:]))

    def height_at(self, j) -> tuple[int, int]:
        """Hull value at abscissa ``j`` as ``(numerator, denominator)``."""
        for (x0, y0), (x1, y1) in self.edges:
            if x0 <= j <= x1:
                return (y0 * (x1 - j) + y1 * (j - x0), x1 - x0)
        raise ValueError(f"abscissa {j} outside the polygon")

    def on_or_above(self, point) -> bool:
        j, o = point
        if len(self.vertices) == 1:
            return point[0] == self.vertices[0][0] and o >= self.vertices[0][1]
        num, den = self.height_at(j)
        return o * den >= num


def x_order(c: Poly) -> int:
    for i, a in enumerate(c.coeffs):
        if a:
            return i
    raise UndefinedResult("order of the zero polynomial")


def _cross(o, a, b) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def newton_polygon(h: Poly) -> NewtonPolygon:
    if not isinstance(h.domain, PolyRing):
        raise TypeError("expected a polynomial with polynomial coefficients")
    if h.is_zero():
        raise UndefinedResult("Newton polygon of the zero polynomial")
    pts = [(j, x_order(c)) for j, c in enumerate(h.coeffs) if c]
    hull = []
    for p in pts:
        # pop while the turn is not strictly counter-clockwise (drops collinear points)
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], p) <= 0:
            hull.pop()
        hull.append(p)
    return NewtonPolygon(tuple(pts), tuple(hull))


def _require_monic(h: Poly) -> None:
    if h.degree < 1:
        raise ValueError("T-degree must be at least 1")
    if not h.is_monic():
        raise NonMonicInput("polynomial must be monic in its outer variable")


def dumas_irreducible(h: Poly) -> IrreducibilityVerdict:
    _require_monic(h)
    n = h.degree
    poly = newton_polygon(h)
    v = poly.vertices
    if len(v) != 2 or v[0][0] != 0:
        return IrreducibilityVerdict(
            Verdict.INCONCLUSIVE, f"polygon vertices {list(v)} are not a single edge from T^0")
    m = v[0][1]
    if m < 1:
        return IrreducibilityVerdict(Verdict.INCONCLUSIVE, "edge is horizontal (constant term is a unit)")
    g = gcd(n, m)
    if g != 1:
        return IrreducibilityVerdict(
            Verdict.INCONCLUSIVE, f"edge (0,{m})-({n},0) has gcd({n},{m}) = {g}")
    return IrreducibilityVerdict(
        Verdict.IRREDUCIBLE, f"single edge (0,{m})-({n},0), gcd({n},{m}) = 1")


def weighted_initial_part(h: Poly, a: int, b: int) -> Poly:
    """Monomials ``c X^i T^j`` of ``h`` minimising ``a*i + b*j``."""
    if h.is_zero():
        raise UndefinedResult("initial part of the zero polynomial")
    if a < 1 or b < 1:
        raise ValueError("weights must be positive")
    K = h.domain.base
    best = None
    for j, c in enumerate(h.coeffs):
        for i, s in enumerate(c.coeffs):
            if s:
                w = a * i + b * j
                best = w if best is None else min(best, w)
    out = []
    for j, c in enumerate(h.coeffs):
        keep = [s if s and a * i + b * j == best else K.zero for i, s in enumerate(c.coeffs)]
        out.append(Poly._new(keep, K, c.var))
    return Poly._new(out, h.domain, h.var)


def prime_power_over_series(h: Poly) -> Union[PrimePowerStructure, IrreducibilityVerdict]:
    """Detect ``h = s^e`` with ``s`` certified irreducible.

    ``s = h / gcd(h, dh/dT)`` is the squarefree part (characteristic 0).
    Returns an inconclusive verdict when the structure cannot be certified.
    """
    _require_monic(h)
    dh = h.derivative()
    if dh.is_zero():
        return IrreducibilityVerdict(Verdict.INCONCLUSIVE, "derivative vanishes")
    try:
        g = primitive_gcd(h, dh)
        s = h.exquo(g)
    except ExactDivisionError:
        return IrreducibilityVerdict(Verdict.INCONCLUSIVE, "squarefree part is not exact")
    if not s.is_monic():
        return IrreducibilityVerdict(Verdict.INCONCLUSIVE, "squarefree part is not monic")
    n, d = h.degree, s.degree
    if n % d or s ** (n // d) != h:
        return IrreducibilityVerdict(
            Verdict.INCONCLUSIVE, "factors occur with different multiplicities")
    if d > 1 and not dumas_irreducible(s).irreducible:
        return IrreducibilityVerdict(
            Verdict.INCONCLUSIVE, f"cannot certify {s} irreducible: {dumas_irreducible(s).reason}")
    return PrimePowerStructure(s, n // d)

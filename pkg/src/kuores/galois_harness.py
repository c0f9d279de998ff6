"""Galois-theoretic checks instantiated over finite fields.

Over ``F_p`` the Galois group of any finite extension is cyclic, generated
by Frobenius ``x -> x^p``.  The group of a polynomial is therefore never
built explicitly: its action on the roots is read off from Frobenius
orbits inside a splitting field ``F_{p^L}``, where ``L`` is the lcm of the
degrees of the distinct irreducible factors.  Embedding extension and
normality arguments over general fields reduce here to facts about these
orbits and are not modelled separately.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import lcm

from .errors import TheoremViolation
from .factor_ff import factor, prime_power_structure, random_irreducible, _require_monic
from .numeric import ExtElement, ExtField, PrimeField, frobenius
from .polynomial import Poly, eval_lifted
from .resultant import kuo_resultant


@dataclass(frozen=True)
class SplittingField:
    field: ExtField
    degree: int
    roots: tuple  # ((root, multiplicity), ...)

    @property
    def distinct_roots(self) -> tuple:
        return tuple(r for r, _ in self.roots)


@dataclass(frozen=True)
class OrbitPartition:
    orbits: tuple  # each orbit lists r, r^p, r^(p^2), ...

    def __len__(self) -> int:
        return len(self.orbits)


def splitting_field(f: Poly, seed: int = 0) -> SplittingField:
    """Splitting field of a monic ``f`` over ``F_p`` and all its roots."""
    _require_monic(f)
    base = f.domain
    if not isinstance(base, PrimeField):
        raise TypeError("splitting fields are built over a prime field")
    L = 1
    for b, _ in factor(f, seed).factors:
        L = lcm(L, b.degree)
    modulus = random_irreducible(L, base, seed, var="Z")
    E = ExtField(base.p, modulus)
    lifted = f.convert_to(E)
    roots = []
    for lin, mult in factor(lifted, seed).factors:
        if lin.degree != 1:
            raise TheoremViolation(f"factor {lin} does not split over F_{base.p}^{L}")
        roots.append((-lin.coeffs[0], mult))
    return SplittingField(E, L, tuple(roots))


def frobenius_orbits(S: SplittingField) -> OrbitPartition:
    seen = set()
    orbits = []
    for r in S.distinct_roots:
        if r in seen:
            continue
        orbit = [r]
        seen.add(r)
        x = frobenius(r)
        while x != r:
            orbit.append(x)
            seen.add(x)
            x = frobenius(x)
        orbits.append(tuple(orbit))
    return OrbitPartition(tuple(orbits))


def transitivity_check(f: Poly, seed: int = 0) -> bool:
    """Whether Frobenius permutes the roots of ``f`` transitively.

    Raises :class:`TheoremViolation` if the answer disagrees with ``f``
    being a power of a single irreducible polynomial.
    """
    S = splitting_field(f, seed)
    transitive = len(frobenius_orbits(S)) == 1
    prime_power = prime_power_structure(f, seed) is not None
    if transitive != prime_power:
        raise TheoremViolation(
            f"{f}: single orbit={transitive} but prime power={prime_power}")
    return transitive


def expand_over_roots(S: SplittingField, f: Poly) -> Poly:
    """``prod (T - f(y))`` over the roots ``y`` (with multiplicity), in ``F_{p^L}[T]``."""
    E = S.field
    out = Poly.constant(1, E, "T")
    for y, mult in S.roots:
        lin = Poly._new([-eval_lifted(f, y), E.one], E, "T")
        out = out * lin ** mult
    return out


def product_formula_check(g: Poly, f: Poly, seed: int = 0) -> bool:
    """Compare the composed resultant with the product over the roots of ``g``."""
    S = splitting_field(g, seed)
    prod = expand_over_roots(S, f)
    if not all(c.in_base_field() for c in prod.coeffs):
        return False
    prod_base = Poly._new([c.to_base() for c in prod.coeffs], g.domain, "T")
    return prod_base == kuo_resultant(g, f).h


def minimal_polynomial(alpha, var: str = "X") -> Poly:
    """Product of ``(X - c)`` over the distinct Frobenius conjugates of ``alpha``."""
    if not isinstance(alpha, ExtElement):
        return Poly([-alpha, 1], alpha.field, var)
    E = alpha.field
    out = Poly.constant(1, E, var)
    c = alpha
    while True:
        out = out * Poly._new([-c, E.one], E, var)
        c = frobenius(c)
        if c == alpha:
            break
    return Poly._new([x.to_base() for x in out.coeffs], E.base, var)

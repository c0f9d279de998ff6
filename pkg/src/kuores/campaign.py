"""Randomized verification campaigns over prime fields.

Each trial ``i`` draws from its own ``random.Random(seed + i)``, so a report
depends only on ``(theorem, p, max_deg, trials, seed)``.
"""
from __future__ import annotations

import itertools
import random
import time
from dataclasses import asdict, dataclass
from typing import Callable, Optional

from .errors import TheoremViolation
from .factor_ff import factor, prime_power_structure, random_irreducible, random_monic
from .galois_harness import product_formula_check, transitivity_check
from .numeric import PrimeField
from .polynomial import Poly
from .resultant import kuo_resultant

THEOREMS = ("main", "converse", "transitivity", "product-formula")


@dataclass(frozen=True)
class CampaignReport:
    theorem: str
    field: str
    trials: int
    seed: int
    passed: int
    failed: int
    counterexample: Optional[dict]
    wall_time: Optional[float] = None

    def to_dict(self) -> dict:
        return asdict(self)


def _distinct_irreducibles(K, max_deg: int, rng: random.Random) -> list[Poly]:
    while True:
        k = rng.choice((2, 3))
        if max_deg < k:
            k = 2
        degs = [1] * k
        for _ in range(rng.randint(0, max_deg - k)):
            degs[rng.randrange(k)] += 1
        parts = [random_irreducible(d, K, rng) for d in degs]
        if len(set(parts)) == k:
            return parts


def _trial_main(K, max_deg, rng, seed):
    g = random_irreducible(rng.randint(1, max_deg), K, rng)
    f = random_monic(rng.randint(1, max_deg), K, rng)
    h = kuo_resultant(g, f).h
    ok = prime_power_structure(h, seed) is not None
    return ok, {"g": str(g), "f": str(f), "h": str(h)}


def _trial_converse(K, max_deg, rng, seed):
    parts = _distinct_irreducibles(K, max_deg, rng)
    g = parts[0]
    for q in parts[1:]:
        g = g * q
    f = random_monic(rng.randint(1, max_deg), K, rng)
    h = kuo_resultant(g, f).h
    fz = factor(h, seed)
    irreducible = len(fz.factors) == 1 and fz.factors[0][1] == 1
    return not irreducible, {"g": str(g), "f": str(f), "h": str(h)}


def _trial_transitivity(K, max_deg, rng, seed):
    f = random_monic(rng.randint(1, max_deg), K, rng, "X")
    try:
        transitivity_check(f, seed)
    except TheoremViolation:
        return False, {"f": str(f)}
    return True, {"f": str(f)}


def _trial_product(K, max_deg, rng, seed):
    g = random_irreducible(rng.randint(1, max_deg), K, rng)
    f = Poly([K.random_element(rng) for _ in range(rng.randint(0, max_deg + 1))], K, "Y")
    return product_formula_check(g, f, seed), {"g": str(g), "f": str(f)}


_TRIALS: dict[str, Callable] = {
    "main": _trial_main,
    "converse": _trial_converse,
    "transitivity": _trial_transitivity,
    "product-formula": _trial_product,
}


def run_trial(theorem: str, p: int, max_deg: int, trial_seed: int) -> tuple[bool, dict]:
    K = PrimeField(p)
    return _TRIALS[theorem](K, max_deg, random.Random(trial_seed), trial_seed)


def theorem_campaign(theorem: str, p: int, max_deg: int, trials: int, seed: int = 0,
                     timing: bool = False) -> CampaignReport:
    """Run ``trials`` independent instances of one statement over ``F_p``.

    ``wall_time`` is only filled in with ``timing=True`` so that reports
    stay byte-identical across runs by default.
    """
    if theorem not in _TRIALS:
        raise ValueError(f"unknown theorem {theorem!r}; choose from {', '.join(THEOREMS)}")
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if max_deg < 1 or (theorem == "converse" and max_deg < 2):
        raise ValueError("max degree too small for this campaign")
    PrimeField(p)
    start = time.perf_counter()
    passed = failed = 0
    first = None
    for i in range(trials):
        ok, instance = run_trial(theorem, p, max_deg, seed + i)
        if ok:
            passed += 1
        else:
            failed += 1
            if first is None:
                first = dict(instance, trial=i)
    elapsed = round(time.perf_counter() - start, 3) if timing else None
    return CampaignReport(theorem, f"fp:{p}", trials, seed, passed, failed, first, elapsed)


def exhaustive_transitivity(p: int, max_deg: int) -> tuple[int, int]:
    """Check every monic polynomial of degree 1..max_deg; returns (checked, violations)."""
    K = PrimeField(p)
    checked = violations = 0
    for n in range(1, max_deg + 1):
        for tail in itertools.product(range(p), repeat=n):
            f = Poly(list(tail) + [1], K, "X")
            checked += 1
            try:
                transitivity_check(f)
            except TheoremViolation:
                violations += 1
    return checked, violations

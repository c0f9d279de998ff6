import random

import pytest
from hypothesis import strategies as st

from kuores.numeric import QQ, PrimeField
from kuores.polynomial import Poly


def polys(domain, var="Y", max_deg=5, lo=-9, hi=9):
    return st.lists(st.integers(lo, hi), max_size=max_deg + 1).map(
        lambda cs: Poly(cs, domain, var))


def nonzero_polys(domain, var="Y", max_deg=5, min_deg=0):
    return st.lists(st.integers(-9, 9), min_size=min_deg + 1, max_size=max_deg + 1).map(
        lambda cs: Poly(cs, domain, var)).filter(lambda p: p.degree >= min_deg)


def cofactor_det(M):
    """Laplace expansion along the first row; independent of Bareiss."""
    n = len(M)
    if n == 0:
        return 1
    if n == 1:
        return M[0][0]
    total = None
    for j in range(n):
        if not M[0][j]:
            continue
        minor = [row[:j] + row[j + 1:] for row in M[1:]]
        term = M[0][j] * cofactor_det(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total if total is not None else M[0][0] * 0


@pytest.fixture
def rng():
    return random.Random(20261018)


F2, F3, F5, F7, F13, F101 = (PrimeField(p) for p in (2, 3, 5, 7, 13, 101))
FIELDS = [QQ, F5]

# one line per acceptance criterion, echoed in the terminal summary
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[0][1:])):
            terminalreporter.write_line(line)

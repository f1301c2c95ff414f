from itertools import combinations

import pytest

from polyforge.incidence import IncidenceStructure


def brute_force_f_vector(P: IncidenceStructure) -> tuple:
    """Independent face count: test every vertex subset for closedness.

    A nonempty subset S is a face iff it equals the intersection of the
    facets containing it (the whole vertex set counts as a face).  Ranks
    come from longest chains among the closed sets.  Exponential; keep
    n <= 14.
    """
    n = P.num_vertices
    V = frozenset(range(n))
    closed = []
    for r in range(1, n + 1):
        for S in combinations(range(n), r):
            S = frozenset(S)
            over = [F for F in P.facets if S <= F]
            hull = frozenset.intersection(*over) if over else V
            if hull == S:
                closed.append(S)
    closed.sort(key=len)
    rank = {}
    for S in closed:
        below = [rank[T] for T in closed if len(T) < len(S) and T < S]
        rank[S] = 1 + max(below) if below else 0
    counts = [0] * P.dim
    for S, r in rank.items():
        if r < P.dim:
            counts[r] += 1
    return tuple(counts)


_ACCEPTANCE = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::" in report.nodeid and report.when == "call":
        _ACCEPTANCE[report.nodeid.split("::")[-1]] = report.outcome
    elif "test_acceptance.py::" in report.nodeid and report.when == "setup" and report.failed:
        _ACCEPTANCE[report.nodeid.split("::")[-1]] = "error"


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_ACCEPTANCE):
        outcome = _ACCEPTANCE[name]
        tag = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{tag}  {name}")


@pytest.fixture
def rng():
    import random
    return random.Random(12345)

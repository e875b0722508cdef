from __future__ import annotations

from collections import defaultdict
from importlib import resources
from pathlib import Path

import pytest

from monolc.combinat import MonomialIdeal
from monolc.verify import random_corpus

CORPUS_SEED = 20240601
STAB_SEED = 7


@pytest.fixture(scope="session")
def corpus_dir() -> Path:
    return Path(str(resources.files("monolc") / "corpus"))


@pytest.fixture(scope="session")
def random_ideals() -> list[MonomialIdeal]:
    """Fifty seeded squarefree ideals, n <= 5, at most 5 generators."""
    return random_corpus(CORPUS_SEED, 50, 5, 5)


@pytest.fixture(scope="session")
def small_ideals() -> list[MonomialIdeal]:
    """Twenty seeded squarefree ideals, n <= 4, at most 4 generators."""
    return random_corpus(STAB_SEED, 20, 4, 4)


def ideal(n: int, *sets) -> MonomialIdeal:
    """Squarefree ideal from variable-letter strings, e.g. ``ideal(4, "ab", "cd")``."""
    return MonomialIdeal.from_sets(n, [[ord(ch) - ord("a") for ch in s] for s in sets])


# one summary line per acceptance criterion

_outcomes: dict[int, list[bool]] = defaultdict(list)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and not report.passed):
        _outcomes[marker.args[0]].append(report.passed)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_outcomes):
        results = _outcomes[n]
        status = "PASS" if all(results) else "FAIL"
        terminalreporter.write_line(f"criterion {n:>2}: {status} ({sum(results)}/{len(results)} tests passed)")

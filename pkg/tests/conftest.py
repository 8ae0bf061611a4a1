from __future__ import annotations

import numpy as np
import pytest
from hypothesis import strategies as st

from linedigraph.digraph import Digraph

# Filled by tests/test_acceptance.py; one entry per acceptance criterion.
ACCEPTANCE_RESULTS: dict[int, tuple[bool, str]] = {}


@st.composite
def digraphs(draw, min_n: int = 1, max_n: int = 6, loops: bool = False, min_arcs: int = 0):
    if min_arcs and not loops:
        min_n = max(min_n, 2)
    n = draw(st.integers(min_n, max_n))
    pairs = [(a, b) for a in range(n) for b in range(n) if loops or a != b]
    arcs = draw(st.sets(st.sampled_from(pairs), min_size=min(min_arcs, len(pairs))) if pairs else st.just(set()))
    return Digraph(n, arcs, allow_loops=loops)


@pytest.fixture
def rng():
    return np.random.default_rng(20240917)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for idx in sorted(ACCEPTANCE_RESULTS):
        ok, line = ACCEPTANCE_RESULTS[idx]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] #{idx:<2} {line}")

import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from icpart.graph import Graph, build  # noqa: E402


@st.composite
def graphs(draw, min_order=0, max_order=7):
    n = draw(st.integers(min_order, max_order))
    pairs = [(u, v) for v in range(n) for u in range(v)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return build(n, [p for p, keep in zip(pairs, chosen) if keep])


@pytest.fixture(autouse=True)
def private_cache(tmp_path, monkeypatch):
    # keep every test away from the user's real cache file
    monkeypatch.setenv("ICPART_CACHE", str(tmp_path / "cache.jsonl"))
    return tmp_path / "cache.jsonl"


def family_b_six() -> Graph:
    """The order-6 member of family B, written out edge by edge.

    K4 on v1..v4 (0..3), v5 (4) adjacent to v3 and v4, v6 (5) adjacent to v4.
    """
    edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (2, 4), (3, 4), (3, 5)]
    return build(6, edges)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(module.RESULTS):
        terminalreporter.write_line(module.RESULTS[number])

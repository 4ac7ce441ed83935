import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from mextremal.graphcore import ColoredMultigraph  # noqa: E402

ACCEPTANCE: list[tuple[str, bool, str]] = []


def record(criterion: str, ok: bool, detail: str = "") -> None:
    ACCEPTANCE.append((criterion, ok, detail))


@pytest.fixture
def acceptance():
    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}" + (f"  -- {detail}" if detail else ""))


@st.composite
def colored_graphs(draw, min_n=0, max_n=5, r=2, density=0.5):
    n = draw(st.integers(min_n, max_n))
    full = (1 << r) - 1
    masks = {}
    for u in range(n):
        for v in range(u + 1, n):
            if draw(st.floats(0, 1)) < density:
                masks[(u, v)] = draw(st.integers(1, full))
    return ColoredMultigraph.from_masks(n, r, masks)

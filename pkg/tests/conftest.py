import sys
from pathlib import Path

import pytest

from singlip.graph import load_graph

DATA = Path(__file__).parent / "data"


@pytest.fixture
def data_dir():
    return DATA


@pytest.fixture
def ex56():
    return load_graph(DATA / "example56.graph")


@pytest.fixture
def e8():
    return load_graph(DATA / "e8.graph")


@pytest.fixture
def a2():
    return load_graph(DATA / "a2.graph")


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        ok, title, detail = results[number]
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'} - {title}"
        if detail:
            line += f" ({detail})"
        terminalreporter.write_line(line)

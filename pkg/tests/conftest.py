import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from wellcover import SimplicialComplex  # noqa: E402

# Labelled as in the worked example: F1 = x3x4x5, F2 = x3x5x6, F3 = x1x2x3, F4 = x1x3x4
EXAMPLE_FACETS = ["x3 x4 x5", "x3 x5 x6", "x1 x2 x3", "x1 x3 x4"]
EXAMPLE_TEXT = "".join(f + "\n" for f in EXAMPLE_FACETS)


@pytest.fixture
def example():
    return SimplicialComplex.from_facets(EXAMPLE_FACETS)


@pytest.fixture
def triangle():
    return SimplicialComplex.from_facets(["x y", "y z", "x z"])


@pytest.fixture
def path():
    return SimplicialComplex.from_facets(["a b", "b c", "c d"])


@pytest.fixture
def matching():
    return SimplicialComplex.from_facets(["a b", "c d"])


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for n in sorted(results):
            terminalreporter.write_line(results[n])

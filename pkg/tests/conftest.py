import sys

import pytest

from pathalg.algebra import minpoly_4cos2
from pathalg.graph import build_graph
from pathalg.paths import PolyFamily

# Labels follow the worked Coxeter example: r, s, t, u, v are vertices 1..5.
EXAMPLE_EDGES = [
    ("alpha", 1, 2),
    ("beta", 4, 3),
    ("gamma", 1, 4),
    ("delta", 4, 5),
    ("eps", 2, 3),
    ("zeta", 3, 5),
]
EXAMPLE_M = {"alpha": 3, "beta": 6, "gamma": 4, "eps": 5, "zeta": 5}

EXAMPLE_GRAPH_FILE = """\
# worked Coxeter example, vertices r s t u v = 1..5
vertices 5
edge alpha 1 2
edge beta 4 3
edge gamma 1 4
edge delta 4 5
edge eps 2 3
edge zeta 3 5
poly alpha -1 1       # C_3
poly beta -3 1        # C_6
poly gamma -2 1       # C_4
poly eps 1 -3 1       # C_5
poly zeta 1 -3 1      # C_5
"""


@pytest.fixture
def example_graph():
    return build_graph(5, EXAMPLE_EDGES)


@pytest.fixture
def example_family():
    return PolyFamily({k: minpoly_4cos2(m) for k, m in EXAMPLE_M.items()})


def pytest_report_header(config):
    return "randomized tests use fixed seeds (printed in failure messages)"


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[k])

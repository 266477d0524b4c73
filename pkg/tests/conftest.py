import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from coprime_nilpotency import alternating, parse_cycles, subgroup_from  # noqa: E402
from coprime_nilpotency.catalog import default_catalog_spec, expand_catalog  # noqa: E402


@pytest.fixture(scope="session")
def catalog():
    return expand_catalog(default_catalog_spec())


@pytest.fixture(scope="session")
def A5():
    return alternating(5)


@pytest.fixture(scope="session")
def classic_pqr(A5):
    """The Sylow 2-, 3- and 5-subgroups of A5 from the standard textbook generators."""
    P = subgroup_from(A5, [parse_cycles("(1,2)(3,4)", 5), parse_cycles("(1,3)(2,4)", 5)])
    Q = subgroup_from(A5, [parse_cycles("(1,2,3)", 5)])
    R = subgroup_from(A5, [parse_cycles("(1,2,3,4,5)", 5)])
    return P, Q, R


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)

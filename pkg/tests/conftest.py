import sys

import pytest

from lufarray import HAVE_EXT, rank_reduce

EXAMPLE = "aabbabaabbaababbabab"
EXAMPLE_LUF = [20, 3, 12, 9, 12, 3, 14, 3, 11, 3, 10, 5, 2, 3, 5, 2, 2, 2, 2, 1]
EXAMPLE_LSF_LEN = [5, 6, 5, 4, 3, 4, 3, 4, 3, 2, 1, 4, 3, 2, 1, 3, 2, 1, 0, 0]
# 1-based, None for nil
EXAMPLE_LSF_REF = [7, 14, 15, 16, 17, 10, 11, 14, 15, 18, 19, 17, 18, 19, 20, 18, 19, 20,
                   None, None]

IMPLS = ["py", "ext"] if HAVE_EXT else ["py"]


@pytest.fixture
def example():
    return rank_reduce(EXAMPLE)


@pytest.fixture(params=IMPLS)
def impl(request):
    return request.param


@pytest.fixture(params=["exact", "fingerprint", "fingerprint-paranoid"])
def backend_name(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.RESULTS:
        terminalreporter.write_line(line)

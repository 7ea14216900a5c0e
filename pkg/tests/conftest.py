import numpy as np
import pytest
from hypothesis import settings

from goldilocks.boolfn import BooleanFunction
from goldilocks.ltf import Realization

from properties import random_realization  # noqa: E402

settings.register_profile("default", deadline=None, max_examples=100)
settings.register_profile("fast", deadline=None, max_examples=20)
settings.load_profile("default")

X = BooleanFunction.from_string
AND2 = X("0001")
OR2 = X("0111")
XOR2 = X("0110")
MAJ3 = X("00010111")
CONST0_2 = X("0000")
CONST1_2 = X("1111")
DICT1_2 = X("0101")
DICT2_2 = X("0011")


def random_ltf(rng: np.random.Generator, n: int, bound: int = 9) -> BooleanFunction:
    return random_realization(rng, n, bound).function()


def random_positive_ltf(rng, n, bound=9):
    w = rng.integers(1, bound + 1, size=n)
    theta = int(rng.integers(0, int(w.sum()) + 1))
    return Realization(tuple(int(v) for v in w), theta).function()


_acceptance = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, text): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    key = (marker.args[0], marker.args[1])
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        prev = _acceptance.get(key, "PASS")
        status = {"passed": "PASS", "failed": "FAIL", "skipped": "SKIP"}[report.outcome]
        _acceptance[key] = "FAIL" if "FAIL" in (prev, status) else status


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for (num, text), status in sorted(_acceptance.items(), key=lambda kv: str(kv[0][0])):
        terminalreporter.write_line(f"[{status}] criterion {num}: {text}")

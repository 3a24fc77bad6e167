import random
from math import gcd

import pytest

from sigsurf import kernels
from sigsurf.curves import PuiseuxPairs

_acceptance = {}


@pytest.fixture(params=sorted(kernels.backends()))
def backend(request):
    return request.param


def random_pairs(rng, max_len=3, max_m=60, max_n=3):
    """A random valid PuiseuxPairs with last m <= max_m and every n <= max_n."""
    while True:
        length = rng.randint(1, max_len)
        pairs = []
        ok = True
        for k in range(length):
            n = rng.randint(2, max_n)
            lo = n + 1 if k == 0 else n * pairs[-1][0] + 1
            candidates = [m for m in range(lo, max_m + 1) if gcd(m, n) == 1]
            if not candidates:
                ok = False
                break
            pairs.append((rng.choice(candidates), n))
        if ok:
            return PuiseuxPairs(tuple(pairs))


@pytest.fixture
def rng():
    return random.Random(20111)


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    name = report.nodeid.split("::")[-1]
    if "test_acceptance" in report.nodeid and name.startswith("test_criterion_"):
        number = int(name.split("_")[2])
        prev = _acceptance.get(number, "PASS")
        _acceptance[number] = "PASS" if (report.passed and prev == "PASS") else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_acceptance):
        terminalreporter.write_line(f"criterion {number:>2}: {_acceptance[number]}")

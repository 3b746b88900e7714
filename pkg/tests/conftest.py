from functools import lru_cache

import pytest

from fuzzcount.groups import GroupSpec
from fuzzcount.oracle import build_lattice


@lru_cache(maxsize=None)
def lattice_of(spec):
    return build_lattice(spec)


def Z(p, *exps, q=None, q_exps=None):
    return GroupSpec(p, tuple(exps), q, tuple(q_exps) if q_exps else None)


@pytest.fixture
def z6():
    return lattice_of(Z(2, 1, q=3, q_exps=(1,)))


@pytest.fixture
def z12():
    return lattice_of(Z(2, 2, q=3, q_exps=(1,)))


@pytest.fixture
def v4():
    return lattice_of(Z(2, 1, 1))


_acceptance = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.failed):
        _acceptance.append((marker.args[0], marker.args[1], rep.passed, rep.duration))


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, passed, duration in sorted(_acceptance):
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"[{status}] criterion {number}: {title} ({duration:.1f}s)")

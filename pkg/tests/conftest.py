import numpy as np
import pytest

from compoundnorms import BACKEND

_ACCEPTANCE = {}


def random_complex(rng, n, m=None):
    m = n if m is None else m
    return (rng.standard_normal((n, m)) + 1j * rng.standard_normal((n, m))) / np.sqrt(2)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    props = dict(report.user_properties)
    if "criterion" in props:
        _ACCEPTANCE[props["criterion"]] = (report.outcome, props.get("title", ""))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    tr = terminalreporter
    tr.section(f"acceptance criteria ({BACKEND} kernels)")
    for crit in sorted(_ACCEPTANCE):
        outcome, title = _ACCEPTANCE[crit]
        tr.write_line(f"criterion {crit:>2}: {'PASS' if outcome == 'passed' else 'FAIL'}  {title}")

import os
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

LONG = os.environ.get("LIEWEYL_LONG") == "1"

_outcomes: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion the test belongs to")


def pytest_collection_modifyitems(config, items):
    skip = pytest.mark.skip(reason="set LIEWEYL_LONG=1 to run")
    for item in items:
        if "slow" in item.keywords and not LONG:
            item.add_marker(skip)


def pytest_runtest_logreport(report):
    marker = getattr(report, "criterion", None)
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and not report.passed):
        _outcomes.setdefault(marker, []).append((report.nodeid, report.outcome))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    m = item.get_closest_marker("criterion")
    if m is not None:
        rep.criterion = m.args[0]


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_outcomes):
        results = _outcomes[n]
        failed = [nid for nid, o in results if o == "failed"]
        ran = [nid for nid, o in results if o == "passed"]
        skipped = [nid for nid, o in results if o == "skipped"]
        status = "FAIL" if failed else ("PASS" if ran else "SKIP")
        note = f"{len(ran)} passed, {len(failed)} failed, {len(skipped)} skipped (opt-in)"
        terminalreporter.write_line(f"criterion {n}: {status}  [{note}]")
        for nid in failed:
            terminalreporter.write_line(f"    failed: {nid}")

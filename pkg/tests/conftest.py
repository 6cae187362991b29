"""Collects acceptance results and prints one PASS/FAIL line per criterion."""

from __future__ import annotations

import pytest

CRITERIA = {
    1: "zeta search reproduces the published order tables",
    2: "1-D and 2-D round trips are exact",
    3: "2-D Hartley combination equals the cas(ik+jl) kernel",
    4: "re(zeta^i) equals (zeta^i + zeta^-i)/2 in GI(p)",
    5: "single increment at (100,100) flags only block (3,3)",
    6: "Bernoulli tampering is localised",
    7: "PSNR falls as p grows",
    8: "extract(D, embed(D, W)) == W and embed(D, 0) == D",
    9: "PSNR closed forms",
}

_criterion_of: dict[str, int] = {}
_results: dict[int, list[tuple[str, bool]]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            _criterion_of[item.nodeid] = mark.args[0]


def pytest_runtest_logreport(report):
    n = _criterion_of.get(report.nodeid)
    if n is None:
        return
    if report.when == "call" or (report.when == "setup" and not report.passed):
        ok = report.passed
        _results.setdefault(n, []).append((report.nodeid, ok))


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n in sorted(CRITERIA):
        runs = _results.get(n)
        if not runs:
            continue
        failed = [nodeid for nodeid, ok in runs if not ok]
        status = "FAIL" if failed else "PASS"
        detail = f"{len(runs) - len(failed)}/{len(runs)} checks passed"
        tr.write_line(f"criterion {n}: {status}  {CRITERIA[n]}  ({detail})")
        for nodeid in failed:
            tr.write_line(f"    failed: {nodeid.split('::', 1)[1]}")

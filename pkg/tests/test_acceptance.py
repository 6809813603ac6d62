"""The eight acceptance criteria, each at its stated tolerance and runtime budget."""
import time

import pytest

from slicereg.verify import SUITES, RunConfig, run_suite

CRITERIA = [(name, crit, budget) for name, crit, _, budget in SUITES if crit is not None]
TOTAL_BUDGET = 60.0
_elapsed = []


def describe(res):
    worst = "; ".join(f"{c.label}={c.value:.3e} (tol {c.tol:.0e})" for c in res.checks)
    return f"criterion {res.criterion} [{res.name}] n={res.count} {res.seconds:.2f}s/{res.budget:.0f}s: {worst}"


def test_all_criteria_present():
    assert sorted(c for _, c, _ in CRITERIA) == list(range(1, 9))


@pytest.mark.parametrize("name, criterion, budget", CRITERIA, ids=[f"criterion-{c}-{n}" for n, c, _ in CRITERIA])
def test_criterion(name, criterion, budget, capsys):
    res = run_suite(name, RunConfig())
    _elapsed.append(res.seconds)
    ok = res.passed and res.seconds < budget
    with capsys.disabled():
        print(f"\n{'PASS' if ok else 'FAIL'} {describe(res)}")
    assert res.passed, describe(res)
    assert res.seconds < budget, describe(res)


def test_total_runtime():
    start = time.perf_counter()
    missing = [n for n, _, _ in CRITERIA][len(_elapsed):]
    for name in missing:
        _elapsed.append(run_suite(name, RunConfig()).seconds)
    total = sum(_elapsed)
    print(f"total acceptance runtime {total:.2f}s (extra {time.perf_counter() - start:.2f}s)")
    assert total < TOTAL_BUDGET

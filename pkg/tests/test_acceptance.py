"""Exit criteria, run at their stated tolerances on the default configuration.

One PASS/FAIL line per criterion is printed in the terminal summary.
"""
import time

import pytest

from attolab.suite import (
    RunConfig,
    check_conjugations,
    check_defect_identity,
    check_equivalence,
    check_kernels,
    check_negative_controls,
    check_round_trip,
    check_series,
    check_special_cases,
)

CFG = RunConfig()  # tol 1e-8, default nodes, seed 0, degrees <= 6, 200 trials

CRITERIA = [
    ("1 kernel / RKHS", check_kernels, 1e-10),
    ("2 conjugation", check_conjugations, 1e-10),
    ("3 defect identity", check_defect_identity, 1e-8),
    ("4 theorem round trip", check_round_trip, 1e-7),
    ("5 five-way equivalence", check_equivalence, 0),
    ("6 telescoping series", check_series, 1e-8),
    ("7 special cases", check_special_cases, 1e-9),
    ("8 negative controls", check_negative_controls, 0),
]

_elapsed = []


@pytest.mark.parametrize("label, check, bound", CRITERIA, ids=[c[0] for c in CRITERIA])
def test_criterion(label, check, bound, acceptance_log):
    start = time.perf_counter()
    res = check(CFG)
    _elapsed.append(time.perf_counter() - start)
    acceptance_log.append(f"{'PASS' if res.passed else 'FAIL'}  {label:<24} {res.detail}")
    assert res.threshold == bound
    assert res.metric <= bound
    assert res.passed, res.detail


def test_runtime_budget(acceptance_log):
    total = sum(_elapsed)
    ok = len(_elapsed) == len(CRITERIA) and total < 60
    acceptance_log.append(f"{'PASS' if ok else 'FAIL'}  {'runtime < 60 s':<24} {total:.1f} s")
    assert ok

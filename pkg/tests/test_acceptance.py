"""One test per acceptance criterion; each prints a PASS/FAIL line."""
import time
from fractions import Fraction

import pytest

from conftest import ACCEPTANCE_LINES
from hypercharpoly import acceptance
from hypercharpoly.charpoly import charpoly_path, charpoly_single_edge
from hypercharpoly.hypergraph import make_hyperpath, make_single_edge
from hypercharpoly.oracle import charpoly_eval_oracle

# wall-clock bounds (seconds) stated with the criteria
BOUNDS = {1: 1.0, 4: 10.0, 10: 1.0}


def report(result, bound=None):
    ok = result.ok and (bound is None or result.seconds < bound)
    if result.ok and not ok:
        result.detail += f" [took {result.seconds:.2f}s, bound {bound}s]"
    result.ok = ok
    line = result.line()
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert ok, line


@pytest.mark.parametrize("number", [1, 2, 3, 4, 5, 6, 8, 9, 10])
def test_criterion(number):
    result = getattr(acceptance, f"criterion_{number}")()
    report(result, BOUNDS.get(number))


def test_criterion_7_oracle_equivalence():
    cases = [
        (make_single_edge(3), charpoly_single_edge(3), 1.0),
        (make_single_edge(4), charpoly_single_edge(4), 1.0),
        (make_hyperpath(2, 3), charpoly_path(2, 3), 120.0),
    ]
    problems = []
    timings = []
    t_all = time.perf_counter()
    for H, F, bound in cases:
        t0 = time.perf_counter()
        for lam in acceptance.ORACLE_LAMBDAS:
            want, got = F.eval(lam), charpoly_eval_oracle(H, lam)
            if want != got:
                problems.append(f"{H.name} at {lam}")
        dt = time.perf_counter() - t0
        timings.append(f"{H.name} {dt:.2f}s")
        if dt >= bound:
            problems.append(f"{H.name} took {dt:.2f}s (bound {bound}s)")
    result = acceptance.CriterionResult(
        7, "oracle equivalence", not problems,
        "; ".join(problems) if problems else ", ".join(timings),
        time.perf_counter() - t_all,
    )
    report(result)


def test_criterion_9_reports_discrepancy():
    result = acceptance.criterion_9()
    assert "2294" in result.detail and "disagrees" in result.detail

"""Acceptance gate: one test per criterion, each printing a single PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` or ``python3 tests/test_acceptance.py``.
"""

import math
import sys
import time
from fractions import Fraction as F

from amalgam.amalgams import WL
from amalgam.cases import RandomCaseConfig, step_cases, step_pairs
from amalgam.duality import associate_lower_bound, wl_duality_check
from amalgam.extreal import INF
from amalgam.laws import (chlp_pairs, dilation_suite, embedding_suite, hardy_littlewood_suite,
                          hlp_suite, rearrangement_suite, remark_sandwich_suite, sandwich_suite,
                          wiener_equivalence_suite)
from amalgam.norms import Lebesgue, Lorentz, local_stronger, norm_of
from amalgam.stepfn import indicator
from amalgam.amalgams import wl_norm
from amalgam.witnesses import chlp_family, rwnbfs_p4_family, rwnbfs_p5_family

SEED = 42
CFG = RandomCaseConfig(seed=SEED, cases=1000, max_pieces=12)
INDICES = (1, F(3, 2), 2, INF)


def _side(bundle, prefix):
    return next(s for s in bundle.finite + bundle.infinite if s.label.startswith(prefix))


def c1_rearrangement():
    report = rearrangement_suite(CFG)
    return report.passed and report.cases == 1000, f"{report.cases} functions, 50 levels each"


def c2_hardy_littlewood():
    report = hardy_littlewood_suite(CFG)
    return report.passed and report.cases == 1000, f"max int fg / int f*g* = {report.observed_constant:.6f}"


def c3_remark_sandwich():
    # L^1 must hold with exact values, not merely within tolerance
    exact = all(norm_of(Lebesgue(1), f).is_exact and wl_norm(Lebesgue(1), Lebesgue(1), f).is_exact
                for f in step_cases(CFG, salt=3))
    reports = [remark_sandwich_suite(spec, CFG) for spec in (Lebesgue(1), Lebesgue(2), Lebesgue(3), Lorentz(2, 1))]
    ok = exact and all(r.passed and r.cases == 1000 for r in reports)
    return ok, ", ".join(f"{r.suite}: {r.verdict}" for r in reports) + f", L1 exact: {exact}"


def c4_wiener_equivalence():
    report = wiener_equivalence_suite(CFG)
    return report.passed and report.cases == 1000, f"16 index pairs, worst ratio {report.observed_constant:.6f}"


def c5_wiener_counterexamples():
    N = 10_000
    p4 = rwnbfs_p4_family(2, 1, N)
    measure, norm = _side(p4, "lambda").certificate, _side(p4, "|chi_E|").certificate
    integral_test = 4 * ((N + 1) ** 0.25 - 1)
    ok4 = (p4.verify() and measure.convergent and float(measure.bound) <= 2.62
           and not norm.convergent and math.isclose(float(norm.bound), integral_test, rel_tol=1e-9)
           and float(p4.truncation["|chi_E_N|_W"]) > 30)
    p5 = rwnbfs_p5_family(1, 2, N)
    verdicts = [_side(p5, key).certificate.convergent for key in ("lambda", "|f|", "int_E")]
    ok5 = p5.verify() and verdicts == [True, True, False] and float(p5.truncation["int_E_N f"]) >= 35
    detail = (f"(2,1): lambda(E) <= {float(measure.bound):.4f}, |chi_E_N|_W = "
              f"{float(p4.truncation['|chi_E_N|_W']):.2f}; (1,2): int_E_N f = {float(p5.truncation['int_E_N f']):.2f}")
    return ok4 and ok5, detail


def c6_hlp_failure():
    fam = chlp_family(F(1, 2), 100)
    big = chlp_family(F(1, 2), 10_000)
    banach = hlp_suite(WL(Lebesgue(1), Lebesgue(1)), chlp_pairs(F(1, 2)))
    ok = (fam.dominated and fam.ratio.is_exact and fam.ratio.value == F(9802, 100)
          and big.dominated and float(big.ratio) > 1000
          and banach.observed_constant <= 1 and not banach.findings["hlp_violated"])
    return ok, f"ratio(100) = {fam.ratio.value}, ratio(10^4) = {float(big.ratio):.1f}, WL(L1,L1) max {banach.observed_constant}"


def c7_embedding():
    cfg = RandomCaseConfig(seed=SEED, cases=500, max_pieces=12)
    outcomes = []
    for pA in INDICES:
        for pC in INDICES:
            source, target = WL(Lebesgue(pA), Lebesgue(2)), WL(Lebesgue(pC), Lebesgue(2))
            predicted = local_stronger(Lebesgue(pA), Lebesgue(pC))
            report = embedding_suite(source, target, cfg)
            if predicted:
                ok = report.passed and report.findings["predicted"] and report.cases >= 500
            else:
                ok = (report.passed and not report.findings["predicted"] and report.findings["witnesses"]
                      and all(w["verified"] for w in report.findings["witnesses"]))
            outcomes.append(bool(ok))
    return all(outcomes), f"{sum(outcomes)}/16 pairs match the predicate"


def c8_decomposition():
    report = sandwich_suite(Lebesgue(2), Lebesgue(1), CFG)
    return report.passed and report.cases == 1000, f"split / WL ratio <= {report.observed_constant:.4f}"


def c9_dilation():
    cfg = RandomCaseConfig(seed=SEED, cases=500, max_pieces=12)
    reports = [dilation_suite(Lebesgue(p), t, cfg) for t in (F(1, 4), F(1, 2), 2, 4) for p in (1, 2, INF)]
    return all(r.passed and r.cases == 500 for r in reports), f"{len(reports)} (t, p) combinations x 500"


def c10_duality():
    pairs = list(step_pairs(CFG, salt=9))
    exact = True
    for p, q in ((1, 2), (2, 1), (2, 2), (F(3, 2), 3)):
        for f, g in pairs:
            exact = exact and wl_duality_check(p, q, f, g).passed
    worst = min(float(associate_lower_bound(Lebesgue(2), f) / norm_of(Lebesgue(2), f))
                for f in (indicator(F(7, 3), F(7, 3) + F(2) ** k) for k in range(-10, 11)))
    return exact and worst >= 0.999, f"4000 pairings pass: {exact}, worst associate ratio {worst:.6f}"


CRITERIA = [
    (1, "rearrangement correctness", c1_rearrangement, 10),
    (2, "Hardy-Littlewood inequality", c2_hardy_littlewood, 10),
    (3, "WL(A,A) sandwich", c3_remark_sandwich, None),
    (4, "rearranged Wiener equivalence", c4_wiener_equivalence, 60),
    (5, "Wiener axiom counterexamples", c5_wiener_counterexamples, 5),
    (6, "HLP failure for WL(L1, L1/2)", c6_hlp_failure, 5),
    (7, "local component embeddings", c7_embedding, 120),
    (8, "sum decomposition identity", c8_decomposition, 30),
    (9, "Lebesgue dilation law", c9_dilation, 10),
    (10, "duality pairing inequality", c10_duality, 60),
]


def evaluate(number):
    _, title, check, limit = CRITERIA[number - 1]
    start = time.perf_counter()
    try:
        ok, detail = check()
    except Exception as exc:  # a crash is a failure of the criterion, reported on its line
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    elapsed = time.perf_counter() - start
    in_time = limit is None or elapsed < limit
    budget = f"< {limit} s" if limit else "no limit"
    verdict = "PASS" if ok and in_time else "FAIL"
    line = f"[criterion {number}] {verdict} {title}: {detail} ({elapsed:.2f} s, {budget})"
    return ok, in_time, line


def _gate(number, capsys):
    ok, in_time, line = evaluate(number)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line
    assert in_time, line


def test_criterion_1(capsys):
    _gate(1, capsys)


def test_criterion_2(capsys):
    _gate(2, capsys)


def test_criterion_3(capsys):
    _gate(3, capsys)


def test_criterion_4(capsys):
    _gate(4, capsys)


def test_criterion_5(capsys):
    _gate(5, capsys)


def test_criterion_6(capsys):
    _gate(6, capsys)


def test_criterion_7(capsys):
    _gate(7, capsys)


def test_criterion_8(capsys):
    _gate(8, capsys)


def test_criterion_9(capsys):
    _gate(9, capsys)


def test_criterion_10(capsys):
    _gate(10, capsys)


if __name__ == "__main__":
    results = [evaluate(n) for n in range(1, len(CRITERIA) + 1)]
    for _, _, line in results:
        print(line)
    sys.exit(0 if all(ok and in_time for ok, in_time, _ in results) else 1)

"""Acceptance gate: one test per criterion, each printing a PASS line
with its runtime and worst margin (visible with pytest -s).

Run with:  pytest tests/test_acceptance.py -v -s
"""

import time
from fractions import Fraction
from pathlib import Path

import pytest

from binpart import (
    build_restricted_table,
    central_binomial_check,
    check_generating_functions,
    closed_form_even,
    closed_form_odd,
    diagonal_bound_check,
    enumerate_partitions,
    growth_chain_check,
    partition_bound_check,
    peak_k,
    product_bound_check,
    row_bound_check,
    subdiagonal_bound_check,
    verify_unimodal_profile,
)
from binpart import best_bound, NilpotentProfile
from binpart.binomial_sums import partial_sign_sum_ratio, peak_sign_sum
from binpart.checks import VERIFIED
from binpart.cli import EXIT_OK, main
from binpart.qseries import TailParams, euler_product_upper, weighted_sum_upper

from reference_values import (
    EULER_PRODUCT_HALF,
    P50K_VALUES,
    PK_VALUES,
    Q252_COMBINED_UPPER,
    Q252_PRODUCT_UPPER,
    Q252_WEIGHTED_UPPER,
)

GOLDEN_TABLE = Path(__file__).parent / "data" / "table50.csv"


def _report(tag: str, detail: str, t0: float, budget: float):
    elapsed = time.time() - t0
    print(f"\nACCEPTANCE {tag}: PASS ({detail}; {elapsed:.2f}s)")
    assert elapsed < budget, f"{tag} exceeded {budget}s budget ({elapsed:.2f}s)"


def test_criterion_01_table_reproduction(capsys):
    t0 = time.time()
    code = main(["table", "50"])
    out = capsys.readouterr().out
    assert code == EXIT_OK
    assert out == GOLDEN_TABLE.read_text()
    rows = [line.split(",") for line in out.strip().split("\n")[1:]]
    assert [int(r[1]) for r in rows] == PK_VALUES
    assert [int(r[2]) for r in rows] == P50K_VALUES
    _report("01 table-50", "100/100 values exact", t0, 1.0)


def test_criterion_02_unimodality_to_1000(triangle_1000):
    t0 = time.time()
    for n in range(4, 1001):
        profile = verify_unimodal_profile(n, triangle_1000)
        assert profile.ok, (n, profile.first_violation)
        row = triangle_1000.row(n)
        peak_value = row[profile.peak_k]
        assert all(row[k] < peak_value for k in range(1, n + 1)
                   if k != profile.peak_k), n
    _report("02 unimodality", "rows 4..1000 strictly unimodal, peaks unique",
            t0, 60.0)


def test_criterion_03_row_bound_to_1000(triangle_1000):
    t0 = time.time()
    worst = None
    for n in range(1, 1001):
        report = row_bound_check(n, triangle_1000)
        assert report.verified, n
        if worst is None or report.margin < worst:
            worst = report.margin
    _report("03 row-bound", f"n=1..1000 exact, min rel margin {worst:.3e}",
            t0, 120.0)


def test_criterion_04_diagonal_bounds_to_2000(diagonal_2001):
    t0 = time.time()
    worst_bits = 0
    worst_margin = None
    for n in range(1, 2001):
        r1 = diagonal_bound_check(n, diagonal_2001)
        r2 = subdiagonal_bound_check(n, diagonal_2001)
        for r in (r1, r2):
            assert r.outcome == VERIFIED, (n, r)
            assert r.margin > 0
            worst_bits = max(worst_bits, r.precision_bits)
            if worst_margin is None or r.margin < worst_margin:
                worst_margin = r.margin
    assert worst_bits <= 512
    _report("04 diagonal-bounds",
            f"n=1..2000, min margin {worst_margin:.3e} at <= {worst_bits} bits",
            t0, 120.0)


def test_criterion_05_product_constants():
    t0 = time.time()
    half = euler_product_upper(TailParams(q=Fraction(1, 2), ell=48))
    assert float(half.width) <= 1e-12
    assert half.contains(EULER_PRODUCT_HALF)

    params = TailParams(q=Fraction(252, 500), ell=96)
    product = euler_product_upper(params)
    weighted = weighted_sum_upper(params)
    assert product.upper_fraction() < Fraction(Q252_PRODUCT_UPPER)
    assert weighted.upper_fraction() < Fraction(Q252_WEIGHTED_UPPER)
    assert (product * weighted).upper_fraction() < Fraction(Q252_COMBINED_UPPER)
    _report("05 product-constants",
            "F(1/2) enclosed at 1e-12; all three q=252/500 bounds reproduced",
            t0, 60.0)


def test_criterion_06_sign_sums_to_1000(table_2001):
    t0 = time.time()
    for n in range(4, 1001):
        k = peak_k(n)
        assert peak_sign_sum(n, k, table_2001) > 0, n
        assert peak_sign_sum(n, k + 1, table_2001) < 0, n
    for n in (4, 10, 50, 100, 200, 300, 400, 500, 750, 1000):
        k = (n + 2) // 2
        assert partial_sign_sum_ratio(n, k, 3, table_2001) == closed_form_even(n)
    for n in (11, 101, 201, 301, 401, 501, 601, 701, 801, 1001):
        k = (n + 3) // 2
        assert partial_sign_sum_ratio(n, k, 7, table_2001) == closed_form_odd(n)
    _report("06 sign-sums",
            "signs exact for n=4..1000; closed forms match at 10+10 samples",
            t0, 60.0)


def test_criterion_07_dominance_to_500(triangle_1000):
    t0 = time.time()
    from binpart import dominance_check

    for n in range(4, 501):
        assert dominance_check(n, triangle_1000) is None, n
    _report("07 dominance", "512*p(n,k) > 1745*C(n,k) on 4..500", t0, 60.0)


def test_criterion_08_product_bound_to_300(triangle_1000):
    t0 = time.time()
    checked = 0
    for n in range(2, 301):
        for k in range(1, n):
            report = product_bound_check(n, k, triangle_1000)
            assert report.outcome == VERIFIED, (n, k, report.outcome)
            checked += 1
    _report("08 product-bound",
            f"{checked} pairs verified, zero inconclusive at depth cap 256",
            t0, 120.0)


def test_criterion_09_oracle_equivalence(table_2001):
    t0 = time.time()
    for n in range(41):
        assert len(enumerate_partitions(n, max(n, 1))) == table_2001[n], n
    for k in range(1, 31):
        restricted = build_restricted_table(k, 30)
        for j in range(31):
            assert restricted[j] == len(enumerate_partitions(j, k)), (j, k)
    for k in range(1, 16):
        report = check_generating_functions(k, 60)
        assert report.ok, (k, report.first_mismatch)
    _report("09 oracle-equivalence",
            "enumeration matches p(n) to 40 and p_k(j) to 30; series to k=15",
            t0, 120.0)


def test_criterion_10_recursion_full_triangle(triangle_1000):
    t0 = time.time()
    for n in range(1000):
        cur = triangle_1000.row(n)
        nxt = triangle_1000.row(n + 1)
        for k in range(1, n + 1):
            assert nxt[k] == cur[k] + cur[k - 1], (n + 1, k)
    _report("10 recursion", "exact over the full 1000-row triangle", t0, 60.0)


def test_criterion_11_certified_sweeps_to_2000(table_2001):
    t0 = time.time()
    for n in range(3, 2001):
        report = growth_chain_check(n)
        assert report.outcome == VERIFIED, ("growth-chain", n)
    for n in range(1, 2001):
        report = partition_bound_check(n, table_2001)
        assert report.outcome == VERIFIED, ("partition-bound", n)
    for n in range(1, 2001):
        report = central_binomial_check(n)
        assert report.outcome == VERIFIED, ("central-binomial", n)
    _report("11 certified-sweeps",
            "growth chain 3..2000, partition bound and central binomial 1..2000",
            t0, 120.0)


def test_criterion_note_mu_report_surrogate(triangle_120):
    t0 = time.time()
    report = best_bound(NilpotentProfile(3, 2), triangle_120)
    assert report.pnk == 7 < report.reed == 10 < report.birkhoff == 40
    assert report.best == "pnk"
    _report("12 mu-surrogate", "pnk=7 < reed=10 < birkhoff=40 at (3,2)", t0, 10.0)

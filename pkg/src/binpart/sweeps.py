"""Range sweeps over the verification checks, one per CLI claim id.

Each sweep walks its n-range, running the underlying exact or certified
check, and condenses the outcomes into a ClaimSummary.  Claim ids are the
stable identifiers exposed by `binpart verify`:

    thm2          strict unimodality of every row, unique peak
    thm3          1600*n*p(n,k)^2 < 12769*4^n for all k (exact)
    prop1         p(n-1,n-1) < e^(a*sqrt(n))            (certified)
    prop2         p(n,n-1) < sqrt(n)*e^(a*sqrt(n))      (certified)
    lemma-links   sign sum positive at the peak k       (exact)
    lemma-rechts  sign sum negative just past the peak  (exact)
    lemma-gr      512*p(n,k) > 1745*C(n,k) on the descent range (exact)
    lemma13       sqrt chain inequality                 (certified)
    apostol       p(n) < pi/sqrt(6n)*e^(a*sqrt(n))      (certified)
    stirling      C(n,peak)^2 * n * pi < 2*4^n          (certified)
    eq9           p(n,k) < C(n,k) * partial Euler product (exact)
    genfun        generating-function coefficients match the DP table

Default ranges reproduce the acceptance gate, so `verify all` with no
range runs the full desk-scale verification.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from . import checks
from .binomial_sums import (
    DiagonalTable,
    dominance_check,
    iter_triangle_rows,
    peak_k,
    peak_sign_sum,
)
from .checks import VERIFIED, VIOLATED
from .partitions import build_partition_table, check_generating_functions


@dataclass
class ClaimSummary:
    claim: str
    n_min: int
    n_max: int
    checked: int
    outcome: str
    counterexample: Optional[tuple] = None
    min_margin: Optional[float] = None
    max_precision_bits: Optional[int] = None
    notes: dict = field(default_factory=dict)

    @property
    def verified(self) -> bool:
        return self.outcome == VERIFIED


def _merge(summary: ClaimSummary, report: checks.VerificationReport) -> bool:
    """Fold one report into the running summary; False stops the sweep."""
    summary.checked += 1
    if report.margin is not None:
        if summary.min_margin is None or report.margin < summary.min_margin:
            summary.min_margin = report.margin
    if report.precision_bits is not None:
        if (summary.max_precision_bits is None
                or report.precision_bits > summary.max_precision_bits):
            summary.max_precision_bits = report.precision_bits
    if report.outcome != VERIFIED:
        summary.outcome = report.outcome
        summary.counterexample = report.counterexample
        return False
    return True


def _new_summary(claim: str, n_min: int, n_max: int) -> ClaimSummary:
    return ClaimSummary(claim=claim, n_min=n_min, n_max=n_max,
                        checked=0, outcome=VERIFIED)


class SweepContext:
    """Shared tables, built lazily and sized to the largest request."""

    def __init__(self):
        self._table = None
        self._triangle_rows = None
        self._diag = None

    def table(self, max_n: int):
        if self._table is None or self._table.max_n < max_n:
            self._table = build_partition_table(max_n)
        return self._table

    def triangle_rows(self, max_n: int):
        """Materialized triangle rows 0..max_n (cached, grow-only)."""
        if self._triangle_rows is None or len(self._triangle_rows) <= max_n:
            table = self.table(max_n)
            self._triangle_rows = [
                row for _, row in iter_triangle_rows(max_n, table)
            ]
        return self._triangle_rows

    class _RowsView:
        def __init__(self, rows):
            self._rows = rows

        def row(self, n):
            return self._rows[n]

        def value(self, n, k):
            return self._rows[n][k]

    def triangle(self, max_n: int):
        return self._RowsView(self.triangle_rows(max_n))

    def diagonal(self, max_n: int):
        if self._diag is None or self._diag.max_n < max_n:
            self._diag = DiagonalTable(max_n, self.table(max_n))
        return self._diag


def sweep_unimodality(n_min: int, n_max: int, ctx: SweepContext) -> ClaimSummary:
    """Strict ascent / strict descent / unique peak for each row."""
    n_min = max(n_min, 4)
    summary = _new_summary("thm2", n_min, n_max)
    rows = ctx.triangle_rows(n_max)
    for n in range(n_min, n_max + 1):
        row = rows[n]
        kn = peak_k(n)
        bad = None
        for k in range(1, kn):
            if not row[k] < row[k + 1]:
                bad = (n, k)
                break
        if bad is None:
            for k in range(kn, n):
                if not row[k] > row[k + 1]:
                    bad = (n, k)
                    break
        summary.checked += 1
        if bad is not None:
            summary.outcome = VIOLATED
            summary.counterexample = bad
            break
    return summary


def sweep_row_bound(n_min: int, n_max: int, ctx: SweepContext) -> ClaimSummary:
    n_min = max(n_min, 1)
    summary = _new_summary("thm3", n_min, n_max)
    triangle = ctx.triangle(n_max)
    for n in range(n_min, n_max + 1):
        if not _merge(summary, checks.row_bound_check(n, triangle)):
            break
    return summary


def sweep_recursion(n_min: int, n_max: int, ctx: SweepContext) -> ClaimSummary:
    """p(n+1,k) = p(n,k) + p(n,k-1) over the stored triangle."""
    n_min = max(n_min, 0)
    summary = _new_summary("recursion", n_min, n_max)
    rows = ctx.triangle_rows(n_max)
    for n in range(n_min, n_max):
        cur, nxt = rows[n], rows[n + 1]
        summary.checked += 1
        for k in range(1, n + 1):
            if nxt[k] != cur[k] + cur[k - 1]:
                summary.outcome = VIOLATED
                summary.counterexample = (n + 1, k)
                return summary
    return summary


def _sweep_sign(claim: str, offset: int, expect_positive: bool,
                n_min: int, n_max: int, ctx: SweepContext) -> ClaimSummary:
    n_min = max(n_min, 4)
    summary = _new_summary(claim, n_min, n_max)
    table = ctx.table(n_max + 2)
    for n in range(n_min, n_max + 1):
        k = peak_k(n) + offset
        value = peak_sign_sum(n, k, table)
        summary.checked += 1
        ok = value > 0 if expect_positive else value < 0
        if not ok:
            summary.outcome = VIOLATED
            summary.counterexample = (n, k)
            break
    return summary


def sweep_ascent_sign(n_min: int, n_max: int, ctx: SweepContext) -> ClaimSummary:
    return _sweep_sign("lemma-links", 0, True, n_min, n_max, ctx)


def sweep_descent_sign(n_min: int, n_max: int, ctx: SweepContext) -> ClaimSummary:
    return _sweep_sign("lemma-rechts", 1, False, n_min, n_max, ctx)


def sweep_dominance(n_min: int, n_max: int, ctx: SweepContext) -> ClaimSummary:
    n_min = max(n_min, 4)
    summary = _new_summary("lemma-gr", n_min, n_max)
    triangle = ctx.triangle(n_max)
    for n in range(n_min, n_max + 1):
        bad_k = dominance_check(n, triangle)
        summary.checked += 1
        if bad_k is not None:
            summary.outcome = VIOLATED
            summary.counterexample = (n, bad_k)
            break
    return summary


def sweep_growth_chain(n_min: int, n_max: int, ctx: SweepContext) -> ClaimSummary:
    n_min = max(n_min, 3)
    summary = _new_summary("lemma13", n_min, n_max)
    for n in range(n_min, n_max + 1):
        if not _merge(summary, checks.growth_chain_check(n)):
            break
    return summary


def sweep_partition_bound(n_min: int, n_max: int, ctx: SweepContext) -> ClaimSummary:
    n_min = max(n_min, 1)
    summary = _new_summary("apostol", n_min, n_max)
    table = ctx.table(n_max)
    for n in range(n_min, n_max + 1):
        if not _merge(summary, checks.partition_bound_check(n, table)):
            break
    return summary


def sweep_central_binomial(n_min: int, n_max: int, ctx: SweepContext) -> ClaimSummary:
    n_min = max(n_min, 1)
    summary = _new_summary("stirling", n_min, n_max)
    for n in range(n_min, n_max + 1):
        if not _merge(summary, checks.central_binomial_check(n)):
            break
    return summary


def sweep_diagonal_bound(n_min: int, n_max: int, ctx: SweepContext) -> ClaimSummary:
    n_min = max(n_min, 1)
    summary = _new_summary("prop1", n_min, n_max)
    diag = ctx.diagonal(n_max)
    for n in range(n_min, n_max + 1):
        if not _merge(summary, checks.diagonal_bound_check(n, diag)):
            break
    return summary


def sweep_subdiagonal_bound(n_min: int, n_max: int, ctx: SweepContext) -> ClaimSummary:
    n_min = max(n_min, 1)
    summary = _new_summary("prop2", n_min, n_max)
    diag = ctx.diagonal(n_max)
    for n in range(n_min, n_max + 1):
        if not _merge(summary, checks.subdiagonal_bound_check(n, diag)):
            break
    return summary


def sweep_product_bound(n_min: int, n_max: int, ctx: SweepContext) -> ClaimSummary:
    """Eq-9 style bound, every 1 <= k <= n-1 per n."""
    n_min = max(n_min, 2)
    summary = _new_summary("eq9", n_min, n_max)
    triangle = ctx.triangle(n_max)
    for n in range(n_min, n_max + 1):
        for k in range(1, n):
            if not _merge(summary, checks.product_bound_check(n, k, triangle)):
                return summary
    return summary


def sweep_series_identities(k_min: int, k_max: int, ctx: SweepContext,
                            degree: int = 60) -> ClaimSummary:
    k_min = max(k_min, 1)
    summary = _new_summary("genfun", k_min, k_max)
    summary.notes["degree"] = degree
    for k in range(k_min, k_max + 1):
        report = check_generating_functions(k, degree)
        summary.checked += 1
        if not report.ok:
            summary.outcome = VIOLATED
            summary.counterexample = report.first_mismatch
            break
    return summary


# claim id -> (sweep function, default range)
CLAIMS = {
    "thm2": (sweep_unimodality, (4, 1000)),
    "thm3": (sweep_row_bound, (1, 1000)),
    "prop1": (sweep_diagonal_bound, (1, 2000)),
    "prop2": (sweep_subdiagonal_bound, (1, 2000)),
    "lemma-links": (sweep_ascent_sign, (4, 1000)),
    "lemma-rechts": (sweep_descent_sign, (4, 1000)),
    "lemma-gr": (sweep_dominance, (4, 500)),
    "lemma13": (sweep_growth_chain, (3, 2000)),
    "apostol": (sweep_partition_bound, (1, 2000)),
    "stirling": (sweep_central_binomial, (1, 2000)),
    "eq9": (sweep_product_bound, (2, 300)),
    "genfun": (sweep_series_identities, (1, 15)),
}


def run_claim(claim: str, n_min: int | None, n_max: int | None,
              ctx: SweepContext | None = None) -> ClaimSummary:
    """Run one claim sweep; None range components fall back to defaults."""
    if claim not in CLAIMS:
        raise KeyError(f"unknown claim {claim!r}")
    sweep, (default_min, default_max) = CLAIMS[claim]
    lo = default_min if n_min is None else max(n_min, default_min)
    hi = default_max if n_max is None else n_max
    if ctx is None:
        ctx = SweepContext()
    return sweep(lo, hi, ctx)


def run_all(n_min: int | None, n_max: int | None,
            ctx: SweepContext | None = None) -> list[ClaimSummary]:
    """Run every claim, sharing tables across sweeps."""
    if ctx is None:
        ctx = SweepContext()
    return [run_claim(claim, n_min, n_max, ctx) for claim in CLAIMS]

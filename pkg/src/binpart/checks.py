"""Margin-checked verification of the upper-bound inequalities.

Two kinds of checks live here:

  * pure big-integer comparisons (row_bound_check, product_bound_check):
    no real arithmetic at all, so the outcome is exact by construction;

  * certified real comparisons (everything involving pi, sqrt, exp, log):
    decided through BoundReal enclosures, declared only when the gap
    exceeds the total enclosure error, with automatic precision
    escalation and an explicit "inconclusive" outcome at the cap.

Every check returns a VerificationReport; "verified" always means the
strict inequality holds with positive certified margin.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .intervals import (
    BoundReal,
    DEFAULT_PRECISION_BITS,
    decide_with_escalation,
)
from .partitions import PartitionTable
from .qseries import DEFAULT_DEPTH_CAP

VERIFIED = "verified"
VIOLATED = "violated"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one inequality check.

    margin is a unitless slack: relative slack (rhs-lhs)/rhs for integer
    comparisons, certified lower bound of the log-domain gap for real
    comparisons.  precision_bits is None for pure integer checks.
    """

    claim: str
    n: int
    outcome: str
    counterexample: Optional[tuple] = None
    margin: Optional[float] = None
    precision_bits: Optional[int] = None

    @property
    def verified(self) -> bool:
        return self.outcome == VERIFIED


def _relative_slack(lhs: int, rhs: int) -> float:
    """(rhs - lhs)/rhs for exact integers, safe for astronomically large values."""
    return (rhs - lhs) / rhs


def alpha_bound(bits: int = DEFAULT_PRECISION_BITS) -> BoundReal:
    """Enclosure of the growth constant sqrt(2/3)*pi."""
    return (BoundReal.exact(Fraction(2, 3), bits).sqrt()) * BoundReal.pi(bits)


def row_bound_check(n: int, triangle) -> VerificationReport:
    """Exact check of 1600*n*p(n,k)^2 < 12769*4^n for every 1 <= k <= n.

    This is the squared, cleared-denominator form of
    p(n,k) < (113/40)/sqrt(n) * 2^n; only integer arithmetic is used.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    row = triangle.row(n)
    rhs = 12769 << (2 * n)
    factor = 1600 * n
    worst = None
    for k in range(1, n + 1):
        lhs = factor * row[k] * row[k]
        if lhs >= rhs:
            return VerificationReport(
                claim="row-bound", n=n, outcome=VIOLATED, counterexample=(n, k)
            )
        if worst is None or lhs > worst:
            worst = lhs
    return VerificationReport(
        claim="row-bound",
        n=n,
        outcome=VERIFIED,
        margin=_relative_slack(worst, rhs),
    )


def central_binomial_check(
    n: int, start_bits: int = DEFAULT_PRECISION_BITS
) -> VerificationReport:
    """Certified check of C(n, floor((n+3)/2)) < 2^n / sqrt(pi*n/2).

    Equivalent form used: C^2 * n * pi < 2 * 4^n, with pi the only
    non-integer quantity.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    kn = (n + 3) // 2
    c = math.comb(n, kn)
    lhs_int = c * c * n
    rhs_int = 2 << (2 * n)
    margin_holder = {}

    def evaluate(bits):
        rhs = BoundReal.exact(rhs_int, bits)
        gap = rhs - BoundReal.exact(lhs_int, bits) * BoundReal.pi(bits)
        outcome = gap.certainly_positive()
        if outcome:
            margin_holder["m"] = float((gap / rhs).lower)
        return outcome

    outcome, bits = decide_with_escalation(evaluate, start_bits)
    if outcome is None:
        return VerificationReport("central-binomial", n, INCONCLUSIVE,
                                  precision_bits=bits)
    if not outcome:
        return VerificationReport("central-binomial", n, VIOLATED,
                                  counterexample=(n, kn), precision_bits=bits)
    return VerificationReport("central-binomial", n, VERIFIED,
                              margin=margin_holder["m"], precision_bits=bits)


def _certified_log_gap(claim: str, n: int, gap_builder, start_bits: int,
                       counterexample=None) -> VerificationReport:
    """Decide gap > 0 with escalation; margin reports the certified gap."""
    margin_holder = {}

    def evaluate(bits):
        gap = gap_builder(bits)
        outcome = gap.certainly_positive()
        if outcome:
            margin_holder["m"] = float(gap.lower)
        return outcome

    outcome, bits = decide_with_escalation(evaluate, start_bits)
    if outcome is None:
        return VerificationReport(claim, n, INCONCLUSIVE, precision_bits=bits)
    if not outcome:
        return VerificationReport(claim, n, VIOLATED,
                                  counterexample=counterexample or (n,),
                                  precision_bits=bits)
    return VerificationReport(claim, n, VERIFIED, margin=margin_holder["m"],
                              precision_bits=bits)


def partition_bound_check(
    n: int, table: PartitionTable, start_bits: int = DEFAULT_PRECISION_BITS
) -> VerificationReport:
    """Certified check of the classical bound p(n) < pi/sqrt(6n) * e^(a*sqrt(n))

    with a = sqrt(2/3)*pi, compared in the log domain:
    log p(n) < log(pi/sqrt(6n)) + a*sqrt(n).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    pn = table[n]

    def gap(bits):
        nn = BoundReal.exact(n, bits)
        lhs = BoundReal.exact(pn, bits).log()
        rhs = (BoundReal.pi(bits) / (6 * nn).sqrt()).log() \
            + alpha_bound(bits) * nn.sqrt()
        return rhs - lhs

    return _certified_log_gap("partition-bound", n, gap, start_bits)


def growth_chain_check(
    n: int, start_bits: int = DEFAULT_PRECISION_BITS
) -> VerificationReport:
    """Certified check of the two-sided chain, for n >= 3:

    sqrt(n)/(sqrt(n+1)-1)  <  1 + pi/sqrt(6n)  <  e^(a*sqrt(n)*(sqrt(1+1/n)-1)).

    The reported margin is the smaller certified gap of the two links.
    """
    if n < 3:
        raise ValueError("n must be >= 3")
    margin_holder = {}

    def evaluate(bits):
        nn = BoundReal.exact(n, bits)
        sqrt_n = nn.sqrt()
        left = sqrt_n / ((nn + 1).sqrt() - 1)
        mid = 1 + BoundReal.pi(bits) / (6 * nn).sqrt()
        right = (alpha_bound(bits) * sqrt_n * ((1 + 1 / nn).sqrt() - 1)).exp()
        g1 = (mid - left).certainly_positive()
        g2 = (right - mid).certainly_positive()
        if g1 is None or g2 is None:
            return None
        if g1 and g2:
            margin_holder["m"] = min(float((mid - left).lower),
                                     float((right - mid).lower))
            return True
        return False

    outcome, bits = decide_with_escalation(evaluate, start_bits)
    if outcome is None:
        return VerificationReport("growth-chain", n, INCONCLUSIVE, precision_bits=bits)
    if not outcome:
        return VerificationReport("growth-chain", n, VIOLATED,
                                  counterexample=(n,), precision_bits=bits)
    return VerificationReport("growth-chain", n, VERIFIED,
                              margin=margin_holder["m"], precision_bits=bits)


def diagonal_bound_check(
    n: int, table_like, start_bits: int = DEFAULT_PRECISION_BITS
) -> VerificationReport:
    """Certified check of p(n-1,n-1) < e^(a*sqrt(n)) for n >= 1.

    table_like needs only `value(n, k)`; both PnkTriangle and
    DiagonalTable qualify.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    value = table_like.value(n - 1, n - 1)

    def gap(bits):
        lhs = BoundReal.exact(value, bits).log()
        rhs = alpha_bound(bits) * BoundReal.exact(n, bits).sqrt()
        return rhs - lhs

    return _certified_log_gap("diagonal-bound", n, gap, start_bits)


def subdiagonal_bound_check(
    n: int, table_like, start_bits: int = DEFAULT_PRECISION_BITS
) -> VerificationReport:
    """Certified check of p(n,n-1) < sqrt(n) * e^(a*sqrt(n)) for n >= 1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    value = table_like.value(n, n - 1)

    def gap(bits):
        nn = BoundReal.exact(n, bits)
        lhs = BoundReal.exact(value, bits).log()
        rhs = nn.log() / 2 + alpha_bound(bits) * nn.sqrt()
        return rhs - lhs

    return _certified_log_gap("subdiagonal-bound", n, gap, start_bits)


def product_bound_check(
    n: int, k: int, triangle, depth_cap: int = DEFAULT_DEPTH_CAP
) -> VerificationReport:
    """Exact check of p(n,k) < C(n,k) * prod_{j>=1} 1/(1-(k/n)^j).

    The infinite product is lower-bounded by its partial products (every
    omitted factor exceeds 1), so it suffices to verify

        p(n,k) * prod_{j<=L} (n^j - k^j)  <  C(n,k) * prod_{j<=L} n^j

    for some depth L; the check deepens L (4, 8, 16, ...) until the
    integer comparison goes through or the depth cap is reached, in which
    case the outcome is inconclusive (never asserted false).
    """
    if not 1 <= k <= n - 1:
        raise ValueError("need 1 <= k <= n-1")
    p_val = triangle.value(n, k)
    c = math.comb(n, k)
    depth = 4
    while True:
        depth = min(depth, depth_cap)
        num = 1
        den = 1
        npow = 1
        kpow = 1
        for _ in range(depth):
            npow *= n
            kpow *= k
            num *= npow
            den *= npow - kpow
        lhs = p_val * den
        rhs = c * num
        if lhs < rhs:
            return VerificationReport(
                "product-bound", n, VERIFIED,
                margin=_relative_slack(lhs, rhs),
                counterexample=None,
            )
        if depth >= depth_cap:
            return VerificationReport(
                "product-bound", n, INCONCLUSIVE, counterexample=(n, k)
            )
        depth *= 2


def asymptotic_ratio(
    n: int, k: int, triangle, ell: int = 64, bits: int = DEFAULT_PRECISION_BITS
) -> BoundReal:
    """Enclosure of the ratio p(n,k) / (C(n,k) * F(k/n)).

    Reported for trend inspection only: the ratio approaches 1 as n grows
    with k/n bounded away from 1, but no finite-n inequality is asserted
    here beyond what product_bound_check certifies.
    """
    from .qseries import TailParams, euler_product_upper

    if not 1 <= k <= n - 1:
        raise ValueError("need 1 <= k <= n-1")
    product = euler_product_upper(TailParams(q=Fraction(k, n), ell=ell), bits)
    numerator = BoundReal.exact(triangle.value(n, k), bits)
    denominator = BoundReal.exact(math.comb(n, k), bits) * product
    return numerator / denominator

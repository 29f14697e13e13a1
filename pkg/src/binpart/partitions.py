"""Exact partition counting.

Everything here is arbitrary-precision integer arithmetic (Python ints).
The module provides three independent routes to partition counts:

  1. build_partition_table  -- p(n) via Euler's pentagonal-number recurrence,
  2. build_restricted_table -- p_k(j) (largest part <= k) via the standard
     coin-counting dynamic program,
  3. enumerate_partitions   -- explicit generation of the partitions
     themselves, used as a brute-force oracle by the test suite.

check_generating_functions ties routes 1-2 to a fourth: truncated power
series expansion of prod_{j=1}^{k} 1/(1-q^j) and of its weighted companion
(sum_{j=1}^{k} j*q^j/(1-q^j)) * prod_{j=1}^{k} 1/(1-q^j), whose coefficients
must equal p_k(j) and j*p_k(j).
"""

from __future__ import annotations

from dataclasses import dataclass

ENUMERATION_CAP = 60  # p(60) ~ 1e6 partitions; hard stop for the oracle


@dataclass(frozen=True)
class PartitionTable:
    """Immutable table of p(0..max_n)."""

    values: tuple[int, ...]

    @property
    def max_n(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, n: int) -> int:
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class RestrictedTable:
    """Immutable table of p_k(0..max_n): partitions with every part <= k."""

    k: int
    values: tuple[int, ...]

    @property
    def max_n(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, j: int) -> int:
        return self.values[j]


@dataclass(frozen=True)
class PartitionMultiset:
    """One partition, stored as a nonincreasing tuple of positive parts."""

    parts: tuple[int, ...]

    def __post_init__(self):
        if any(p <= 0 for p in self.parts):
            raise ValueError("parts must be positive")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError("parts must be nonincreasing")

    @property
    def total(self) -> int:
        return sum(self.parts)


def build_partition_table(max_n: int) -> PartitionTable:
    """Compute p(0..max_n) by the pentagonal-number recurrence.

    p(n) = sum_{k>=1} (-1)^(k-1) * [p(n - k(3k-1)/2) + p(n - k(3k+1)/2)]

    with p(0) = 1, at a cost of O(sqrt(n)) big-int additions per entry.
    Monotonicity and the sub-Fibonacci property p(n) <= p(n-1) + p(n-2)
    are asserted while the table is filled.
    """
    if max_n < 0:
        raise ValueError("max_n must be >= 0")
    values = [0] * (max_n + 1)
    values[0] = 1
    for n in range(1, max_n + 1):
        total = 0
        k = 1
        while True:
            g1 = n - k * (3 * k - 1) // 2
            if g1 < 0:
                break
            term = values[g1]
            g2 = n - k * (3 * k + 1) // 2
            if g2 >= 0:
                term += values[g2]
            total += term if k % 2 == 1 else -term
            k += 1
        values[n] = total
        if total < values[n - 1]:
            raise AssertionError(f"p({n}) < p({n - 1}): table corrupt")
        if n >= 2 and total > values[n - 1] + values[n - 2]:
            raise AssertionError(f"p({n}) exceeds p({n - 1}) + p({n - 2})")
    return PartitionTable(values=tuple(values))


def build_restricted_table(k: int, max_n: int) -> RestrictedTable:
    """Compute p_k(0..max_n) by the coin-counting dynamic program.

    Parts are admitted one size at a time, so after processing sizes
    1..m the row holds partitions with all parts <= m.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if max_n < 0:
        raise ValueError("max_n must be >= 0")
    values = [0] * (max_n + 1)
    values[0] = 1
    for part in range(1, k + 1):
        for j in range(part, max_n + 1):
            values[j] += values[j - part]
    return RestrictedTable(k=k, values=tuple(values))


def enumerate_partitions(
    n: int, max_part: int, cap: int = ENUMERATION_CAP
) -> list[PartitionMultiset]:
    """Generate every partition of n with all parts <= max_part.

    Returned largest-part-first, in descending lexicographic order, e.g.
    n=5, max_part=3 gives 3+2, 3+1+1, 2+2+1, 2+1+1+1, 1+1+1+1+1.
    Refuses n beyond `cap` to keep the oracle at desk scale.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if max_part < 1:
        raise ValueError("max_part must be >= 1")
    if n > cap:
        raise ValueError(f"n={n} exceeds enumeration cap {cap}")

    out: list[PartitionMultiset] = []
    prefix: list[int] = []

    def descend(remaining: int, limit: int):
        if remaining == 0:
            out.append(PartitionMultiset(parts=tuple(prefix)))
            return
        for part in range(min(limit, remaining), 0, -1):
            prefix.append(part)
            descend(remaining - part, part)
            prefix.pop()

    descend(n, max_part)
    return out


def _truncated_product_of_geometric(k: int, degree: int) -> list[int]:
    """Coefficients 0..degree of prod_{j=1}^{k} 1/(1-q^j).

    Each factor is expanded as the geometric series 1 + q^j + q^(2j) + ...
    and multiplied in as a sparse convolution (in place, ascending powers).
    """
    coeffs = [0] * (degree + 1)
    coeffs[0] = 1
    for j in range(1, k + 1):
        # multiply by 1/(1-q^j): new[m] = new[m - j] + old[m]
        for m in range(j, degree + 1):
            coeffs[m] += coeffs[m - j]
    return coeffs


def _weighted_tail_series(k: int, degree: int) -> list[int]:
    """Coefficients 0..degree of sum_{j=1}^{k} j*q^j/(1-q^j).

    The j-th summand contributes j to every coefficient at a positive
    multiple of j.
    """
    coeffs = [0] * (degree + 1)
    for j in range(1, k + 1):
        for m in range(j, degree + 1, j):
            coeffs[m] += j
    return coeffs


def _convolve_truncated(a: list[int], b: list[int], degree: int) -> list[int]:
    out = [0] * (degree + 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j in range(0, degree + 1 - i):
            bj = b[j]
            if bj:
                out[i + j] += ai * bj
    return out


@dataclass(frozen=True)
class SeriesIdentityReport:
    """Outcome of the generating-function coefficient comparison."""

    k: int
    degree: int
    ok: bool
    first_mismatch: tuple[str, int] | None  # (identity name, coefficient index)


def check_generating_functions(
    k: int, degree: int, table: RestrictedTable | None = None
) -> SeriesIdentityReport:
    """Verify both series identities for p_k against the DP table.

    Identity "product":  coefficient j of prod_{i=1}^{k} 1/(1-q^i) equals
    p_k(j).  Identity "weighted": coefficient j of
    (sum_{i=1}^{k} i*q^i/(1-q^i)) * prod_{i=1}^{k} 1/(1-q^i) equals j*p_k(j).
    All coefficients are exact integers; comparison is for all j <= degree.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if degree < 1:
        raise ValueError("degree must be >= 1")
    if table is None:
        table = build_restricted_table(k, degree)
    if table.k != k or table.max_n < degree:
        raise ValueError("table does not cover the requested check")

    product = _truncated_product_of_geometric(k, degree)
    for j in range(degree + 1):
        if product[j] != table[j]:
            return SeriesIdentityReport(k, degree, False, ("product", j))

    weighted = _convolve_truncated(
        _weighted_tail_series(k, degree), product, degree
    )
    for j in range(degree + 1):
        if weighted[j] != j * table[j]:
            return SeriesIdentityReport(k, degree, False, ("weighted", j))

    return SeriesIdentityReport(k, degree, True, None)

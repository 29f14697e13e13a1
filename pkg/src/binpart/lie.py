"""Ado-type upper bounds on the minimal faithful module dimension.

For a nilpotent Lie algebra of dimension n and nilpotency class k the
classical bounds on the minimal dimension mu of a faithful module are

    birkhoff: mu <= 1 + n + n^2 + ... + n^(k+1)
    reed:     mu <= 1 + n^k

and the partition-sum bound mu <= p(n,k), which for k not small beats
both by a wide margin.  Filiform algebras (k = n-1) admit the sharper
mu <= 1 + p(n-2,n-2).  All of these are exact integers; the dimension-only
corollary bound (3/sqrt(n)) * 2^n is a real and is reported as a certified
enclosure, never rounded into an integer claim.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .intervals import BoundReal, DEFAULT_PRECISION_BITS


@dataclass(frozen=True)
class NilpotentProfile:
    """Dimension and nilpotency class of a nilpotent Lie algebra.

    Setting `filiform` asserts maximal class and unlocks the sharper
    1 + p(n-2,n-2) bound; it is only consistent with k = n-1.
    """

    dim_n: int
    class_k: int
    filiform: bool = False

    def __post_init__(self):
        if self.dim_n < 1:
            raise ValueError("dimension must be >= 1")
        if not 1 <= self.class_k <= self.dim_n - 1:
            raise ValueError(
                f"class k={self.class_k} must satisfy 1 <= k <= n-1 for n={self.dim_n}"
            )
        if self.filiform and self.class_k != self.dim_n - 1:
            raise ValueError("filiform requires class k = n-1")


@dataclass(frozen=True)
class MuBoundReport:
    """All applicable bounds for one (n,k), plus the best exact one.

    best is the label of the minimal exact bound; ties prefer "pnk",
    then "filiform", then "reed", then "birkhoff".
    """

    n: int
    k: int
    birkhoff: int
    reed: int
    pnk: int
    filiform_bound: Optional[int]
    corollary_numeric: BoundReal
    best: str
    pnk_beats_reed: bool


def birkhoff_bound(n: int, k: int) -> int:
    """1 + n + n^2 + ... + n^(k+1), exactly."""
    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")
    return sum(n**i for i in range(k + 2))


def reed_bound(n: int, k: int) -> int:
    """1 + n^k, exactly."""
    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")
    return 1 + n**k


def pnk_bound(profile: NilpotentProfile, triangle) -> int:
    """The partition-sum bound p(n,k)."""
    return triangle.value(profile.dim_n, profile.class_k)


def filiform_bound(n: int, triangle) -> int:
    """1 + p(n-2,n-2), the sharper bound available when k = n-1."""
    if n < 2:
        raise ValueError("filiform bound needs n >= 2")
    return 1 + triangle.value(n - 2, n - 2)


def corollary_bound(n: int, bits: int = DEFAULT_PRECISION_BITS) -> BoundReal:
    """Certified enclosure of (3/sqrt(n)) * 2^n.

    A strict upper bound for every p(n,k) (the exact row bound carries
    constant 113/40 < 3), hence a class-independent bound for mu.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    return (3 * BoundReal.exact(1 << n, bits)) / BoundReal.exact(n, bits).sqrt()


def best_bound(
    profile: NilpotentProfile, triangle, bits: int = DEFAULT_PRECISION_BITS
) -> MuBoundReport:
    """Compute every applicable bound and identify the exact minimizer."""
    n, k = profile.dim_n, profile.class_k
    birkhoff = birkhoff_bound(n, k)
    reed = reed_bound(n, k)
    pnk = pnk_bound(profile, triangle)
    fili = filiform_bound(n, triangle) if profile.filiform else None

    candidates = [("pnk", pnk)]
    if fili is not None:
        candidates.append(("filiform", fili))
    candidates.append(("reed", reed))
    candidates.append(("birkhoff", birkhoff))
    best = min(candidates, key=lambda item: item[1])[0]

    return MuBoundReport(
        n=n,
        k=k,
        birkhoff=birkhoff,
        reed=reed,
        pnk=pnk,
        filiform_bound=fili,
        corollary_numeric=corollary_bound(n, bits),
        best=best,
        pnk_beats_reed=pnk < reed,
    )

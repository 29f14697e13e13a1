"""binpart: exact binomial partition sums and certified bound verification.

Core objects: partition tables (exact, arbitrary precision), the p(n,k)
triangle with its unimodality structure, tail-bounded Euler-product
enclosures, certified inequality checks, and Ado-type dimension bounds
for nilpotent Lie algebras.
"""

from .binomial_sums import (
    DiagonalTable,
    PnkTriangle,
    UnimodalProfile,
    binomial_ratio,
    build_triangle,
    check_growth_conditions,
    closed_form_even,
    closed_form_odd,
    dominance_check,
    iter_triangle_rows,
    peak_k,
    peak_sign_sum,
    pnk_direct,
    verify_unimodal_profile,
    weighted_binomial_sum,
)
from .checks import (
    VerificationReport,
    asymptotic_ratio,
    central_binomial_check,
    diagonal_bound_check,
    growth_chain_check,
    partition_bound_check,
    product_bound_check,
    row_bound_check,
    subdiagonal_bound_check,
)
from .intervals import BoundReal, decide_with_escalation
from .lie import (
    MuBoundReport,
    NilpotentProfile,
    best_bound,
    birkhoff_bound,
    corollary_bound,
    filiform_bound,
    pnk_bound,
    reed_bound,
)
from .partitions import (
    PartitionMultiset,
    PartitionTable,
    RestrictedTable,
    build_partition_table,
    build_restricted_table,
    check_generating_functions,
    enumerate_partitions,
)
from .qseries import (
    EnclosureWidthError,
    TailParams,
    enclose_euler_product,
    euler_product_upper,
    weighted_sum_upper,
)

__version__ = "0.1.0"

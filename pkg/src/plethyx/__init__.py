"""Exact symmetric-function computations: Schur ring, plethysm, and closed
forms for plethysm and restriction coefficients."""
from .partitions import (
    EMPTY,
    Partition,
    SkewShape,
    contains,
    enumerate_partitions,
    is_horizontal_strip,
    is_vertical_strip,
    parse_partition,
    transpose,
)
from .tableaux import LRTableau, enumerate_lr_tableaux, lr_coefficient
from .schur import (
    HPrefixedSeries,
    NonIntegralError,
    PowerSumPoly,
    SchurPoly,
    antipode,
    e,
    e_to_schur,
    from_power_sum,
    h,
    h_to_schur,
    hall_inner,
    jacobi_trudi_e,
    jacobi_trudi_h,
    multiply,
    omega,
    p,
    pieri_e,
    pieri_h,
    s,
    skew_schur,
    to_power_sum,
)
from .plethysm import (
    TruncatedSeries,
    frobenius_oracle,
    plethysm,
    plethysm_adjoint,
    plethysm_truncated,
    restriction_oracle,
)
from .formulas import (
    ScopeError,
    count_restriction_tuples,
    frobenius_e_closed,
    frobenius_h_closed,
    frobenius_three_columns,
    plethysm_coeff_hr_closed,
    restriction_via_main,
    s_lambda_hr_perp_closed,
)

__version__ = "0.1.0"

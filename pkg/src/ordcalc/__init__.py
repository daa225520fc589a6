"""Exact ordinal arithmetic below epsilon-0.

Cantor normal forms with ordered and natural (Hessenberg) sums; countable
sequences with closed-form infinite sums; mixed-sum certificates and exact
enumeration of reordered-sum values; brute-force oracles for all of it.
"""

from .core import (
    DEFAULT_DEPTH_LIMIT,
    DepthLimitExceeded,
    InvariantError,
    OMEGA,
    ONE,
    Ordinal,
    Term,
    ZERO,
    add,
    as_ordinal,
    compare,
    degree,
    get_depth_limit,
    is_finite,
    is_limit,
    mul_nat,
    nat_sum,
    nat_sum_many,
    omega_pow,
    ordered_sum,
    render,
    render_unicode,
    set_depth_limit,
    successor,
    to_int,
    truncate,
)
from .mixed import (
    Certificate,
    CertificateError,
    OrderTypeMismatch,
    UnknownSummandIndex,
    ValueMismatch,
    ValueSet,
    ZeroLengthBlock,
    absorb_cofinal_power,
    carruth_realize,
    enumerate_lf_pwc_sums,
    enumerate_pwc_sums_finite,
    max_lf_mixed_sum,
    realize_inat_sum,
    render_certificate,
    validate_certificate,
)
from .oracle import (
    GrowthReport,
    SmallUniverse,
    UniverseExhausted,
    add_recursive,
    brute_force_interleavings_naturals,
    brute_force_perm_sums,
    check_universe_equivalence,
    nat_sum_recursive,
    partial_sum_growth_check,
    run_oracle_checks,
)
from .parsing import ParseError, parse_certificate, parse_ordinal, parse_sequence
from .sequences import (
    DegreeRamp,
    OmegaSequence,
    Periodic,
    SumAnalysis,
    Zero,
    analyze,
    element_at,
    inat_sum,
    iord_sum,
    partial_nat_sum,
    regroup_head,
    shift,
    tail_sum_from,
    truncate_seq,
    xi_of,
)

__version__ = "0.1.0"

"""Exact-arithmetic laboratory for parity bias in restricted partitions.

Everything is integer-exact: truncated formal power series over bigints,
brute-force and dynamic-programming partition counting, and coefficient-wise
inequality verdicts where independent computation routes must agree.
"""

__version__ = "0.1.0"

from .series import (
    FormalSeries,
    MonomialParam,
    ZERO_PARAM,
    add,
    div_binomial,
    make,
    monomial_series,
    mul,
    one,
    poch_finite,
    poch_infinite,
    q_power,
    reciprocal,
    scale,
    shift,
    sub,
    times_binomial,
    zero,
)
from .families import (
    FAMILY_IDS,
    build_series,
    family_parameter_kind,
    list_families,
    validate_params,
)
from .oracle import (
    BiasSpec,
    ConstraintSpec,
    PARITY_CLASSES,
    bias_breakdown_dp,
    bias_counts_dp,
    count_bias_dp,
    count_bias_enum,
    count_parity_family,
    count_separated,
    dp_cap,
    enumerate_partitions,
    enumeration_cap,
    even_partition_count,
    parity_family_counts,
    partition_count,
    residue_counts,
    separated_counts,
)
from .identities import (
    CheckResult,
    IDENTITY_IDS,
    IdentityCheck,
    SUBSTITUTIONS,
    check_identity,
    compare_series,
    identity_sides,
    run_all_substitutions,
    substitution_checks,
)
from .inequalities import (
    ORACLE_BACKED,
    THEOREM_IDS,
    InequalityReport,
    InjectionReport,
    TheoremSpec,
    TierDisagreement,
    compare,
    family_oracle_counts,
    find_threshold,
    phi_map,
    verify_b_inequalities,
    verify_phi_injective,
    verify_theorem,
)
from .report import RunReport, run_all_checks

__all__ = [
    "__version__",
    # series arithmetic
    "FormalSeries",
    "MonomialParam",
    "ZERO_PARAM",
    "add",
    "div_binomial",
    "make",
    "monomial_series",
    "mul",
    "one",
    "poch_finite",
    "poch_infinite",
    "q_power",
    "reciprocal",
    "scale",
    "shift",
    "sub",
    "times_binomial",
    "zero",
    # generating-function catalog
    "FAMILY_IDS",
    "build_series",
    "family_parameter_kind",
    "list_families",
    "validate_params",
    # counting oracles
    "BiasSpec",
    "ConstraintSpec",
    "PARITY_CLASSES",
    "bias_breakdown_dp",
    "bias_counts_dp",
    "count_bias_dp",
    "count_bias_enum",
    "count_parity_family",
    "count_separated",
    "dp_cap",
    "enumerate_partitions",
    "enumeration_cap",
    "even_partition_count",
    "parity_family_counts",
    "partition_count",
    "residue_counts",
    "separated_counts",
    # identity suite
    "CheckResult",
    "IDENTITY_IDS",
    "IdentityCheck",
    "SUBSTITUTIONS",
    "check_identity",
    "compare_series",
    "identity_sides",
    "run_all_substitutions",
    "substitution_checks",
    # inequality lab
    "ORACLE_BACKED",
    "THEOREM_IDS",
    "InequalityReport",
    "InjectionReport",
    "TheoremSpec",
    "TierDisagreement",
    "compare",
    "family_oracle_counts",
    "find_threshold",
    "phi_map",
    "verify_b_inequalities",
    "verify_phi_injective",
    "verify_theorem",
    # reporting
    "RunReport",
    "run_all_checks",
]

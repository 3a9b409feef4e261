"""Positroids: decorated permutations, Grassmann necklaces, and their minors."""

from .core import (
    MAX_GROUND_SET,
    BasisFamily,
    DecoratedPermutation,
    GrassmannNecklace,
    InvalidNecklaceError,
    NecklaceViolation,
    PositroidError,
    PreconditionError,
    Subset,
    ValidationError,
    bases_of,
    bases_to_obj,
    cyclic_lt,
    format_bases,
    format_necklace,
    format_perm,
    format_subset,
    gale_extremum,
    gale_leq,
    in_cyclic_interval,
    loop_coloop_status,
    necklace_of,
    necklace_step,
    necklace_to_obj,
    necklace_violations,
    parse_bases,
    parse_necklace,
    parse_perm,
    parse_subset,
    perm_of,
    perm_to_obj,
    pred,
    succ,
    validate_necklace,
)
from .minors import (
    CaseLabel,
    MinorKind,
    MinorResult,
    MinorTrace,
    SquareRow,
    apply_minor,
    classify_square,
    contract,
    contract_necklace,
    contraction_swap,
    is_degenerate,
    render_trace,
    restrict,
    restrict_necklace,
    restriction_swap,
    trace_minor,
    trace_to_obj,
)
from .oracle import (
    BOTH_KINDS,
    ENUMERATION_CAP,
    VerificationReport,
    check_matroid,
    enumerate_decorated_perms,
    is_positroid,
    oracle_contract,
    oracle_delete,
    oracle_necklace,
    verify_all,
)

__version__ = "0.1.0"

__all__ = [
    "MAX_GROUND_SET",
    "BOTH_KINDS",
    "ENUMERATION_CAP",
    "BasisFamily",
    "CaseLabel",
    "DecoratedPermutation",
    "GrassmannNecklace",
    "InvalidNecklaceError",
    "MinorKind",
    "MinorResult",
    "MinorTrace",
    "NecklaceViolation",
    "PositroidError",
    "PreconditionError",
    "SquareRow",
    "Subset",
    "ValidationError",
    "VerificationReport",
    "apply_minor",
    "bases_of",
    "bases_to_obj",
    "check_matroid",
    "classify_square",
    "contract",
    "contract_necklace",
    "contraction_swap",
    "cyclic_lt",
    "enumerate_decorated_perms",
    "format_bases",
    "format_necklace",
    "format_perm",
    "format_subset",
    "gale_extremum",
    "gale_leq",
    "in_cyclic_interval",
    "is_degenerate",
    "is_positroid",
    "loop_coloop_status",
    "necklace_of",
    "necklace_step",
    "necklace_to_obj",
    "necklace_violations",
    "oracle_contract",
    "oracle_delete",
    "oracle_necklace",
    "parse_bases",
    "parse_necklace",
    "parse_perm",
    "parse_subset",
    "perm_of",
    "perm_to_obj",
    "pred",
    "render_trace",
    "restrict",
    "restrict_necklace",
    "restriction_swap",
    "succ",
    "trace_minor",
    "trace_to_obj",
    "validate_necklace",
    "verify_all",
]

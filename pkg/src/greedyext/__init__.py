"""Greedy linear extensions of finite posets.

Exact enumeration and membership for greedy linear extensions, jump/block
decompositions, exact rational balance ratios, the disjoint/linear sum
counting formulas, and a constructive balanced-pair witness for N-free
orders that are not chains.
"""

from .errors import (
    ArityMismatch,
    CapExceeded,
    CycleDetected,
    GreedyExtError,
    IndexOutOfRange,
    IsChain,
    LimitExceeded,
    NotALinearExtension,
    NotAutomorphism,
    NotGreedy,
    NotNFree,
    PosetSyntaxError,
    PreconditionViolated,
    ProbabilityRange,
    SizeError,
    SizeMismatch,
    Underflow,
)
from .poset import (
    GoodTriple,
    NWitness,
    Poset,
    antichain,
    automorphisms,
    build_poset,
    chain,
    disjoint_sum,
    is_automorphism,
    lex_sum,
    linear_sum,
)
from .greedy import (
    BalanceReport,
    BlockDecomposition,
    DEFAULT_CAP,
    LinearExtension,
    Ratio,
    all_linear_extensions,
    apply_automorphism,
    balance_report,
    blocks,
    dual_extension,
    exists_greedy_before,
    gp_ratio,
    greedy_count,
    greedy_extensions,
    is_greedy,
    is_reversible,
    linear_extension_count,
    p_ratio,
)
from .counting import (
    WitnessPair,
    autonomous_minimal_pair,
    count_by_components,
    count_chain_sum,
    count_disjoint_sum,
    count_linear_sum,
    half_balanced_witness,
    jump_profile,
    lift_extension,
    multinomial,
    project_extension,
    removable_minimals,
)
from .generators import (
    SpExpression,
    enumerate_labeled_posets,
    eval_sp,
    parse_sp,
    random_nfree,
    random_poset,
    random_sp,
    random_sp_expression,
)
from .textio import format_poset, parse_poset

__all__ = [name for name in dir() if not name.startswith("_")]

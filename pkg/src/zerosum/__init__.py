"""Zero-sum subsequence workbench over finite abelian groups.

Detection, exact counting, and constructive extraction of zero-sum
subsequences of prescribed lengths; extremal sequence builders; and
brute-force determination of the modified zero-sum constants with
closed-form cross-checks.
"""

from .constructions import (
    CyclicExtremalParams,
    ExtremalReport,
    SquareExtremalParams,
    build_cyclic_extremal,
    build_power2_extremal,
    build_square_extremal,
    cyclic_extremal_params,
    square_extremal_params,
    validate_extremal,
)
from .engine import (
    count_zero_sum_subseqs,
    find_zero_sum_subseq,
    has_zero_sum_in_lengths,
    has_zero_sum_of_length,
)
from .extractors import (
    BlockDecomposition,
    PreconditionError,
    PrimeSplit,
    cyclic_block_decomposition,
    extract_cyclic_block,
    extract_cyclic_nt,
    extract_cyclic_nt_rounds,
    extract_square_3n,
    extract_square_block,
    extract_square_n,
    factor_smallest_prime,
)
from .groups import (
    DEFAULT_MAX_ORDER,
    Element,
    Group,
    GroupParseError,
    make_group,
    min_nondivisor,
    parse_group,
)
from .search import (
    BudgetExceeded,
    ConstantReport,
    EnumerationStats,
    EnumerationTask,
    PropertyReport,
    SearchBudget,
    SearchStats,
    brute_force_modified_constant,
    check_all_have_witness,
    check_lemma_3n,
    check_lemma_por2p,
    conjecture_value,
    enumerate_multisets,
    enumerate_zero_sum_multisets,
    formula_modified_cyclic,
    formula_modified_square,
    harborth_bounds,
    make_enumeration_tasks,
    reports_to_csv,
    run_enumeration_task,
    verify_theorem,
)
from .sequences import (
    Sequence,
    SequenceParseError,
    Witness,
    canonicalize,
    group_automorphisms,
    parse_elements,
    parse_sequence,
    sequence_from_jsonable,
    sequence_to_jsonable,
    serialize_sequence,
)

__version__ = "0.1.0"

__all__ = [
    "BlockDecomposition",
    "BudgetExceeded",
    "ConstantReport",
    "CyclicExtremalParams",
    "DEFAULT_MAX_ORDER",
    "Element",
    "EnumerationStats",
    "EnumerationTask",
    "ExtremalReport",
    "Group",
    "GroupParseError",
    "PreconditionError",
    "PrimeSplit",
    "PropertyReport",
    "SearchBudget",
    "SearchStats",
    "Sequence",
    "SequenceParseError",
    "SquareExtremalParams",
    "Witness",
    "brute_force_modified_constant",
    "build_cyclic_extremal",
    "build_power2_extremal",
    "build_square_extremal",
    "canonicalize",
    "check_all_have_witness",
    "check_lemma_3n",
    "check_lemma_por2p",
    "conjecture_value",
    "count_zero_sum_subseqs",
    "cyclic_block_decomposition",
    "cyclic_extremal_params",
    "enumerate_multisets",
    "enumerate_zero_sum_multisets",
    "extract_cyclic_block",
    "extract_cyclic_nt",
    "extract_cyclic_nt_rounds",
    "extract_square_3n",
    "extract_square_block",
    "extract_square_n",
    "factor_smallest_prime",
    "find_zero_sum_subseq",
    "formula_modified_cyclic",
    "formula_modified_square",
    "group_automorphisms",
    "harborth_bounds",
    "has_zero_sum_in_lengths",
    "has_zero_sum_of_length",
    "make_enumeration_tasks",
    "make_group",
    "min_nondivisor",
    "parse_elements",
    "parse_group",
    "parse_sequence",
    "reports_to_csv",
    "run_enumeration_task",
    "sequence_from_jsonable",
    "sequence_to_jsonable",
    "serialize_sequence",
    "square_extremal_params",
    "validate_extremal",
    "verify_theorem",
]

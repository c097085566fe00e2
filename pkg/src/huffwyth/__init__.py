"""Exact-arithmetic toolkit around maximum-height Huffman trees.

The package ties together three strands:

  * a stepwise Huffman algorithm that records every intermediate weight
    sequence, classifies inputs by their tie pattern, and builds the
    corresponding prefix-code trees (huffman);
  * the generalized Wythoff array and the Fibonacci / Lucas / lower
    Wythoff sequences feeding it (numbers, wythoff);
  * closed forms for the cheapest weight sequences whose optimal tree has
    maximum height, by order class, plus their costs (theorems), and a
    brute-force oracle that verifies those closed forms by exhaustive
    enumeration (oracle).

All arithmetic is exact; no floats appear anywhere.
"""

from .numbers import fib, isqrt, lower_wythoff, lucas
from .wythoff import check_fib_row_identity, wythoff_entry, wythoff_row
from .huffman import (
    DEFAULT_TIE_POLICY,
    EmptySequenceError,
    HuffmanTrace,
    Internal,
    Leaf,
    Node,
    NotSortedError,
    OrderClass,
    OrderKind,
    StepRecord,
    TiePolicy,
    TooShortError,
    build_tree,
    check_elongated_inequality,
    classify_order,
    classify_trace,
    codebook,
    is_elongated,
    is_left_sided,
    leaf_depths,
    leaf_weights,
    run_huffman,
    trace_from_json,
    trace_to_json,
    validate_weights,
    wepl,
)
from .theorems import (
    KOutOfRangeError,
    SizeTooSmallError,
    corollary_sequences,
    min_abs_cost,
    min_abs_sequence,
    min_k_cost,
    min_k_sequence,
    min_k_sequence_fib_form,
)
from .oracle import (
    EmptyClassError,
    OracleReport,
    SearchSpaceTooLargeError,
    TooLargeError,
    brute_force_min,
    brute_force_min_abs,
    count_sequences,
    elongated_cost,
    enumerate_sequences,
    huffman_cost,
    optimal_tree_cost,
    report_to_json,
)

__version__ = "0.1.0"

__all__ = [
    "fib", "lucas", "isqrt", "lower_wythoff",
    "wythoff_entry", "wythoff_row", "check_fib_row_identity",
    "TiePolicy", "DEFAULT_TIE_POLICY", "StepRecord", "HuffmanTrace",
    "Leaf", "Internal", "Node", "OrderKind", "OrderClass",
    "EmptySequenceError", "NotSortedError", "TooShortError",
    "validate_weights", "run_huffman", "build_tree",
    "leaf_weights", "leaf_depths", "wepl", "codebook",
    "is_elongated", "is_left_sided", "classify_order", "classify_trace",
    "check_elongated_inequality", "trace_to_json", "trace_from_json",
    "SizeTooSmallError", "KOutOfRangeError",
    "min_abs_sequence", "min_abs_cost", "min_k_sequence",
    "min_k_sequence_fib_form", "min_k_cost", "corollary_sequences",
    "SearchSpaceTooLargeError", "EmptyClassError", "TooLargeError",
    "OracleReport", "enumerate_sequences", "count_sequences",
    "elongated_cost", "huffman_cost", "optimal_tree_cost",
    "brute_force_min", "brute_force_min_abs", "report_to_json",
    "__version__",
]

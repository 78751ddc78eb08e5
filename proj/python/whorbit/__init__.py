"""Whitehead moves and minimal-word orbit counting in free groups.

The heavy lifting lives in the C++ extension; this package re-exports it.
"""

from ._core import (
    CyclicWord,
    DependenceGraph,
    MarkedSequence,
    WhError,
    WhiteheadW1,
    WhiteheadW2,
    apply_to_sequence,
    apply_w1,
    apply_w2,
    ascending_chain_search,
    build_marked_sequence,
    census,
    check_hypotheses,
    degree_restricted_orbit,
    dependence_graph,
    derive_length_preserving_moves,
    enumerate_w1,
    enumerate_w2,
    enumerate_w2_degree0,
    is_minimal,
    length_delta,
    level_set,
    level_set_w2,
    lift_degree_k,
    lift_general,
    minimize,
    parse_word,
    product_bound_check,
    project_restricted,
    reorder_pair,
    run_verify,
    sequence_degree0_orbit_size,
    syllable_lengths,
)

__all__ = [
    "CyclicWord",
    "DependenceGraph",
    "MarkedSequence",
    "WhError",
    "WhiteheadW1",
    "WhiteheadW2",
    "apply_to_sequence",
    "apply_w1",
    "apply_w2",
    "ascending_chain_search",
    "build_marked_sequence",
    "census",
    "check_hypotheses",
    "degree_restricted_orbit",
    "dependence_graph",
    "derive_length_preserving_moves",
    "enumerate_w1",
    "enumerate_w2",
    "enumerate_w2_degree0",
    "is_minimal",
    "length_delta",
    "level_set",
    "level_set_w2",
    "lift_degree_k",
    "lift_general",
    "minimize",
    "parse_word",
    "product_bound_check",
    "project_restricted",
    "reorder_pair",
    "run_verify",
    "sequence_degree0_orbit_size",
    "syllable_lengths",
]

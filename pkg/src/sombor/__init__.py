"""Extremal trees for the Sombor index under degree constraints."""

__version__ = "0.1.0"

from .degseq import (
    DegreeSequence,
    NonRealizable,
    ReducedDegreeSequence,
    corollary_sequence,
    expand,
    majorization_chain,
    majorizes,
    reduce,
    validate,
)
from .extremal import (
    alt_greedy_tree,
    alternating_greedy_tree,
    alternating_level_greedy_tree,
    check_max_property,
    check_min_property,
    greedy_tree,
    level_greedy_tree,
    phi,
)
from .graph import (
    EdgeTypeMultiset,
    Graph,
    LeveledDegreeSequence,
    RootedTree,
    SomborValue,
    canonical_form,
    edge_type_multiset,
    export_dot,
    leveled_degree_sequence,
    parse_edge_list,
    rooted_view,
    serialize_edge_list,
    sombor_index,
)
from .oracle import all_tree_degree_sequences, enumerate_trees, extremal_scan, verify
from .transforms import (
    branch_swap,
    move_branch,
    pendent_path_merge,
    same_degree_swap_closure,
    tailed_cycle,
)

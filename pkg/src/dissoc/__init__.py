"""Counting, enumeration and exhaustive extremal verification of maximal
dissociation sets in trees and forests."""

from .enumeration import (
    BRUTE_VERTEX_LIMIT,
    BudgetError,
    count_mds_brute,
    count_restricted,
    enumerate_mds,
)
from .formulas import (
    BoundValue,
    Comparison,
    claim1_g,
    claim1_h,
    compare,
    conjecture_of,
    f1_of,
    f2_of,
    t_of,
)
from .generators import (
    FREE_TREE_COUNTS,
    build_conjecture_tree,
    build_f1_extremal,
    build_f2_extremal,
    build_t_star,
    build_t_star_8,
    build_t_star_9,
    free_tree_catalog,
    gen_forests,
    gen_free_trees,
    lemma1_transform,
    lemma2_transform,
    lemma3_delete_leaf,
    path,
    star,
)
from .graph import (
    Graph,
    GraphError,
    canonical_code,
    components,
    degree,
    delete_vertex,
    diameter,
    disjoint_union,
    edge_list,
    format_edge_list,
    is_dissociation_set,
    is_forest,
    is_maximal_dissociation_set,
    is_tree,
    leaves,
    load_graph,
    make_graph,
    mask_of,
    members,
    parse_edge_list,
    parse_graph6,
    permute,
    support_vertices,
    to_graph6,
)
from .treedp import count_mds_forest, count_mds_tree

__version__ = "0.1.0"

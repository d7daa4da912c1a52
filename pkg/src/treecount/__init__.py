"""Exact counting, exhaustive enumeration, verification, and uniform
sampling of labeled trees on vertices 1..n.

Every closed-form count ships with an independent brute-force companion
(edge-subset filtering, exhaustive Prufer sweeps, occurrence counting)
and a verifier that checks the two sides against each other across
whole parameter grids.  All arithmetic is exact.
"""

from treecount.core import (
    BadVertex,
    CapExceeded,
    Composition,
    CompositionSumMismatch,
    DegreeSequence,
    DuplicateEdge,
    Edge,
    EdgeNotInTree,
    EdgeTextError,
    InvalidDegreeSequence,
    LabeledTree,
    NonIntegralResult,
    NotATree,
    OutOfRange,
    PruferSequence,
    TreeCountError,
    as_integer,
    binomial,
    canonicalize_tree,
    composition,
    degree_of,
    degree_sequence,
    exact_div,
    factorial,
    multinomial,
    prufer_sequence,
    prufer_to_text,
    read_prufer_lines,
    read_trees,
    tree_degrees,
    tree_to_text,
)
from treecount.counting import (
    DegV1Count,
    assemble_double_count,
    binomial_collapse,
    count_fixed_composition_trees,
    count_supervertex_trees,
    count_total_trees,
    count_trees_deg_v1,
    count_trees_deg_v1_rational,
    count_trees_with_degrees,
    deg_v1_counts,
    expand_L3,
    lemma1_lhs,
    recursion_T,
)
from treecount.enumeration import (
    Component,
    Forest,
    deg_v1_histogram,
    enumerate_all_trees,
    enumerate_all_trees_by_edges,
    enumerate_compositions,
    enumerate_edge_subsets_pairs,
    enumerate_trees_with_degrees,
    prufer_decode,
    prufer_encode,
    split_by_edge_removal,
    split_by_root_removal,
)
from treecount.sampling import SamplerConfig, sample_tree_with_degrees, sample_uniform_tree
from treecount.verifier import Failure, IdentityReport, verify_all

__version__ = "0.1.0"

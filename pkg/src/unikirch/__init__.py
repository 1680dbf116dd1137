"""Exact resistance distances, Kirchhoff indices and matching numbers
of unicyclic graphs, with exhaustive enumeration and verification
suites for the extremal families."""

from .enumeration import (
    CanonicalCode,
    canonical_code,
    enumerate_unicyclic,
    enumerate_with_codes,
    extremal_search,
    free_trees,
    rooted_tree_code,
    rooted_tree_codes,
)
from .families import (
    ExtremalPrediction,
    FamilySpec,
    arc_pair_resistance_sum,
    attach_pendants_at_min_vertex,
    girth_min_kf,
    make_cycle,
    make_path,
    make_ukt,
    make_unm,
    parse_family_spec,
    predicted_min,
    predicted_min_perfect,
    recognize_family,
    ukt_central_vertex_sum,
    ukt_kf_closed_form,
    unm_kf_closed_form,
)
from .graph import (
    Branch,
    DisconnectedError,
    Graph,
    GraphParseError,
    UnicyclicDecomposition,
    bfs_distances,
    decompose_unicyclic,
    identify_vertices,
    is_connected,
    is_unicyclic,
    make_graph,
    read_graph,
    strip_pendant_p2,
    wiener_index,
    without_vertices,
    write_graph,
)
from .matching import (
    MatchingResult,
    PerfectMatchingClass,
    classify_2m_m,
    has_perfect_matching,
    matching_number,
    matching_number_tree,
    reduce_to_g0,
)
from .rational import Rational, format_rational, parse_rational
from .resistance import (
    ResistanceMatrix,
    kf_cycle,
    kf_identified,
    kfv_cycle,
    kirchhoff_index,
    kirchhoff_index_dense,
    kirchhoff_vertex_sum,
    r_cycle,
    resistance_forest,
    resistance_laplacian,
    resistance_matrix,
    resistance_unicyclic,
    vertex_sums,
)
from .verification import VerificationReport, run_suite

__version__ = "0.1.0"

"""Exact-arithmetic toolkit for two-column tableaux, noncrossing
matchings, web diagrams, plabic graphs, and web immanants."""

from .matchings import (
    BalancedWord,
    DomainError,
    NoncrossingMatching,
    PartialMatching,
    color_sets,
    enumerate_matchings,
    enumerate_partial_matchings,
    hat,
    short_arcs,
    word_of_matching,
    word_sign,
)
from .tableaux import (
    ContentEncoding,
    SemistandardTableau,
    StandardTableau,
    as_semistandard,
    catalan_bijection,
    catalan_bijection_inverse,
    destandardize,
    enumerate_semistandard,
    enumerate_standard,
    parse_tableau,
    partial_matching_of_tableau,
    standardize,
    tableau_of_partial_matching,
)
from .dissections import (
    WeightedDissection,
    WeightedTriangulation,
    dissection_faces,
    dissection_of_matching,
    flip,
    triangulation_extensions,
)
from .webs import (
    WebDiagram,
    claw_web,
    contract_bivalent,
    reattach_boundary,
    remove_dimer,
    sl2_web_of_matching,
    tableau_to_web,
    validate_web,
    web_certificate,
    web_of_triangulation,
)
from .invariants import (
    InvariantVector,
    PlueckerMonomial,
    alt_sign_factor,
    delta_matching_expansion,
    delta_monomial,
    dual_matchings,
    evaluate_monomial,
    evaluate_web,
    exact_det,
    invariant_vector,
    labeling_count,
    labelings,
    pairing,
    sign_lemma_factor,
)
from .plabic import (
    Positroid,
    cyclic_interval_positroid,
    dimer_covers,
    graph_type,
    grassmann_necklace,
    plabic_of_web,
    positroid_of_graph,
    top_cell_graph,
    trip_permutation,
    validate_plabic,
)
from .immanants import (
    PlabicNetwork,
    boundary_measurements,
    delete_boundary,
    immanant_value,
    immanant_vs_invariant,
    matrix_columns,
    random_network,
    realize_matrix,
    stitch_network,
    two_like_subgraphs,
    unit_network,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]

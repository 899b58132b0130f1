"""Exact rank analysis for mixed graphs.

Computes the rank of Hermitian, adjacency and skew-adjacency matrices in
exact arithmetic, classifies mixed graphs against the rank-difference bound
|rk - r| <= 2d and its extremal structural characterizations, and verifies
the underlying identities by independent brute-force enumeration.
"""

from .classify import (
    ClassificationReport,
    OrientedReport,
    classify,
    classify_oriented,
    cycle_h_rank_formula,
    cycle_rank_formula,
    graph_rank,
    h_rank,
    underlying_profile,
)
from .graphs import (
    MixedGraph,
    MixedGraphParseError,
    UnderlyingGraph,
    components,
    decode_graph6,
    delete_vertices,
    encode_graph6,
    format_mixed_graph,
    load_mixed_graph,
    parse_mixed_graph,
    pendant_vertices,
    quasi_pendant_vertices,
    save_mixed_graph,
    underlying,
)
from .linalg import (
    GaussianInt,
    GaussianMatrix,
    IntPolynomial,
    adjacency_matrix,
    char_poly,
    exact_rank,
    hermitian_matrix,
    skew_adjacency_matrix,
)
from .structure import (
    ContractionPair,
    CycleSet,
    DeltaTrace,
    contract_cycles,
    crucial_subgraph_exists,
    cycle_space_dim,
    delta_transform,
    detect_cycles,
    matching_number,
    signature,
    traversal_counts,
)
from .verify import (
    SweepReport,
    basic_subgraph_coefficient,
    count_maximum_matchings,
    decode_orientation,
    elementary_subgraph_coefficient,
    encode_orientation,
    enumerate_orientations,
    sweep,
    verify_single,
)

__version__ = "0.1.0"

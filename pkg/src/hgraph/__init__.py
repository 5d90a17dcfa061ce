"""Sparse dynamic graphs on degree-bucketed adjacency.

The core :class:`HGraph` supports vertex and edge updates in time bounded
by the h-index, and the rest of the package builds on it: clique listing
and the four-vertex census, diamond-free maintenance with certificates,
and dominated/simplicial/simple vertex tracking for cop-win and strongly
chordal recognition.
"""

from .census import (
    CENSUS_FIELDS,
    C4Triple,
    CensusReport,
    VertexCensus,
    all_vertex_census,
    cliques_containing,
    edge_degrees,
    enumerate_c4_triples,
    global_census,
    list_cliques,
    list_triangles,
    solve_exact,
    triangles_containing,
    vertex_census,
)
from .core import HGraph, OpCounters, degeneracy, h_index, new_graph
from .diamond import (
    DiamondCertificate,
    DiamondFreeGraph,
    NotDiamondFree,
    df_new,
    recognize_diamond_free,
)
from .elimination import (
    EliminationState,
    OrderResult,
    copwin_order,
    dismantling,
    elim_build,
    simple_elimination_ordering,
)
from .errors import (
    BadArity,
    DuplicateEdge,
    DuplicateVertex,
    EmptyGraph,
    HGraphError,
    InternalInconsistency,
    SelfLoop,
    SizeLimit,
    UnknownEdge,
    UnknownNeighbor,
    UnknownVertex,
)
from .io import ParseError, ReplayError, format_edgelist, load_edgelist, parse_edgelist, parse_trace

__version__ = "0.1.0"

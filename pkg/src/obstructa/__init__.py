"""Exact toolkit for wheel-free Hamiltonicity obstructions.

Core value type: :class:`obstructa.graphs.Graph`, a simple graph on at most
64 vertices with bitmask adjacency rows.  Everything built on it is a pure
function; see the README for the module map and the CLI surface.
"""

from .canon import are_isomorphic, automorphism_count, canonical_form, graph_from_canonical
from .detectors import ClassificationRecord, classify, find_induced_3pc, find_induced_wheel
from .enumeration import CensusReport, census, enumerate_graphs, verify_main_theorem
from .families import (
    ThreePcSpec,
    WheelSpec,
    build_3pc,
    build_short_variant,
    build_wheel,
    format_spec,
    parse_spec,
    recognize_3pc,
)
from .graphs import (
    Certificate,
    Graph,
    connectivity_report,
    contract_edge,
    decode_graph6,
    encode_graph6,
    find_clique_cutset,
    graph_from_edges,
    induced_subgraph,
    line_graph,
)
from .hamiltonicity import (
    HamResult,
    ObstructionVerdict,
    find_hamiltonian_cycle,
    find_hamiltonian_path,
    is_hc_obstruction,
)

__all__ = [
    "CensusReport",
    "Certificate",
    "ClassificationRecord",
    "Graph",
    "HamResult",
    "ObstructionVerdict",
    "ThreePcSpec",
    "WheelSpec",
    "are_isomorphic",
    "automorphism_count",
    "build_3pc",
    "build_short_variant",
    "build_wheel",
    "canonical_form",
    "census",
    "classify",
    "connectivity_report",
    "contract_edge",
    "decode_graph6",
    "encode_graph6",
    "enumerate_graphs",
    "find_clique_cutset",
    "find_hamiltonian_cycle",
    "find_hamiltonian_path",
    "find_induced_3pc",
    "find_induced_wheel",
    "format_spec",
    "graph_from_canonical",
    "graph_from_edges",
    "induced_subgraph",
    "is_hc_obstruction",
    "line_graph",
    "parse_spec",
    "recognize_3pc",
    "verify_main_theorem",
]

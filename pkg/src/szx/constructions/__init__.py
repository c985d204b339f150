"""Graph states, graph transformations and CPC codes built as diagrams."""

from .cpc import CpcCode, bit_syndrome, cpc_decoder, cpc_encoder, cpc_error_equation, phase_syndrome
from .graphs import Graph, all_graphs, bipartite_graph, local_complement, parse_graph, pivot, random_graph
from .graphstates import (
    bipartite_graph_state,
    graph_state_box,
    locomp_equation,
    on_qubits,
    pivot_equation,
    pivot_matrix,
)

__all__ = [
    "CpcCode",
    "Graph",
    "all_graphs",
    "bipartite_graph",
    "bipartite_graph_state",
    "bit_syndrome",
    "cpc_decoder",
    "cpc_encoder",
    "cpc_error_equation",
    "graph_state_box",
    "local_complement",
    "locomp_equation",
    "on_qubits",
    "parse_graph",
    "phase_syndrome",
    "pivot",
    "pivot_equation",
    "pivot_matrix",
    "random_graph",
]

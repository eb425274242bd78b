"""Exact combinatorial toolkit for toric ideals of graphs.

Circuits and Graver bases of a graph's toric ideal are computed two ways:
from the graph structure (cycle/block characterizations) and from the
integer kernel lattice (completion and minimal-support sweeps), so each
route checks the other. A recursive cycle-attachment family demonstrates
Graver degrees growing exponentially while circuit degrees grow linearly.
"""

from .blocks import (
    BlockDecomposition,
    BlockTree,
    block_decomposition,
    block_distance,
    block_tree,
    max_block_distance,
)
from .circuits import (
    CircuitSubgraph,
    circuit_binomial,
    circuit_walk,
    enumerate_circuit_subgraphs,
    max_circuit_degree,
    max_circuit_degree_cactus,
    max_circuit_degree_cactus_witness,
)
from .errors import (
    ENUM_CAP_ENV,
    EnumerationCapError,
    ToricGraphError,
    ZeroBinomialError,
)
from .fixtures import fixture, fixtures
from .graphs import (
    ClosedWalk,
    Graph,
    MultiGraph,
    add_cycle,
    connecting_paths,
    cycle_graph,
    enumerate_cycles,
    eulerian_trail,
    format_graph,
    graph_sum,
    parse_graph,
    read_graph_file,
    write_graph_file,
)
from .graver import (
    GraverSet,
    circuits_bruteforce,
    graver_completion,
    is_conformally_minimal,
    kernel_lattice_basis,
)
from .grn import (
    GrnParams,
    SeparationReport,
    SeparationRow,
    build_grn,
    grn_circuit_bound,
    grn_degree2_count,
    grn_graver_degree,
    render_csv,
    render_table,
    separation_report,
)
from .lattice import (
    IntMatrix,
    SNFResult,
    circuit_index,
    determinant,
    hermite_normal_form,
    rank,
    smith_normal_form,
    true_degree,
)
from .primitive import (
    PrimitivityVerdict,
    connected_edge_subsets,
    graver_from_graph,
    grn_primitive_binomial,
    has_proper_conformal_subwalk,
    is_primitive_subgraph,
)
from .toric import (
    Binomial,
    ToricConfiguration,
    a_degree,
    binomial_of_walk,
    degree,
    doubled_graph,
    incidence_configuration,
)

__all__ = [
    "ENUM_CAP_ENV",
    "Binomial",
    "BlockDecomposition",
    "BlockTree",
    "CircuitSubgraph",
    "ClosedWalk",
    "EnumerationCapError",
    "Graph",
    "GraverSet",
    "GrnParams",
    "IntMatrix",
    "MultiGraph",
    "PrimitivityVerdict",
    "SNFResult",
    "SeparationReport",
    "SeparationRow",
    "ToricConfiguration",
    "ToricGraphError",
    "ZeroBinomialError",
    "a_degree",
    "add_cycle",
    "binomial_of_walk",
    "block_decomposition",
    "block_distance",
    "block_tree",
    "build_grn",
    "circuit_binomial",
    "circuit_index",
    "circuit_walk",
    "circuits_bruteforce",
    "connected_edge_subsets",
    "connecting_paths",
    "cycle_graph",
    "degree",
    "determinant",
    "doubled_graph",
    "enumerate_circuit_subgraphs",
    "enumerate_cycles",
    "eulerian_trail",
    "fixture",
    "fixtures",
    "format_graph",
    "graph_sum",
    "graver_completion",
    "graver_from_graph",
    "grn_circuit_bound",
    "grn_degree2_count",
    "grn_graver_degree",
    "grn_primitive_binomial",
    "has_proper_conformal_subwalk",
    "hermite_normal_form",
    "incidence_configuration",
    "is_conformally_minimal",
    "is_primitive_subgraph",
    "kernel_lattice_basis",
    "max_block_distance",
    "max_circuit_degree",
    "max_circuit_degree_cactus",
    "max_circuit_degree_cactus_witness",
    "parse_graph",
    "rank",
    "read_graph_file",
    "render_csv",
    "render_table",
    "separation_report",
    "smith_normal_form",
    "true_degree",
    "write_graph_file",
]

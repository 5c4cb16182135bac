"""Quantum-walk spectral heuristics for the maximum clique problem.

The package decomposes a graph's adjacency matrix, reads per-vertex
amplitude intensities off the spectrum, and uses them to grow, prune and
chain candidate cliques; an exact branch-and-bound oracle provides
ground truth at desk scale.
"""

from .graph import (Clique, Graph, GraphFormatError, UnknownVertexError,
                    center_subgraph, delete_vertex, first_non_adjacent_pair,
                    gnp_random, is_clique, read_graph, read_planted_clique,
                    write_graph)
from .ideal import (BaseGraphSpec, FirstKindSpec, ResonantParameterError,
                    SecondKindSpec, SeparationReport, WalkCounts,
                    closed_form_check, closed_form_walks, gen_base_graph,
                    gen_first_kind, gen_second_kind, intensity_separation,
                    linked_cliques_example, recursion_first, recursion_second,
                    resolvent_identity_check)
from .oracle import (CliqueSearchCapError, OracleResult, max_clique_exact)
from .solver import (NotCenterGraphError, SolveTrace, SolverConfig, TraceStep,
                     algorithm_a, algorithm_b, algorithm_c, delete_min,
                     pick_max, vfsa)
from .spectral import (EigenSystem, IntensityVector, WalkTable, amplitude,
                       eigendecompose, group_frequencies, intensities,
                       probabilities, probability, walk_counts,
                       write_intensity_csv)

__version__ = "0.1.0"

__all__ = [
    "Clique", "Graph", "GraphFormatError", "UnknownVertexError",
    "center_subgraph", "delete_vertex", "first_non_adjacent_pair",
    "gnp_random", "is_clique", "read_graph", "read_planted_clique",
    "write_graph",
    "BaseGraphSpec", "FirstKindSpec", "ResonantParameterError",
    "SecondKindSpec", "SeparationReport", "WalkCounts", "closed_form_check",
    "closed_form_walks", "gen_base_graph", "gen_first_kind",
    "gen_second_kind", "intensity_separation", "linked_cliques_example",
    "recursion_first", "recursion_second", "resolvent_identity_check",
    "CliqueSearchCapError", "OracleResult", "max_clique_exact",
    "NotCenterGraphError", "SolveTrace", "SolverConfig", "TraceStep",
    "algorithm_a", "algorithm_b", "algorithm_c", "delete_min", "pick_max",
    "vfsa",
    "EigenSystem", "IntensityVector", "WalkTable", "amplitude",
    "eigendecompose", "group_frequencies", "intensities", "probabilities",
    "probability", "walk_counts", "write_intensity_csv",
    "__version__",
]

"""Percolation centrality estimation via shortest-path sampling.

Thin wrapper around the C++ extension module. The main entry points are
``estimate`` (sampling estimator with an (epsilon, delta) guarantee), ``exact``
(Brandes-style exact values) and ``brute_force`` (enumeration oracle for small
graphs).
"""

from ._core import (
    CentralityEstimates,
    Graph,
    barabasi_albert,
    brute_force,
    estimate,
    exact,
    exclusive_sums,
    load_edge_list,
    load_states,
    parse_edge_list,
    parse_states,
    percolation_differences,
    random_states,
    sample_size,
    save_edge_list,
    vertex_diameter_bound,
)

__all__ = [
    "CentralityEstimates",
    "Graph",
    "barabasi_albert",
    "brute_force",
    "estimate",
    "exact",
    "exclusive_sums",
    "load_edge_list",
    "load_states",
    "parse_edge_list",
    "parse_states",
    "percolation_differences",
    "random_states",
    "sample_size",
    "save_edge_list",
    "vertex_diameter_bound",
]

__version__ = "0.1.0"

#pragma once

#include <cstdint>
#include <vector>

#include "perc/graph.hpp"

namespace perc {

// Sums of positive state differences R(x_d - x_f), R(x) = max{x, 0}:
//   total        over all ordered pairs
//   exclusive[v] over all ordered pairs avoiding v (the centrality denominator)
struct DifferenceSums {
    double total = 0.0;
    std::vector<double> exclusive;
};

// O(n) dynamic program over a non-decreasing array; exclusive[] is indexed by
// sorted position. Throws if the input is unsorted or empty.
DifferenceSums percolation_differences(const std::vector<double>& sorted_states);

// Sorts the states, runs percolation_differences, and maps exclusive[] back to
// vertex ids.
DifferenceSums exclusive_sums_by_vertex(const PercolationStates& states);

// r = ceil(c/eps^2 * (pd_term + ln(1/delta))) with
// pd_term = floor(lg(vd_bound - 2)) + 1, clamped to 1 for vd_bound <= 3.
long long sample_size(const RunConfig& cfg, int vd_bound);

enum class EstimateKind { estimated, exact };

struct CentralityEstimates {
    std::vector<double> values;
    long long r = 0;
    int vd_bound = 0;
    EstimateKind kind = EstimateKind::exact;
    std::uint64_t seed = 0;
};

// Sampling estimator: r shortest paths drawn from pi(p_uw) = 1/(n(n-1)sigma_uw);
// each internal vertex z of a sampled path gains R(x_u - x_w)/(r*exclusive[z]).
// Pr(max_v |estimate(v) - p(v)| <= epsilon) >= 1 - delta. Deterministic for a
// fixed (seed, workers): iterations are split across workers with per-worker
// RNG streams and merged by element-wise addition.
CentralityEstimates estimate_percolation(const Graph& g, const PercolationStates& states,
                                         const RunConfig& cfg);

// Exact values by Brandes-style accumulation, one full DAG per source with
// targets seeded by R(x_u - x_w). O(nm) unweighted, O(nm log n) weighted.
// Parallelizes over sources; deterministic for a fixed worker count.
CentralityEstimates exact_percolation(const Graph& g, const PercolationStates& states,
                                      int workers = 1);

// Validation oracle: enumerates every shortest path of every ordered pair and
// evaluates the definition term by term, with its own O(n^2)-per-vertex
// denominator sums. Refuses graphs larger than max_vertices.
CentralityEstimates brute_force_percolation(const Graph& g, const PercolationStates& states,
                                            int max_vertices = 10);

// Every shortest u->w path via exhaustive DFS over the raw adjacency with
// weight pruning. Small graphs only; independent of shortest_path_dag.
std::vector<std::vector<int>> enumerate_shortest_paths(const Graph& g, int u, int w);

}  // namespace perc

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "perc/graph.hpp"

namespace perc {

// Single-source shortest-path DAG with path counts.
//   dist[v]   : shortest-path weight from source, +inf when unreachable
//   sigma[v]  : number of shortest source->v paths (exact while < 2^53)
//   preds[v]  : z with edge (z,v) and dist[z] + w(z,v) == dist[v]
//   settled   : vertices in settling order (non-decreasing dist); partial when
//               the computation stopped early at a target
struct ShortestPathDAG {
    int source = -1;
    std::vector<double> dist;
    std::vector<double> sigma;
    std::vector<std::vector<int>> preds;
    std::vector<int> settled;
};

// BFS for unit weights, Dijkstra otherwise. With a target, stops once every
// vertex at distance <= dist[target] is settled; dist/sigma/preds are final
// for all such vertices (everything a backward traversal from target touches).
ShortestPathDAG shortest_path_dag(const Graph& g, int source,
                                  std::optional<int> target = std::nullopt);

// Uniform draw from the shortest source->target paths: walk backwards picking
// predecessor z with probability sigma[z] / sigma[t]. Returns the path in
// source->target order. Throws if target is unreachable (sigma == 0).
std::vector<int> sample_shortest_path(const ShortestPathDAG& dag, int target,
                                      std::mt19937_64& rng);

// Upper bound on the vertex-diameter (max vertices on any shortest path).
// Directed graphs are symmetrized first. Per connected component one seeded
// random source is expanded and the two hop-longest shortest paths to distinct
// endpoints give the estimate |p1| + |p2| - 1; the maximum over components is
// returned. For the symmetrized graph: true VD <= result <= 2 * VD.
int approximate_vertex_diameter(const Graph& g, std::uint64_t seed);

}  // namespace perc

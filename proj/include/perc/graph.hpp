#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace perc {

struct Edge {
    int u;
    int v;
    double weight = 1.0;
};

struct Neighbor {
    int to;
    double weight;
};

// Malformed edge-list or states input; the message names the offending line.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Immutable adjacency structure. Vertex ids are dense integers 0..n-1, there
// are no self-loops or duplicate edges, and all weights are strictly positive
// (Dijkstra precondition). Undirected edges are stored once and traversed both
// ways. Safe to share read-only across threads after construction.
class Graph {
public:
    Graph(int n, bool directed, std::vector<Edge> edges, bool weighted = false);

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    bool directed() const { return directed_; }
    // True when the input carried explicit weights (affects serialization only).
    bool weighted() const { return weighted_; }
    // True when every weight equals 1.0, so BFS can replace Dijkstra.
    bool unit_weights() const { return unit_weights_; }

    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Neighbor>& neighbors(int v) const { return adj_[v]; }

private:
    int n_ = 0;
    bool directed_ = false;
    bool weighted_ = false;
    bool unit_weights_ = true;
    std::vector<Edge> edges_;
    std::vector<std::vector<Neighbor>> adj_;
};

// Per-vertex percolation state, each in [0,1] (1 = fully percolated).
struct PercolationStates {
    std::vector<double> x;
};

struct RunConfig {
    double epsilon = 0.1;   // accuracy, in (0,1]
    double delta = 0.1;     // confidence, in (0,1]
    double c = 0.5;         // universal sample-size constant
    std::uint64_t seed = 1;
    int workers = 1;
};

void check_config(const RunConfig& cfg);
void check_states(const PercolationStates& states, int n);

struct LoadStats {
    int self_loops_dropped = 0;
    int duplicates_collapsed = 0;
};

// Edge-list ingestion. Lines starting with '#' are comments; data lines carry
// "u v" (unweighted) or "u v w" (weighted). Ids are remapped to dense 0..n-1
// preserving first-occurrence order, duplicate edges collapse to the minimum
// weight, and self-loops are dropped (counted in stats).
Graph load_edge_list(std::istream& in, bool directed, bool weighted,
                     LoadStats* stats = nullptr);
Graph load_edge_list_file(const std::string& path, bool directed, bool weighted,
                          LoadStats* stats = nullptr);
void save_edge_list(const Graph& g, std::ostream& out);

// Preferential attachment: m_attach isolated seed vertices, then each new
// vertex attaches to m_attach distinct existing vertices drawn uniformly from
// the repeated-endpoints list (uniformly over vertices while all degrees are
// zero). |E| = m_attach * (n - m_attach). Requires n > m_attach >= 1.
Graph generate_barabasi_albert(int n, int m_attach, std::uint64_t seed);

// Independent uniform [0,1) states; deterministic for a fixed seed.
PercolationStates assign_random_states(int n, std::uint64_t seed);

// States file: either "v x" pairs or one value per line in vertex order.
// Every vertex must be assigned exactly once and every value lie in [0,1].
PercolationStates load_states(std::istream& in, int n);
PercolationStates load_states_file(const std::string& path, int n);

}  // namespace perc

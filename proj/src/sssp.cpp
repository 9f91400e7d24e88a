#include "perc/sssp.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <unordered_map>

#include "perc/random.hpp"

namespace perc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void bfs(const Graph& g, ShortestPathDAG& dag, std::optional<int> target) {
    std::vector<int> queue;
    queue.reserve(g.num_vertices());
    size_t head = 0;
    dag.dist[dag.source] = 0.0;
    dag.sigma[dag.source] = 1.0;
    queue.push_back(dag.source);
    while (head < queue.size()) {
        int u = queue[head++];
        // once the first vertex beyond the target pops, everything at
        // distance <= dist[target] is final
        if (target && dag.dist[u] > dag.dist[*target]) break;
        dag.settled.push_back(u);
        double du = dag.dist[u];
        for (const Neighbor& e : g.neighbors(u)) {
            if (dag.dist[e.to] == kInf) {
                dag.dist[e.to] = du + 1.0;
                queue.push_back(e.to);
            }
            if (dag.dist[e.to] == du + 1.0) {
                dag.sigma[e.to] += dag.sigma[u];
                dag.preds[e.to].push_back(u);
            }
        }
    }
}

void dijkstra(const Graph& g, ShortestPathDAG& dag, std::optional<int> target) {
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    std::vector<char> done(g.num_vertices(), 0);
    dag.dist[dag.source] = 0.0;
    dag.sigma[dag.source] = 1.0;
    heap.push({0.0, dag.source});
    while (!heap.empty()) {
        auto [d, u] = heap.top();
        heap.pop();
        if (done[u]) continue;
        done[u] = 1;
        if (target && d > dag.dist[*target]) break;
        dag.settled.push_back(u);
        for (const Neighbor& e : g.neighbors(u)) {
            double nd = d + e.weight;
            if (nd < dag.dist[e.to]) {
                dag.dist[e.to] = nd;
                dag.sigma[e.to] = dag.sigma[u];
                dag.preds[e.to].assign(1, u);
                heap.push({nd, e.to});
            } else if (nd == dag.dist[e.to]) {
                // ties detected by exact equality of accumulated distances;
                // exact for integral and dyadic weights
                dag.sigma[e.to] += dag.sigma[u];
                dag.preds[e.to].push_back(u);
            }
        }
    }
}

}  // namespace

ShortestPathDAG shortest_path_dag(const Graph& g, int source, std::optional<int> target) {
    const int n = g.num_vertices();
    if (source < 0 || source >= n) throw std::invalid_argument("source out of range");
    if (target && (*target < 0 || *target >= n))
        throw std::invalid_argument("target out of range");
    ShortestPathDAG dag;
    dag.source = source;
    dag.dist.assign(n, kInf);
    dag.sigma.assign(n, 0.0);
    dag.preds.assign(n, {});
    if (g.unit_weights())
        bfs(g, dag, target);
    else
        dijkstra(g, dag, target);
    return dag;
}

std::vector<int> sample_shortest_path(const ShortestPathDAG& dag, int target,
                                      std::mt19937_64& rng) {
    if (target < 0 || target >= static_cast<int>(dag.dist.size()))
        throw std::invalid_argument("target out of range");
    if (dag.sigma[target] < 1.0)
        throw std::invalid_argument("target unreachable from source");
    std::vector<int> path{target};
    int t = target;
    while (t != dag.source) {
        const std::vector<int>& preds = dag.preds[t];
        // P(z) = sigma[z] / sigma[t]; sigma[t] is the exact sum over preds
        double threshold = uniform01(rng) * dag.sigma[t];
        int z = preds.back();
        double cum = 0.0;
        for (int cand : preds) {
            cum += dag.sigma[cand];
            if (threshold < cum) {
                z = cand;
                break;
            }
        }
        path.push_back(z);
        t = z;
    }
    std::reverse(path.begin(), path.end());
    return path;
}

namespace {

// Undirected copy with duplicate edges collapsed to the minimum weight.
Graph symmetrized(const Graph& g) {
    std::unordered_map<std::uint64_t, double> best;
    best.reserve(g.edges().size());
    for (const Edge& e : g.edges()) {
        std::uint64_t a = static_cast<std::uint64_t>(std::min(e.u, e.v));
        std::uint64_t b = static_cast<std::uint64_t>(std::max(e.u, e.v));
        std::uint64_t key = (a << 32) | b;
        auto [it, fresh] = best.try_emplace(key, e.weight);
        if (!fresh) it->second = std::min(it->second, e.weight);
    }
    std::vector<Edge> edges;
    edges.reserve(best.size());
    for (const Edge& e : g.edges()) {
        std::uint64_t a = static_cast<std::uint64_t>(std::min(e.u, e.v));
        std::uint64_t b = static_cast<std::uint64_t>(std::max(e.u, e.v));
        std::uint64_t key = (a << 32) | b;
        auto it = best.find(key);
        if (it != best.end()) {
            edges.push_back({static_cast<int>(a), static_cast<int>(b), it->second});
            best.erase(it);
        }
    }
    return Graph(g.num_vertices(), false, std::move(edges), g.weighted());
}

}  // namespace

int approximate_vertex_diameter(const Graph& g, std::uint64_t seed) {
    const int n = g.num_vertices();
    if (n < 1) throw std::invalid_argument("diameter of an empty graph");
    std::optional<Graph> storage;
    if (g.directed()) storage = symmetrized(g);
    const Graph& sym = storage ? *storage : g;
    auto rng = make_rng(seed);

    std::vector<char> visited(n, 0);
    std::vector<int> component;
    std::vector<int> hops(n, 0);
    int result = 1;
    for (int start = 0; start < n; ++start) {
        if (visited[start]) continue;
        // collect the component (plain BFS, id order deterministic)
        component.clear();
        component.push_back(start);
        visited[start] = 1;
        for (size_t i = 0; i < component.size(); ++i)
            for (const Neighbor& e : sym.neighbors(component[i]))
                if (!visited[e.to]) {
                    visited[e.to] = 1;
                    component.push_back(e.to);
                }

        int source = component[bounded(rng, component.size())];
        ShortestPathDAG dag = shortest_path_dag(sym, source);
        // hop-longest shortest path to each endpoint, DP over the DAG in
        // settling order (every predecessor settles first)
        int top1 = 0, top2 = 0;
        for (int v : dag.settled) {
            int h = 1;
            for (int z : dag.preds[v]) h = std::max(h, hops[z] + 1);
            hops[v] = h;
            if (h > top1) {
                top2 = top1;
                top1 = h;
            } else if (h > top2) {
                top2 = h;
            }
        }
        if (dag.settled.size() == 1) top2 = 1;  // single-vertex component
        result = std::max(result, top1 + top2 - 1);
    }
    return result;
}

}  // namespace perc

#include "perc/percolation.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <thread>

#include "perc/random.hpp"
#include "perc/sssp.hpp"

namespace perc {

namespace {

inline double ramp(double x) { return x > 0.0 ? x : 0.0; }

// Contiguous block of work for worker k out of W.
std::pair<long long, long long> block(long long total, int k, int workers) {
    long long base = total / workers, extra = total % workers;
    long long lo = k * base + std::min<long long>(k, extra);
    long long hi = lo + base + (k < extra ? 1 : 0);
    return {lo, hi};
}

void run_workers(int workers, const std::function<void(int)>& body) {
    if (workers <= 1) {
        body(0);
        return;
    }
    std::vector<std::thread> threads;
    threads.reserve(workers - 1);
    for (int k = 1; k < workers; ++k) threads.emplace_back(body, k);
    body(0);
    for (auto& t : threads) t.join();
}

}  // namespace

CentralityEstimates estimate_percolation(const Graph& g, const PercolationStates& states,
                                         const RunConfig& cfg) {
    const int n = g.num_vertices();
    if (n < 2) throw std::invalid_argument("estimate_percolation: need at least two vertices");
    check_states(states, n);
    check_config(cfg);

    const int vd_bound = approximate_vertex_diameter(g, cfg.seed);
    const long long r = sample_size(cfg, vd_bound);
    const DifferenceSums sums = exclusive_sums_by_vertex(states);

    const int workers = cfg.workers;
    std::vector<std::vector<double>> partial(workers, std::vector<double>(n, 0.0));
    auto body = [&](int k) {
        auto [lo, hi] = block(r, k, workers);
        auto rng = make_rng(cfg.seed, static_cast<std::uint64_t>(k) + 1);
        std::vector<double>& acc = partial[k];
        for (long long it = lo; it < hi; ++it) {
            int u = static_cast<int>(bounded(rng, n));
            int w = static_cast<int>(bounded(rng, n - 1));
            if (w >= u) ++w;
            double gain = ramp(states.x[u] - states.x[w]);
            if (gain == 0.0) continue;  // iteration consumed, nothing to add
            ShortestPathDAG dag = shortest_path_dag(g, u, w);
            if (dag.sigma[w] == 0.0) continue;  // unreachable pair, likewise
            std::vector<int> path = sample_shortest_path(dag, w, rng);
            for (size_t i = 1; i + 1 < path.size(); ++i) {
                int z = path[i];
                if (sums.exclusive[z] > 0.0) acc[z] += gain / sums.exclusive[z];
            }
        }
    };
    run_workers(workers, body);

    CentralityEstimates est;
    est.values.assign(n, 0.0);
    for (int k = 0; k < workers; ++k)
        for (int v = 0; v < n; ++v) est.values[v] += partial[k][v];
    for (int v = 0; v < n; ++v) est.values[v] /= static_cast<double>(r);
    est.r = r;
    est.vd_bound = vd_bound;
    est.kind = EstimateKind::estimated;
    est.seed = cfg.seed;
    return est;
}

CentralityEstimates exact_percolation(const Graph& g, const PercolationStates& states,
                                      int workers) {
    const int n = g.num_vertices();
    if (n < 2) throw std::invalid_argument("exact_percolation: need at least two vertices");
    check_states(states, n);
    if (workers < 1) throw std::invalid_argument("workers must be >= 1");

    const DifferenceSums sums = exclusive_sums_by_vertex(states);
    std::vector<std::vector<double>> partial(workers, std::vector<double>(n, 0.0));
    auto body = [&](int k) {
        auto [lo, hi] = block(n, k, workers);
        std::vector<double>& acc = partial[k];
        std::vector<double> delta(n);
        for (int u = static_cast<int>(lo); u < hi; ++u) {
            ShortestPathDAG dag = shortest_path_dag(g, u);
            std::fill(delta.begin(), delta.end(), 0.0);
            // dependency accumulation, targets seeded with R(x_u - x_w)
            for (auto it = dag.settled.rbegin(); it != dag.settled.rend(); ++it) {
                int w = *it;
                double coeff = (ramp(states.x[u] - states.x[w]) + delta[w]) / dag.sigma[w];
                for (int z : dag.preds[w]) delta[z] += dag.sigma[z] * coeff;
                if (w != u) acc[w] += delta[w];
            }
        }
    };
    run_workers(workers, body);

    CentralityEstimates est;
    est.values.assign(n, 0.0);
    for (int k = 0; k < workers; ++k)
        for (int v = 0; v < n; ++v) est.values[v] += partial[k][v];
    const double pairs = static_cast<double>(n) * (n - 1);
    for (int v = 0; v < n; ++v)
        est.values[v] = sums.exclusive[v] > 0.0
                            ? est.values[v] / (pairs * sums.exclusive[v])
                            : 0.0;
    est.kind = EstimateKind::exact;
    return est;
}

std::vector<std::vector<int>> enumerate_shortest_paths(const Graph& g, int u, int w) {
    const int n = g.num_vertices();
    if (u < 0 || u >= n || w < 0 || w >= n)
        throw std::invalid_argument("enumerate_shortest_paths: vertex out of range");
    std::vector<std::vector<int>> best_paths;
    if (u == w) return best_paths;
    double best = std::numeric_limits<double>::infinity();
    std::vector<int> current{u};
    std::vector<char> on_path(n, 0);
    on_path[u] = 1;

    auto dfs = [&](auto&& self, int v, double weight) -> void {
        if (weight > best) return;  // positive weights: extensions only grow
        if (v == w) {
            if (weight < best) {
                best = weight;
                best_paths.clear();
            }
            best_paths.push_back(current);
            return;
        }
        for (const Neighbor& e : g.neighbors(v)) {
            if (on_path[e.to]) continue;
            on_path[e.to] = 1;
            current.push_back(e.to);
            self(self, e.to, weight + e.weight);
            current.pop_back();
            on_path[e.to] = 0;
        }
    };
    dfs(dfs, u, 0.0);
    return best_paths;
}

CentralityEstimates brute_force_percolation(const Graph& g, const PercolationStates& states,
                                            int max_vertices) {
    const int n = g.num_vertices();
    if (n < 2) throw std::invalid_argument("brute_force_percolation: need at least two vertices");
    if (n > max_vertices)
        throw std::invalid_argument("brute_force_percolation: graph too large for exhaustive enumeration");
    check_states(states, n);

    // denominators straight from the definition, no shared code with Algorithm 1
    std::vector<double> exclusive(n, 0.0);
    for (int v = 0; v < n; ++v)
        for (int f = 0; f < n; ++f) {
            if (f == v) continue;
            for (int d = 0; d < n; ++d) {
                if (d == v || d == f) continue;
                exclusive[v] += ramp(states.x[f] - states.x[d]);
            }
        }

    std::vector<double> acc(n, 0.0);
    for (int u = 0; u < n; ++u)
        for (int w = 0; w < n; ++w) {
            if (u == w) continue;
            double gain = ramp(states.x[u] - states.x[w]);
            if (gain == 0.0) continue;
            auto paths = enumerate_shortest_paths(g, u, w);
            if (paths.empty()) continue;
            double share = gain / static_cast<double>(paths.size());
            for (const auto& path : paths)
                for (size_t i = 1; i + 1 < path.size(); ++i) acc[path[i]] += share;
        }

    CentralityEstimates est;
    est.values.assign(n, 0.0);
    const double pairs = static_cast<double>(n) * (n - 1);
    for (int v = 0; v < n; ++v)
        est.values[v] = exclusive[v] > 0.0 ? acc[v] / (pairs * exclusive[v]) : 0.0;
    est.kind = EstimateKind::exact;
    return est;
}

}  // namespace perc

#include "perc/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "perc/random.hpp"

namespace perc {

Graph::Graph(int n, bool directed, std::vector<Edge> edges, bool weighted)
    : n_(n), directed_(directed), weighted_(weighted), edges_(std::move(edges)) {
    if (n_ < 0) throw std::invalid_argument("Graph: negative vertex count");
    adj_.assign(n_, {});
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(edges_.size() * 2);
    for (const Edge& e : edges_) {
        if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
            throw std::invalid_argument("Graph: edge endpoint out of range");
        if (e.u == e.v) throw std::invalid_argument("Graph: self-loop");
        if (!(e.weight > 0.0) || !std::isfinite(e.weight))
            throw std::invalid_argument("Graph: non-positive edge weight");
        std::uint64_t a = static_cast<std::uint64_t>(e.u);
        std::uint64_t b = static_cast<std::uint64_t>(e.v);
        if (!directed_ && a > b) std::swap(a, b);
        if (!seen.insert((a << 32) | b).second)
            throw std::invalid_argument("Graph: duplicate edge");
        if (e.weight != 1.0) unit_weights_ = false;
        adj_[e.u].push_back({e.v, e.weight});
        if (!directed_) adj_[e.v].push_back({e.u, e.weight});
    }
}

void check_config(const RunConfig& cfg) {
    if (!(cfg.epsilon > 0.0) || cfg.epsilon > 1.0)
        throw std::invalid_argument("epsilon must be in (0,1]");
    if (!(cfg.delta > 0.0) || cfg.delta > 1.0)
        throw std::invalid_argument("delta must be in (0,1]");
    if (!(cfg.c > 0.0)) throw std::invalid_argument("c must be positive");
    if (cfg.workers < 1) throw std::invalid_argument("workers must be >= 1");
}

void check_states(const PercolationStates& states, int n) {
    if (static_cast<int>(states.x.size()) != n)
        throw std::invalid_argument("states size does not match vertex count");
    for (double v : states.x)
        if (!(v >= 0.0 && v <= 1.0))
            throw std::invalid_argument("percolation state outside [0,1]");
}

namespace {

[[noreturn]] void fail_line(long long lineno, const std::string& what) {
    throw ParseError("line " + std::to_string(lineno) + ": " + what);
}

long long parse_vertex_id(const std::string& tok, long long lineno) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        fail_line(lineno, "expected a nonnegative integer vertex id, got '" + tok + "'");
    if (value < 0) fail_line(lineno, "negative vertex id '" + tok + "'");
    return value;
}

double parse_real(const std::string& tok, long long lineno) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        fail_line(lineno, "expected a real number, got '" + tok + "'");
    return value;
}

std::vector<std::string> split_tokens(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

bool blank_or_comment(const std::string& line) {
    size_t i = line.find_first_not_of(" \t\r");
    return i == std::string::npos || line[i] == '#';
}

}  // namespace

Graph load_edge_list(std::istream& in, bool directed, bool weighted, LoadStats* stats) {
    std::unordered_map<long long, int> ids;
    std::vector<Edge> edges;
    std::unordered_map<std::uint64_t, size_t> position;  // canonical key -> edges index
    LoadStats local;

    auto intern = [&](long long raw) {
        auto [it, fresh] = ids.try_emplace(raw, static_cast<int>(ids.size()));
        (void)fresh;
        return it->second;
    };

    std::string line;
    long long lineno = 0;
    const size_t want = weighted ? 3 : 2;
    while (std::getline(in, line)) {
        ++lineno;
        if (blank_or_comment(line)) continue;
        auto toks = split_tokens(line);
        if (toks.size() != want)
            fail_line(lineno, "expected " + std::to_string(want) + " tokens, got " +
                                  std::to_string(toks.size()));
        long long raw_u = parse_vertex_id(toks[0], lineno);
        long long raw_v = parse_vertex_id(toks[1], lineno);
        double w = 1.0;
        if (weighted) {
            w = parse_real(toks[2], lineno);
            if (!(w > 0.0) || !std::isfinite(w))
                fail_line(lineno, "edge weight must be strictly positive");
        }
        int u = intern(raw_u);
        int v = intern(raw_v);
        if (u == v) {
            ++local.self_loops_dropped;
            continue;
        }
        std::uint64_t a = static_cast<std::uint64_t>(u);
        std::uint64_t b = static_cast<std::uint64_t>(v);
        if (!directed && a > b) std::swap(a, b);
        std::uint64_t key = (a << 32) | b;
        auto it = position.find(key);
        if (it != position.end()) {
            edges[it->second].weight = std::min(edges[it->second].weight, w);
            ++local.duplicates_collapsed;
        } else {
            position.emplace(key, edges.size());
            edges.push_back({u, v, w});
        }
    }
    if (stats) *stats = local;
    return Graph(static_cast<int>(ids.size()), directed, std::move(edges), weighted);
}

Graph load_edge_list_file(const std::string& path, bool directed, bool weighted,
                          LoadStats* stats) {
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot open graph file: " + path);
    return load_edge_list(in, directed, weighted, stats);
}

void save_edge_list(const Graph& g, std::ostream& out) {
    char buf[96];
    for (const Edge& e : g.edges()) {
        if (g.weighted())
            std::snprintf(buf, sizeof buf, "%d %d %.17g\n", e.u, e.v, e.weight);
        else
            std::snprintf(buf, sizeof buf, "%d %d\n", e.u, e.v);
        out << buf;
    }
}

Graph generate_barabasi_albert(int n, int m_attach, std::uint64_t seed) {
    if (m_attach < 1) throw std::invalid_argument("barabasi-albert: m_attach must be >= 1");
    if (n <= m_attach)
        throw std::invalid_argument("barabasi-albert: need n > m_attach");
    auto rng = make_rng(seed);
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(m_attach) * (n - m_attach));
    std::vector<int> repeated;  // one entry per edge endpoint, drives preferential attachment
    repeated.reserve(edges.capacity() * 2);
    std::vector<int> targets;
    for (int v = m_attach; v < n; ++v) {
        targets.clear();
        while (static_cast<int>(targets.size()) < m_attach) {
            int t = repeated.empty()
                        ? static_cast<int>(bounded(rng, static_cast<std::uint64_t>(v)))
                        : repeated[bounded(rng, repeated.size())];
            if (std::find(targets.begin(), targets.end(), t) == targets.end())
                targets.push_back(t);
        }
        for (int t : targets) {
            edges.push_back({v, t, 1.0});
            repeated.push_back(v);
            repeated.push_back(t);
        }
    }
    return Graph(n, false, std::move(edges), false);
}

PercolationStates assign_random_states(int n, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    auto rng = make_rng(seed);
    PercolationStates st;
    st.x.resize(n);
    for (int v = 0; v < n; ++v) st.x[v] = uniform01(rng);
    return st;
}

PercolationStates load_states(std::istream& in, int n) {
    PercolationStates st;
    st.x.assign(n, 0.0);
    std::vector<char> assigned(n, 0);
    int layout = 0;  // 0 undecided, 1 "v x" pairs, 2 positional
    int cursor = 0;

    std::string line;
    long long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (blank_or_comment(line)) continue;
        auto toks = split_tokens(line);
        if (toks.size() != 1 && toks.size() != 2)
            fail_line(lineno, "expected 'v x' or a single value");
        int want = toks.size() == 2 ? 1 : 2;
        if (layout == 0) layout = want;
        if (layout != want) fail_line(lineno, "mixed states-file layouts");

        int v;
        double value;
        if (layout == 1) {
            long long raw = parse_vertex_id(toks[0], lineno);
            if (raw >= n) fail_line(lineno, "vertex id " + toks[0] + " out of range");
            v = static_cast<int>(raw);
            value = parse_real(toks[1], lineno);
        } else {
            if (cursor >= n) fail_line(lineno, "more values than vertices");
            v = cursor++;
            value = parse_real(toks[0], lineno);
        }
        if (!(value >= 0.0 && value <= 1.0))
            fail_line(lineno, "state outside [0,1]");
        if (assigned[v]) fail_line(lineno, "duplicate assignment for vertex " + std::to_string(v));
        assigned[v] = 1;
        st.x[v] = value;
    }
    for (int v = 0; v < n; ++v)
        if (!assigned[v])
            throw ParseError("states file: missing vertex " + std::to_string(v));
    return st;
}

PercolationStates load_states_file(const std::string& path, int n) {
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot open states file: " + path);
    return load_states(in, n);
}

}  // namespace perc

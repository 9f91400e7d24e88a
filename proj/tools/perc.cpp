#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "perc/graph.hpp"
#include "perc/percolation.hpp"
#include "perc/report.hpp"
#include "perc/sssp.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitCompute = 3;

struct GraphOpts {
    std::string path;
    bool directed = false;
    bool weighted = false;
};

struct StateOpts {
    std::string path;
    std::optional<std::uint64_t> random_seed;
};

struct OutputOpts {
    std::string path;  // empty = stdout
    std::string format = "csv";
};

void add_graph_flags(CLI::App* cmd, GraphOpts& o) {
    cmd->add_option("--graph", o.path, "edge-list file")->required();
    cmd->add_flag("--directed", o.directed, "treat edges as directed");
    cmd->add_flag("--weighted", o.weighted, "read the third column as edge weight");
}

void add_state_flags(CLI::App* cmd, StateOpts& o) {
    auto* file = cmd->add_option("--states", o.path, "per-vertex states file");
    auto* rand = cmd->add_option("--random-states", o.random_seed,
                                 "draw uniform states with this seed");
    file->excludes(rand);
    rand->excludes(file);
}

void add_output_flags(CLI::App* cmd, OutputOpts& o) {
    cmd->add_option("--output", o.path, "output file (default: stdout)");
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
}

perc::Graph load_graph(const GraphOpts& o) {
    perc::LoadStats stats;
    perc::Graph g = perc::load_edge_list_file(o.path, o.directed, o.weighted, &stats);
    if (stats.self_loops_dropped > 0)
        std::cerr << "warning: dropped " << stats.self_loops_dropped << " self-loop(s)\n";
    return g;
}

perc::PercolationStates load_state_values(const StateOpts& o, int n) {
    if (o.random_seed) return perc::assign_random_states(n, *o.random_seed);
    if (o.path.empty())
        throw CLI::ValidationError("states", "one of --states/--random-states is required");
    return perc::load_states_file(o.path, n);
}

// Writes through a stringstream so a failed run never leaves a partial file.
template <class Writer>
void emit(const OutputOpts& o, Writer&& writer) {
    std::ostringstream buf;
    writer(buf);
    if (o.path.empty()) {
        std::cout << buf.str();
        return;
    }
    std::ofstream out(o.path, std::ios::binary);
    if (!out) throw std::ios_base::failure("cannot open output file: " + o.path);
    out << buf.str();
    if (!out) throw std::ios_base::failure("failed writing output file: " + o.path);
}

double require_fraction(CLI::App* cmd, const char* name, double& slot, double def,
                        const char* help) {
    cmd->add_option(name, slot, help)->default_val(def)->check(CLI::Range(1e-9, 1.0));
    return slot;
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"percolation centrality: sampling estimator, exact oracle and benchmarks"};
    app.require_subcommand(1);
    int rc = kExitOk;

    // estimate
    auto* est_cmd = app.add_subcommand("estimate", "approximate percolation centrality");
    GraphOpts est_graph;
    StateOpts est_states;
    OutputOpts est_out;
    perc::RunConfig est_cfg;
    add_graph_flags(est_cmd, est_graph);
    add_state_flags(est_cmd, est_states);
    add_output_flags(est_cmd, est_out);
    require_fraction(est_cmd, "--epsilon", est_cfg.epsilon, 0.1, "accuracy, in (0,1]");
    require_fraction(est_cmd, "--delta", est_cfg.delta, 0.1, "confidence, in (0,1]");
    est_cmd->add_option("--c", est_cfg.c, "sample-size constant")
        ->default_val(0.5)
        ->check(CLI::PositiveNumber);
    est_cmd->add_option("--seed", est_cfg.seed, "estimator seed")->default_val(1);
    est_cmd->add_option("--threads", est_cfg.workers, "worker threads")
        ->default_val(1)
        ->check(CLI::PositiveNumber);
    est_cmd->callback([&] {
        perc::Graph g = load_graph(est_graph);
        perc::PercolationStates states = load_state_values(est_states, g.num_vertices());
        auto t0 = Clock::now();
        perc::CentralityEstimates est = perc::estimate_percolation(g, states, est_cfg);
        double secs = seconds_since(t0);
        std::cerr << "estimate: n=" << g.num_vertices() << " r=" << est.r
                  << " vd_bound=" << est.vd_bound << " wall_seconds=" << secs << "\n";
        emit(est_out, [&](std::ostream& out) {
            est_out.format == "json" ? perc::write_estimates_json(out, est)
                                     : perc::write_estimates_csv(out, est);
        });
    });

    // exact
    auto* exact_cmd = app.add_subcommand("exact", "exact percolation centrality");
    GraphOpts exact_graph;
    StateOpts exact_states;
    OutputOpts exact_out;
    int exact_threads = 1;
    add_graph_flags(exact_cmd, exact_graph);
    add_state_flags(exact_cmd, exact_states);
    add_output_flags(exact_cmd, exact_out);
    exact_cmd->add_option("--threads", exact_threads, "worker threads")
        ->default_val(1)
        ->check(CLI::PositiveNumber);
    exact_cmd->callback([&] {
        perc::Graph g = load_graph(exact_graph);
        perc::PercolationStates states = load_state_values(exact_states, g.num_vertices());
        auto t0 = Clock::now();
        perc::CentralityEstimates est = perc::exact_percolation(g, states, exact_threads);
        double secs = seconds_since(t0);
        std::cerr << "exact: n=" << g.num_vertices() << " wall_seconds=" << secs << "\n";
        emit(exact_out, [&](std::ostream& out) {
            exact_out.format == "json" ? perc::write_estimates_json(out, est)
                                       : perc::write_estimates_csv(out, est);
        });
    });

    // compare
    auto* cmp_cmd = app.add_subcommand("compare", "run exact once and the estimator repeatedly");
    GraphOpts cmp_graph;
    StateOpts cmp_states;
    OutputOpts cmp_out;
    perc::RunConfig cmp_cfg;
    int trials = 5;
    add_graph_flags(cmp_cmd, cmp_graph);
    add_state_flags(cmp_cmd, cmp_states);
    add_output_flags(cmp_cmd, cmp_out);
    require_fraction(cmp_cmd, "--epsilon", cmp_cfg.epsilon, 0.1, "accuracy, in (0,1]");
    require_fraction(cmp_cmd, "--delta", cmp_cfg.delta, 0.1, "confidence, in (0,1]");
    cmp_cmd->add_option("--c", cmp_cfg.c, "sample-size constant")
        ->default_val(0.5)
        ->check(CLI::PositiveNumber);
    cmp_cmd->add_option("--seed", cmp_cfg.seed, "base seed; trial t uses seed+t")->default_val(1);
    cmp_cmd->add_option("--threads", cmp_cfg.workers, "worker threads")
        ->default_val(1)
        ->check(CLI::PositiveNumber);
    cmp_cmd->add_option("--trials", trials, "estimator runs")
        ->default_val(5)
        ->check(CLI::PositiveNumber);
    cmp_cmd->callback([&] {
        perc::Graph g = load_graph(cmp_graph);
        perc::PercolationStates states = load_state_values(cmp_states, g.num_vertices());
        perc::CompareReport report = perc::run_compare(g, states, cmp_cfg, trials);
        std::cerr << "compare: n=" << report.n << " trials=" << report.trials
                  << " avg_error=" << report.avg_error << " max_error=" << report.max_error
                  << " speedup=" << report.speedup << "\n";
        emit(cmp_out, [&](std::ostream& out) {
            cmp_out.format == "json" ? perc::write_compare_json(out, report)
                                     : perc::write_compare_csv(out, report);
        });
    });

    // generate
    auto* gen_cmd = app.add_subcommand("generate", "write a synthetic graph as an edge list");
    std::string model;
    int gen_n = 0, gen_m = 0;
    std::uint64_t gen_seed = 1;
    OutputOpts gen_out;
    gen_cmd->add_option("--model", model, "graph model")
        ->required()
        ->check(CLI::IsMember({"ba"}));
    gen_cmd->add_option("--n", gen_n, "vertex count")->required()->check(CLI::PositiveNumber);
    gen_cmd->add_option("--m", gen_m, "edges attached per vertex")
        ->required()
        ->check(CLI::PositiveNumber);
    gen_cmd->add_option("--seed", gen_seed, "generator seed")->default_val(1);
    gen_cmd->add_option("--output", gen_out.path, "output file (default: stdout)");
    gen_cmd->callback([&] {
        if (gen_n <= gen_m)
            throw CLI::ValidationError("--n", "must exceed --m");
        perc::Graph g = perc::generate_barabasi_albert(gen_n, gen_m, gen_seed);
        emit(gen_out, [&](std::ostream& out) { perc::save_edge_list(g, out); });
    });

    // diameter
    auto* diam_cmd = app.add_subcommand("diameter", "print the vertex-diameter upper bound");
    GraphOpts diam_graph;
    std::uint64_t diam_seed = 1;
    OutputOpts diam_out;
    add_graph_flags(diam_cmd, diam_graph);
    diam_cmd->add_option("--seed", diam_seed, "source-selection seed")->default_val(1);
    diam_cmd->add_option("--output", diam_out.path, "output file (default: stdout)");
    diam_cmd->callback([&] {
        perc::Graph g = load_graph(diam_graph);
        int vd = perc::approximate_vertex_diameter(g, diam_seed);
        emit(diam_out, [&](std::ostream& out) { out << vd << "\n"; });
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const perc::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCompute;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCompute;
    }
    return rc;
}

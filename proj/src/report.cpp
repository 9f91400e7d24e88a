#include "perc/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>

#include <json.hpp>

namespace perc {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

const char* kind_name(EstimateKind k) {
    return k == EstimateKind::estimated ? "estimated" : "exact";
}

}  // namespace

CompareReport run_compare(const Graph& g, const PercolationStates& states,
                          const RunConfig& cfg, int trials) {
    if (trials < 1) throw std::invalid_argument("compare: need at least one trial");

    CompareReport report;
    report.n = g.num_vertices();
    report.epsilon = cfg.epsilon;
    report.delta = cfg.delta;
    report.trials = trials;

    auto t0 = Clock::now();
    CentralityEstimates exact = exact_percolation(g, states, cfg.workers);
    report.exact_seconds = seconds_since(t0);

    double sum = 0.0, sum_sq = 0.0, time_sum = 0.0;
    long long count = 0;
    for (int t = 0; t < trials; ++t) {
        RunConfig trial_cfg = cfg;
        trial_cfg.seed = cfg.seed + static_cast<std::uint64_t>(t);
        t0 = Clock::now();
        CentralityEstimates est = estimate_percolation(g, states, trial_cfg);
        double secs = seconds_since(t0);

        TrialStats stats;
        stats.seed = trial_cfg.seed;
        stats.r = est.r;
        stats.vd_bound = est.vd_bound;
        stats.estimate_seconds = secs;
        stats.abs_error.resize(report.n);
        for (int v = 0; v < report.n; ++v) {
            double e = std::fabs(est.values[v] - exact.values[v]);
            stats.abs_error[v] = e;
            stats.avg_error += e;
            stats.max_error = std::max(stats.max_error, e);
            sum += e;
            sum_sq += e * e;
            ++count;
        }
        stats.avg_error /= report.n;
        report.max_error = std::max(report.max_error, stats.max_error);
        time_sum += secs;
        report.per_trial.push_back(std::move(stats));
    }
    report.r = report.per_trial.front().r;
    report.avg_error = sum / count;
    double variance = std::max(0.0, sum_sq / count - report.avg_error * report.avg_error);
    report.std_error = std::sqrt(variance);
    report.estimate_seconds = time_sum / trials;
    report.speedup = report.exact_seconds / report.estimate_seconds;
    return report;
}

void write_estimates_csv(std::ostream& out, const CentralityEstimates& est) {
    out << "# kind=" << kind_name(est.kind) << "\n";
    out << "# n=" << est.values.size() << "\n";
    if (est.kind == EstimateKind::estimated) {
        out << "# r=" << est.r << "\n";
        out << "# vd_bound=" << est.vd_bound << "\n";
        out << "# seed=" << est.seed << "\n";
    }
    out << "vertex,percolation\n";
    for (size_t v = 0; v < est.values.size(); ++v)
        out << v << "," << num(est.values[v]) << "\n";
}

void write_estimates_json(std::ostream& out, const CentralityEstimates& est) {
    nlohmann::json j;
    j["kind"] = kind_name(est.kind);
    j["n"] = est.values.size();
    if (est.kind == EstimateKind::estimated) {
        j["r"] = est.r;
        j["vd_bound"] = est.vd_bound;
        j["seed"] = est.seed;
    }
    j["values"] = est.values;
    out << j.dump(2) << "\n";
}

void write_compare_csv(std::ostream& out, const CompareReport& rep) {
    out << "# n=" << rep.n << "\n";
    out << "# epsilon=" << num(rep.epsilon) << "\n";
    out << "# delta=" << num(rep.delta) << "\n";
    out << "# trials=" << rep.trials << "\n";
    out << "# r=" << rep.r << "\n";
    out << "# exact_seconds=" << num(rep.exact_seconds) << "\n";
    out << "# estimate_seconds=" << num(rep.estimate_seconds) << "\n";
    out << "# speedup=" << num(rep.speedup) << "\n";
    out << "# avg_error=" << num(rep.avg_error) << "\n";
    out << "# std_error=" << num(rep.std_error) << "\n";
    out << "# max_error=" << num(rep.max_error) << "\n";
    out << "trial,vertex,abs_error\n";
    for (size_t t = 0; t < rep.per_trial.size(); ++t)
        for (size_t v = 0; v < rep.per_trial[t].abs_error.size(); ++v)
            out << t << "," << v << "," << num(rep.per_trial[t].abs_error[v]) << "\n";
}

void write_compare_json(std::ostream& out, const CompareReport& rep) {
    nlohmann::json j;
    j["n"] = rep.n;
    j["epsilon"] = rep.epsilon;
    j["delta"] = rep.delta;
    j["trials"] = rep.trials;
    j["r"] = rep.r;
    j["exact_seconds"] = rep.exact_seconds;
    j["estimate_seconds"] = rep.estimate_seconds;
    j["speedup"] = rep.speedup;
    j["avg_error"] = rep.avg_error;
    j["std_error"] = rep.std_error;
    j["max_error"] = rep.max_error;
    j["per_trial"] = nlohmann::json::array();
    for (const TrialStats& t : rep.per_trial) {
        nlohmann::json jt;
        jt["seed"] = t.seed;
        jt["r"] = t.r;
        jt["vd_bound"] = t.vd_bound;
        jt["estimate_seconds"] = t.estimate_seconds;
        jt["avg_error"] = t.avg_error;
        jt["max_error"] = t.max_error;
        jt["abs_error"] = t.abs_error;
        j["per_trial"].push_back(std::move(jt));
    }
    out << j.dump(2) << "\n";
}

}  // namespace perc

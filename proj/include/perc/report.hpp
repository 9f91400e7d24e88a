#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "perc/graph.hpp"
#include "perc/percolation.hpp"

namespace perc {

struct TrialStats {
    std::uint64_t seed = 0;
    long long r = 0;
    int vd_bound = 0;
    double estimate_seconds = 0.0;
    std::vector<double> abs_error;  // per vertex
    double avg_error = 0.0;
    double max_error = 0.0;
};

// Estimator-vs-exact comparison over several trials. Aggregate error
// statistics pool every per-vertex error of every trial; timings wrap the
// algorithm bodies only.
struct CompareReport {
    int n = 0;
    double epsilon = 0.0;
    double delta = 0.0;
    int trials = 0;
    long long r = 0;  // sample size of the first trial
    double exact_seconds = 0.0;
    double estimate_seconds = 0.0;  // mean over trials
    double speedup = 0.0;           // exact_seconds / estimate_seconds
    double avg_error = 0.0;
    double std_error = 0.0;
    double max_error = 0.0;
    std::vector<TrialStats> per_trial;
};

// Runs exact once and the estimator `trials` times with seeds cfg.seed + t.
CompareReport run_compare(const Graph& g, const PercolationStates& states,
                          const RunConfig& cfg, int trials);

// Writers emit 17 significant digits so values survive a parse round-trip.
void write_estimates_csv(std::ostream& out, const CentralityEstimates& est);
void write_estimates_json(std::ostream& out, const CentralityEstimates& est);
void write_compare_csv(std::ostream& out, const CompareReport& report);
void write_compare_json(std::ostream& out, const CompareReport& report);

}  // namespace perc

#include "perc/percolation.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

namespace perc {

DifferenceSums percolation_differences(const std::vector<double>& a) {
    const int n = static_cast<int>(a.size());
    if (n < 1) throw std::invalid_argument("percolation_differences: empty input");
    for (int i = 1; i < n; ++i)
        if (a[i] < a[i - 1])
            throw std::invalid_argument("percolation_differences: input not sorted");

    // prefix[k] = A[0] + ... + A[k-1]
    std::vector<double> prefix(n + 1, 0.0);
    for (int i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + a[i];

    // total = sum_{i<=j} (A[j] - A[i]); negative differences vanish on sorted input
    double total = 0.0;
    for (int i = 1; i < n; ++i) total += i * a[i] - prefix[i];
    total = std::max(total, 0.0);  // cancellation guard for near-constant input

    DifferenceSums out;
    out.total = total;
    out.exclusive.resize(n);
    const double whole = prefix[n];
    for (int k = 0; k < n; ++k) {
        double minus = total - a[k] * (2 * k - n) - whole + 2 * prefix[k];
        out.exclusive[k] = std::max(minus, 0.0);
    }
    return out;
}

DifferenceSums exclusive_sums_by_vertex(const PercolationStates& states) {
    const int n = static_cast<int>(states.x.size());
    if (n == 0) return {};
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return states.x[i] < states.x[j]; });
    std::vector<double> sorted(n);
    for (int i = 0; i < n; ++i) sorted[i] = states.x[order[i]];

    DifferenceSums sums = percolation_differences(sorted);
    DifferenceSums out;
    out.total = sums.total;
    out.exclusive.resize(n);
    for (int i = 0; i < n; ++i) out.exclusive[order[i]] = sums.exclusive[i];
    return out;
}

long long sample_size(const RunConfig& cfg, int vd_bound) {
    check_config(cfg);
    if (vd_bound < 1) throw std::invalid_argument("sample_size: vd_bound must be >= 1");
    // floor(lg(vd - 2)) + 1 == bit_width(vd - 2); clamped to 1 for vd <= 3
    int pd_term = 1;
    if (vd_bound > 3)
        pd_term = std::bit_width(static_cast<unsigned>(vd_bound - 2));
    double raw = cfg.c / (cfg.epsilon * cfg.epsilon) * (pd_term + std::log(1.0 / cfg.delta));
    return std::max(1LL, static_cast<long long>(std::ceil(raw)));
}

}  // namespace perc

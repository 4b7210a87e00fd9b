#pragma once

#include <random>
#include <vector>

#include <koon/distribution.hpp>
#include <koon/order_statistics.hpp>
#include <koon/system.hpp>

namespace testutil {

// Direct tail sum S = sum_{t > t0} sf(t), carried until sf drops below 1e-22,
// so S underestimates the true tail by well under any tolerance in use.
// Compensated summation keeps the rounding error near one ulp even when the
// sum runs to tens of thousands of terms.
inline double direct_tail(const koon::DiscreteLifetime& d, long t0) {
    double total = 0.0, carry = 0.0;
    for (long t = std::max(t0 + 1, 0L);; ++t) {
        const double s = d.sf(t) - carry;
        const double next = total + s;
        carry = (next - total) - s;
        total = next;
        if (d.sf(t) < 1e-22) break;
        if (t > t0 + 4000000) break;
    }
    return total;
}

// Reference for category_sum: walk every assignment of the n components to
// the three categories and add up the products whose counts match.
inline double naive_category_sum(const koon::CategoryWeights& w, long count_below,
                                 long count_exact) {
    const long n = w.size();
    std::vector<int> cat(n, 0);
    double total = 0.0;
    for (;;) {
        long nb = 0, ne = 0;
        double prod = 1.0;
        for (long j = 0; j < n; ++j) {
            if (cat[j] == 0) {
                prod *= w.below[j];
                ++nb;
            } else if (cat[j] == 1) {
                prod *= w.exact[j];
                ++ne;
            } else {
                prod *= w.above[j];
            }
        }
        if (nb == count_below && ne == count_exact) total += prod;
        long j = 0;
        for (; j < n; ++j) {
            if (++cat[j] < 3) break;
            cat[j] = 0;
        }
        if (j == n) break;
    }
    return total;
}

// Deterministic pseudo-random finite system generator for oracle comparisons.
struct SystemGen {
    std::mt19937 rng;

    explicit SystemGen(unsigned seed) : rng(seed) {}

    double unit() { return std::uniform_real_distribution<double>(0.02, 1.0)(rng); }

    koon::DiscreteLifetime finite_dist(long max_support) {
        const long size = std::uniform_int_distribution<long>(2, max_support)(rng);
        std::vector<double> w(size);
        for (auto& x : w) x = unit();
        return koon::DiscreteLifetime::finite_pmf(std::move(w));
    }

    koon::SystemSpec finite_system(long max_n, long max_support) {
        koon::SystemSpec sys;
        sys.n = std::uniform_int_distribution<long>(1, max_n)(rng);
        sys.k = std::uniform_int_distribution<long>(1, sys.n)(rng);
        for (long j = 0; j < sys.n; ++j) sys.active.push_back(finite_dist(max_support));
        sys.standby = finite_dist(max_support);
        return sys;
    }
};

}  // namespace testutil

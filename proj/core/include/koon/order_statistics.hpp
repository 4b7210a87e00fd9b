#pragma once

#include <vector>

#include "koon/system.hpp"

namespace koon {

// One factor triple per component: the probability weights of landing in the
// "below" / "exactly" / "above" event categories. The triples need not sum
// to 1; anything between the three categories simply never contributes.
struct CategoryWeights {
    std::vector<double> below;
    std::vector<double> exact;
    std::vector<double> above;

    long size() const { return static_cast<long>(below.size()); }
};

// Coefficient of x^count_below y^count_exact in prod_j (a_j x + b_j y + c_j):
// the total probability over all ways to assign exactly count_below
// components to their "below" event, count_exact to "exactly", and the rest
// to "above". O(n * count_below * count_exact) table recurrence.
double category_sum(const CategoryWeights& weights, long count_below, long count_exact);

// P(X_{n-k+1:n} = u, X_{n-k+2:n} > t, Z > t-u): the probability that the
// system's activating failure happens at cycle u, no further active failure
// has happened by t, and the standby (started at u) survives past t.
double h_kn(const SystemSpec& sys, long t, long u);

// P(X_{n-k+1:n} > t) for independent heterogeneous components: at most n-k of
// them have failed by t. Failure-count DP over the component cdfs.
double os_sf(const std::vector<DiscreteLifetime>& components, long k, long t);

// E X_{n-k+1:n} truncated so the discarded tail is certifiably <= d;
// the returned value V satisfies V <= E X_{n-k+1:n} <= V + d.
double os_mean(const std::vector<DiscreteLifetime>& components, long k, double d);

}  // namespace koon

#pragma once

#include <string>
#include <vector>

#include "koon/system.hpp"

namespace koon {

// A truncation certificate: summing the reliability curve through t0 misses
// at most certified_error of the true expectation, and certified_error <= d.
struct AccuracyBudget {
    double d = 0.0;
    long t0 = 0;
    std::string bound_used;
    double certified_error = 0.0;
};

// P(T > t) for the standby-augmented system. t = -1 gives 1.
double reliability_T(const SystemSpec& sys, long t);

// P(T > t) for t = 0..t_max in one pass; equal to reliability_T pointwise but
// reuses survival grids across t, which matters for long horizons.
std::vector<double> reliability_curve(const SystemSpec& sys, long t_max);

// P(T = t) = P(T > t-1) - P(T > t), t >= 0.
double pmf_T(const SystemSpec& sys, long t);

// Picks the summation cutoff t0 so that the discarded reliability tail
// sum_{t > t0} P(T > t) is provably at most d. The rule depends on the shape
// of the active components: a closed form when they are all geometric, the
// dominating-distribution tail bound for all-negative-binomial and
// all-discrete-Weibull sets, a (k-1)-th root envelope criterion for mixed
// sets, and a parallel-system rule for k = 1. The chosen rule is named in
// bound_used and the floating-point value of the bound is re-checked at the
// returned t0.
AccuracyBudget choose_t0(const SystemSpec& sys, double d);

struct ExpectedLifetime {
    double value = 0.0;
    AccuracyBudget budget;
};

// E T approximated from below: value <= E T <= value + d.
ExpectedLifetime expected_T(const SystemSpec& sys, double d);

// True when the sufficient condition for E T < infinity holds: summable
// component survival tails, plus a finite standby mean when k = 1.
bool finiteness_check(const SystemSpec& sys);

namespace detail {
// The decision rule behind finiteness_check, separated so the k = 1
// infinite-standby-mean branch stays reachable in tests.
bool finite_mean_sufficient(long k, bool active_tails_summable, bool standby_mean_finite);
}

}  // namespace koon

#pragma once

#include <optional>

#include "koon/distribution.hpp"
#include "koon/system.hpp"

namespace koon {

enum class OrderRelation { St, Hr };

// Outcome of a truncated order check. "holds" means the defining inequality
// was verified at every t up to horizon and at most residual_mass of survival
// probability lies beyond it; the check is silent about that remainder.
struct OrderVerdict {
    OrderRelation relation = OrderRelation::St;
    bool holds = false;
    long horizon = -1;
    double residual_mass = 0.0;
    std::optional<long> counterexample;
};

// a <=_st b: sf_a(t) <= sf_b(t) for every t. Checked pointwise up to a
// horizon where both survivals fall below eps (exact for finite supports).
OrderVerdict st_leq(const DiscreteLifetime& a, const DiscreteLifetime& b, double eps);

// a <=_hr b: sf_b(t)/sf_a(t) non-decreasing in t. Verified through the
// cross-product form sf_b(t+1) sf_a(t) >= sf_b(t) sf_a(t+1), which needs no
// division and absorbs the ratio-past-zero convention.
OrderVerdict hr_leq(const DiscreteLifetime& a, const DiscreteLifetime& b, double eps);

enum class IfrClass { Ifr, Dfr, Both, Neither, Unknown };

struct IfrVerdict {
    IfrClass cls = IfrClass::Unknown;
    // Last time index inspected by a numeric hazard check; -1 when the class
    // came from a parametric rule.
    long horizon = -1;
};

// Failure-rate classification. Parametric families resolve exactly;
// finite pmfs get an exact hazard scan (gaps in the support make the
// classification undefined and yield Neither); residual-transformed
// distributions are scanned numerically and stay Unknown unless a
// finite counterexample to both directions settles Neither.
IfrVerdict ifr_class(const DiscreteLifetime& dist);

// Pointwise comparison of the two systems' reliability curves, i.e. an
// empirical T_a <=_st T_b check up to a shared horizon.
OrderVerdict system_st_compare(const SystemSpec& a, const SystemSpec& b, double eps);

}  // namespace koon

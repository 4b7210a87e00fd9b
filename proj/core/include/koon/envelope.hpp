#pragma once

#include <string>
#include <vector>

#include "koon/distribution.hpp"

namespace koon {

// Certified machinery for the tail sum S(t0) = sum_{t > t0} max_i sf_i(t) over a
// set of component lifetimes. When all components share a parametric family the
// bound comes from a single pointwise-dominating member (max r / min p, max q /
// min beta); all-finite sets get the exact tail of the pointwise max; anything
// else falls back to the sum of per-component tail bounds.
class SurvivalEnvelope {
public:
    static SurvivalEnvelope for_components(const std::vector<DiscreteLifetime>& components);

    // Upper bound on S(t0), non-increasing in t0 >= -1.
    double bound(long t0) const;
    // Smallest t0 >= -1 with bound(t0) <= budget (budget > 0).
    long smallest_t0(double budget) const;
    // Short identifier of the rule in effect ("geometric", "negbinomial",
    // "dweibull-exp", "dweibull-gamma", "finite", "sum").
    const std::string& rule() const { return rule_; }

private:
    SurvivalEnvelope() = default;
    std::vector<DiscreteLifetime> parts_;  // single dominating member, or all components
    std::vector<double> exact_tail_;       // all-finite case: tail sums of pointwise max
    std::string rule_;
};

}  // namespace koon

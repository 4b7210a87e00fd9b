#include "koon/envelope.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "koon/errors.hpp"

namespace koon {

SurvivalEnvelope SurvivalEnvelope::for_components(
    const std::vector<DiscreteLifetime>& components) {
    if (components.empty()) throw InvalidArgs("SurvivalEnvelope: no components");

    SurvivalEnvelope env;
    const Family fam = components.front().family();
    const bool same_family =
        std::all_of(components.begin(), components.end(),
                    [&](const DiscreteLifetime& d) { return d.family() == fam; });

    if (same_family && fam == Family::Geometric) {
        double pmin = 1.0;
        for (const auto& d : components) pmin = std::min(pmin, d.geom_p());
        env.parts_.push_back(DiscreteLifetime::geometric(pmin));
        env.rule_ = "geometric";
        return env;
    }
    if (same_family && fam == Family::NegBinomial) {
        long rmax = 1;
        double pmin = 1.0;
        for (const auto& d : components) {
            rmax = std::max(rmax, d.nb_r());
            pmin = std::min(pmin, d.nb_p());
        }
        env.parts_.push_back(DiscreteLifetime::neg_binomial(rmax, pmin));
        env.rule_ = "negbinomial";
        return env;
    }
    if (same_family && fam == Family::DiscreteWeibull) {
        double qmax = 0.0, bmin = std::numeric_limits<double>::infinity();
        for (const auto& d : components) {
            qmax = std::max(qmax, d.dw_q());
            bmin = std::min(bmin, d.dw_beta());
        }
        env.parts_.push_back(DiscreteLifetime::discrete_weibull(qmax, bmin));
        env.rule_ = bmin >= 1.0 ? "dweibull-exp" : "dweibull-gamma";
        return env;
    }
    if (same_family && fam == Family::FinitePmf) {
        long nmax = 0;
        for (const auto& d : components) nmax = std::max(nmax, d.support_max());
        // Exact tail sums of the pointwise max of the survival functions.
        env.exact_tail_.assign(std::size_t(nmax) + 1, 0.0);
        double acc = 0.0;
        for (long t = nmax - 1; t >= 0; --t) {
            double m = 0.0;
            for (const auto& d : components) m = std::max(m, d.sf(t));
            acc += m;
            env.exact_tail_[t] = acc;
        }
        env.rule_ = "finite";
        return env;
    }

    env.parts_ = components;
    env.rule_ = "sum";
    return env;
}

double SurvivalEnvelope::bound(long t0) const {
    if (t0 < -1) throw InvalidArgs("SurvivalEnvelope::bound: t0 must be >= -1");
    if (rule_ == "finite") {
        const long n = long(exact_tail_.size());
        if (t0 + 1 >= n) return 0.0;
        return exact_tail_[t0 + 1];
    }
    double total = 0.0;
    for (const auto& d : parts_) total += d.tail_bound(t0);
    return total;
}

long SurvivalEnvelope::smallest_t0(double budget) const {
    if (!(budget > 0.0)) throw DomainError("SurvivalEnvelope::smallest_t0: budget must be > 0");
    if (parts_.size() == 1) return parts_.front().tail_bound_inverse(budget);
    if (bound(-1) <= budget) return -1;
    long hi = 0;
    while (bound(hi) > budget) hi = hi < 1 ? hi + 1 : 2 * hi;
    long lo = -1;
    while (hi - lo > 1) {
        const long mid = lo + (hi - lo) / 2;
        (bound(mid) > budget ? lo : hi) = mid;
    }
    return hi;
}

}  // namespace koon

#include "koon/lifetime.hpp"

#include <algorithm>
#include <cmath>

#include "koon/envelope.hpp"
#include "koon/errors.hpp"
#include "koon/order_statistics.hpp"
#include "koon/special_functions.hpp"
#include "sweep.hpp"

namespace koon {

namespace {

// sum_{v=0}^{vmax} C(n, v)
double binom_prefix(long n, long vmax) {
    double s = 0.0;
    for (long v = 0; v <= vmax; ++v) s += choose(n, v);
    return s;
}

bool all_of_family(const std::vector<DiscreteLifetime>& cs, Family f) {
    for (const auto& c : cs)
        if (c.family() != f) return false;
    return true;
}

}  // namespace

double reliability_T(const SystemSpec& sys, long t) {
    sys.validate();
    if (t < 0) return 1.0;
    double total = os_sf(sys.active, sys.k, t);
    for (long u = 0; u <= t; ++u) total += h_kn(sys, t, u);
    return std::clamp(total, 0.0, 1.0);
}

std::vector<double> reliability_curve(const SystemSpec& sys, long t_max) {
    if (t_max < 0) throw InvalidArgs("reliability_curve: t_max must be >= 0");
    detail::SystemSweep sweep(sys);
    std::vector<double> out(t_max + 1);
    for (long t = 0; t <= t_max; ++t) out[t] = sweep.reliability(t);
    return out;
}

double pmf_T(const SystemSpec& sys, long t) {
    if (t < 0) throw InvalidArgs("pmf_T: t must be >= 0");
    detail::SystemSweep sweep(sys);
    return std::max(sweep.reliability(t - 1) - sweep.reliability(t), 0.0);
}

AccuracyBudget choose_t0(const SystemSpec& sys, double d) {
    sys.validate();
    if (!(d > 0.0)) throw DomainError("choose_t0: error budget must be positive");
    const long n = sys.n, k = sys.k;
    SurvivalEnvelope env = SurvivalEnvelope::for_components(sys.active);

    if (k == 1) {
        // P(T > t) <= P(X_{n:n} > t) + P(Z + X_{n:n} > t) has no standby-free
        // tail handle; instead E T = E Z + E X_{n:n} is computed term by term,
        // so the cutoff only has to control the order-statistic tail, bounded
        // by (2^n - 1) * max_i sf_i(t).
        const double parts = std::pow(2.0, double(n)) - 1.0;
        long t0 = std::max(env.smallest_t0(d / parts), 0L);
        while (parts * env.bound(t0) > d) ++t0;
        return {d, t0, "parallel-" + env.rule(), parts * env.bound(t0)};
    }

    // P(T > t) <= sum_{v=0}^{n-k+1} C(n,v) * max_i sf_i(t): the failure
    // pattern count times the largest single survival.
    const double csum = binom_prefix(n, n - k + 1);
    const double csum_os = binom_prefix(n, n - k);

    if (all_of_family(sys.active, Family::Geometric)) {
        // Sharper two-piece certificate. The standby-phase tail telescopes to
        // a closed form with only C(n, k-1) patterns; the remaining
        // order-statistic tail carries at least k surviving components and is
        // k-th-power small.
        double pmin = 1.0;
        for (const auto& c : sys.active) pmin = std::min(pmin, c.geom_p());
        const double base = 1.0 - pmin;
        const double denom = 1.0 - std::pow(base, double(k - 1));
        const double cnk1 = choose(n, k - 1);
        auto total_bound = [&](long t0) {
            const double tail_h =
                cnk1 * std::pow(base, double((t0 + 2) * (k - 1))) / denom;
            const double tail_os = csum_os * std::pow(env.bound(t0), double(k));
            return tail_h + tail_os;
        };
        const double rhs = std::pow(d / cnk1 * denom, 1.0 / double(k - 1));
        long t0 = 0;
        if (rhs < 1.0)
            t0 = std::max(0L, static_cast<long>(std::ceil(
                                  std::log(rhs) / std::log(base) - 2.0)));
        while (total_bound(t0) > d) ++t0;
        return {d, t0, "geometric-standby", total_bound(t0)};
    }

    const bool all_nb = all_of_family(sys.active, Family::NegBinomial);
    const bool all_dw = all_of_family(sys.active, Family::DiscreteWeibull);
    if (all_nb || all_dw) {
        // Dominating-member tail bound applied to P(T > t) directly.
        long t0 = std::max(env.smallest_t0(d / csum), 0L);
        while (csum * env.bound(t0) > d) ++t0;
        return {d, t0, env.rule() + "-tail", csum * env.bound(t0)};
    }

    // Mixed families: with independent components every tail pattern carries
    // at least k-1 survival factors, so the envelope tail sum only needs to
    // reach the (k-1)-th root of the per-pattern budget.
    const double target = std::pow(d / csum, 1.0 / double(k - 1));
    long t0 = std::max(env.smallest_t0(target), 0L);
    while (csum * std::pow(env.bound(t0), double(k - 1)) > d) ++t0;
    return {d, t0, "envelope-root-" + env.rule(),
            csum * std::pow(env.bound(t0), double(k - 1))};
}

ExpectedLifetime expected_T(const SystemSpec& sys, double d) {
    sys.validate();
    if (!(d > 0.0)) throw DomainError("expected_T: error budget must be positive");

    if (sys.k == 1) {
        // E T = E Z + E X_{n:n}. The standby mean is exact for families with
        // closed forms; otherwise it gets half the budget.
        const Family zf = sys.standby.family();
        const bool z_exact = zf == Family::Geometric || zf == Family::NegBinomial ||
                             zf == Family::FinitePmf;
        const double z_budget = z_exact ? 0.0 : d / 2.0;
        const double os_budget = d - z_budget;

        SurvivalEnvelope env = SurvivalEnvelope::for_components(sys.active);
        const double parts = std::pow(2.0, double(sys.n)) - 1.0;
        long t0 = std::max(env.smallest_t0(os_budget / parts), 0L);
        while (parts * env.bound(t0) > os_budget) ++t0;

        double value = sys.standby.mean(z_exact ? 1e-13 : z_budget);
        detail::SystemSweep sweep(sys);
        for (long t = 0; t <= t0; ++t) value += sweep.os_survival(t);

        AccuracyBudget b{d, t0, "parallel-" + env.rule(),
                         parts * env.bound(t0) + z_budget};
        return {value, b};
    }

    AccuracyBudget b = choose_t0(sys, d);
    detail::SystemSweep sweep(sys);
    double value = 0.0;
    for (long t = 0; t <= b.t0; ++t) value += sweep.reliability(t);
    return {value, b};
}

namespace detail {
bool finite_mean_sufficient(long k, bool active_tails_summable, bool standby_mean_finite) {
    if (k >= 2) return active_tails_summable;
    return active_tails_summable && standby_mean_finite;
}
}  // namespace detail

bool finiteness_check(const SystemSpec& sys) {
    sys.validate();
    auto summable = [](const DiscreteLifetime& c) {
        try {
            c.tail_bound(0);
            return true;
        } catch (const UnboundedTail&) {
            return false;
        }
    };
    bool actives_ok = true;
    for (const auto& c : sys.active) actives_ok = actives_ok && summable(c);
    return detail::finite_mean_sufficient(sys.k, actives_ok, summable(sys.standby));
}

}  // namespace koon

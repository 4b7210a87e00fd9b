#include "koon/residual.hpp"

#include <algorithm>
#include <cmath>

#include "koon/envelope.hpp"
#include "koon/errors.hpp"
#include "koon/order_statistics.hpp"
#include "sweep.hpp"

namespace koon {

namespace {

// Conditioning probabilities at or below this are treated as gone: dividing
// by them would amplify everything else past any certified tolerance.
constexpr double kMinConditioning = 1e-300;

double all_alive_prob(const SystemSpec& sys, long t) {
    double p = 1.0;
    for (const auto& c : sys.active) p *= c.sf(t);
    return p;
}

// k = 1 cutoff rule: the reliability tail of X_{n:n} + Z splits across the
// two summands, so it suffices to push both half-index tails below a quarter
// of the budget each. Returns the certificate over sum_{s>t0} P(T>s).
AccuracyBudget parallel_mrl_t0(const SystemSpec& sys, double budget) {
    SurvivalEnvelope env = SurvivalEnvelope::for_components(sys.active);
    const double parts = std::pow(2.0, double(sys.n)) - 1.0;

    auto realized = [&](long m) {
        return 2.0 * (sys.standby.tail_bound(m - 1) + parts * env.bound(m - 1));
    };
    long m = std::max({sys.standby.tail_bound_inverse(budget / 4.0) + 1,
                       env.smallest_t0(budget / (4.0 * parts)) + 1, 0L});
    while (realized(m) > budget) ++m;

    const long t0 = std::max(2 * m - 1, 0L);
    return {budget, t0, "parallel-split-" + env.rule(), realized(m)};
}

MrlResult usual_mrl_on(detail::SystemSweep& sweep, long t, double d) {
    const SystemSpec& sys = sweep.spec();
    const double r = sweep.reliability(t);
    if (r <= kMinConditioning)
        throw ConditioningOnNullEvent("usual_mrl: P(T>t) vanishes at the given t");

    AccuracyBudget b = sys.k >= 2 ? choose_t0(sys, d * r) : parallel_mrl_t0(sys, d * r);
    double total = 0.0;
    for (long s = t; s <= b.t0; ++s) total += sweep.reliability(s);

    b.d = d;
    b.certified_error /= r;
    return {total / r, b};
}

MrlResult working_mrl_on(detail::SystemSweep& sweep, long t, double d) {
    const SystemSpec& sys = sweep.spec();
    const double p = sweep.os_survival(t);
    if (p <= kMinConditioning)
        throw ConditioningOnNullEvent("working_mrl: P(X_{n-k+1:n}>t) vanishes");

    AccuracyBudget b = sys.k >= 2 ? choose_t0(sys, d * p) : parallel_mrl_t0(sys, d * p);
    double total = 0.0;
    for (long s = t; s <= b.t0; ++s)
        total += sweep.standby_sum(s, t + 1) + sweep.os_survival(s);

    b.d = d;
    b.certified_error /= p;
    return {total / p, b};
}

}  // namespace

double usual_residual_sf(const SystemSpec& sys, long t, long s) {
    if (s < 0) throw InvalidArgs("usual_residual_sf: s must be >= 0");
    detail::SystemSweep sweep(sys);
    const double r = sweep.reliability(t);
    if (r <= kMinConditioning)
        throw ConditioningOnNullEvent("usual_residual_sf: P(T>t) vanishes");
    return std::clamp(sweep.reliability(t + s) / r, 0.0, 1.0);
}

MrlResult usual_mrl(const SystemSpec& sys, long t, double d) {
    if (t < 0) throw InvalidArgs("usual_mrl: t must be >= 0");
    if (!(d > 0.0)) throw DomainError("usual_mrl: error budget must be positive");
    detail::SystemSweep sweep(sys);
    return usual_mrl_on(sweep, t, d);
}

SystemSpec residual_system(const SystemSpec& sys, long t) {
    sys.validate();
    SystemSpec out;
    out.n = sys.n;
    out.k = sys.k;
    out.active.reserve(sys.n);
    for (const auto& c : sys.active) out.active.push_back(c.residual(t));
    out.standby = sys.standby;
    return out;
}

double syslevel_residual_sf(const SystemSpec& sys, long t, long s) {
    sys.validate();
    if (s < 0) throw InvalidArgs("syslevel_residual_sf: s must be >= 0");
    if (all_alive_prob(sys, t) <= kMinConditioning)
        throw ConditioningOnNullEvent("syslevel_residual_sf: P(X_{1:n}>t) vanishes");
    return reliability_T(residual_system(sys, t), s);
}

MrlResult syslevel_mrl(const SystemSpec& sys, long t, double d) {
    sys.validate();
    if (t < 0) throw InvalidArgs("syslevel_mrl: t must be >= 0");
    if (!(d > 0.0)) throw DomainError("syslevel_mrl: error budget must be positive");
    if (all_alive_prob(sys, t) <= kMinConditioning)
        throw ConditioningOnNullEvent("syslevel_mrl: P(X_{1:n}>t) vanishes");
    ExpectedLifetime e = expected_T(residual_system(sys, t), d);
    return {e.value, e.budget};
}

double working_residual_sf(const SystemSpec& sys, long t, long s) {
    if (s < 0) throw InvalidArgs("working_residual_sf: s must be >= 0");
    detail::SystemSweep sweep(sys);
    const double p = sweep.os_survival(t);
    if (p <= kMinConditioning)
        throw ConditioningOnNullEvent("working_residual_sf: P(X_{n-k+1:n}>t) vanishes");
    const double num = sweep.standby_sum(t + s, t + 1) + sweep.os_survival(t + s);
    return std::clamp(num / p, 0.0, 1.0);
}

MrlResult working_mrl(const SystemSpec& sys, long t, double d) {
    if (t < 0) throw InvalidArgs("working_mrl: t must be >= 0");
    if (!(d > 0.0)) throw DomainError("working_mrl: error budget must be positive");
    detail::SystemSweep sweep(sys);
    return working_mrl_on(sweep, t, d);
}

Curve mrl_curve(const SystemSpec& sys, MrlKind kind, long t_from, long t_to, double d) {
    sys.validate();
    if (t_from < 0 || t_to < t_from) throw InvalidArgs("mrl_curve: bad t range");
    if (!(d > 0.0)) throw DomainError("mrl_curve: error budget must be positive");

    Curve curve;
    curve.kind = kind;
    curve.points.reserve(t_to - t_from + 1);

    detail::SystemSweep sweep(sys);  // shared by the kinds that allow it
    for (long t = t_from; t <= t_to; ++t) {
        CurvePoint pt;
        pt.t = t;
        try {
            MrlResult r;
            switch (kind) {
                case MrlKind::Usual: r = usual_mrl_on(sweep, t, d); break;
                case MrlKind::Working: r = working_mrl_on(sweep, t, d); break;
                case MrlKind::SystemLevel: r = syslevel_mrl(sys, t, d); break;
            }
            pt.value = r.value;
            pt.certified_error = r.budget.certified_error;
        } catch (const ConditioningOnNullEvent&) {
            pt.gap = true;
        }
        curve.points.push_back(pt);
    }
    return curve;
}

}  // namespace koon

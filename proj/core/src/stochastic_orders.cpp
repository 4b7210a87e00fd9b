#include "koon/stochastic_orders.hpp"

#include <algorithm>
#include <cmath>

#include "koon/errors.hpp"
#include "sweep.hpp"

namespace koon {

namespace {

constexpr double kStSlack = 1e-12;
constexpr double kHrSlack = 1e-15;
constexpr double kHazardSlack = 1e-10;

long scan_horizon(const DiscreteLifetime& a, const DiscreteLifetime& b, double eps) {
    const long ha = a.quantile_sf(eps);
    const long hb = b.quantile_sf(eps);
    return std::max({ha, hb, 0L});
}

double sf_or_one(const DiscreteLifetime& d, long t) {
    return t < 0 ? 1.0 : d.sf(t);
}

}  // namespace

OrderVerdict st_leq(const DiscreteLifetime& a, const DiscreteLifetime& b, double eps) {
    OrderVerdict v;
    v.relation = OrderRelation::St;
    v.horizon = scan_horizon(a, b, eps);
    v.holds = true;
    for (long t = 0; t <= v.horizon; ++t) {
        if (a.sf(t) > b.sf(t) + kStSlack) {
            v.holds = false;
            v.counterexample = t;
            break;
        }
    }
    v.residual_mass = std::max(a.sf(v.horizon), b.sf(v.horizon));
    return v;
}

OrderVerdict hr_leq(const DiscreteLifetime& a, const DiscreteLifetime& b, double eps) {
    OrderVerdict v;
    v.relation = OrderRelation::Hr;
    v.horizon = scan_horizon(a, b, eps);
    v.holds = true;
    for (long t = -1; t < v.horizon; ++t) {
        const double lhs = sf_or_one(b, t + 1) * sf_or_one(a, t);
        const double rhs = sf_or_one(b, t) * sf_or_one(a, t + 1);
        if (lhs < rhs - kHrSlack) {
            v.holds = false;
            v.counterexample = t + 1;
            break;
        }
    }
    v.residual_mass = std::max(a.sf(v.horizon), b.sf(v.horizon));
    return v;
}

IfrVerdict ifr_class(const DiscreteLifetime& dist) {
    switch (dist.family()) {
        case Family::Geometric:
            return {IfrClass::Both, -1};
        case Family::NegBinomial:
            return {dist.nb_r() == 1 ? IfrClass::Both : IfrClass::Ifr, -1};
        case Family::DiscreteWeibull: {
            const double beta = dist.dw_beta();
            if (beta > 1.0) return {IfrClass::Ifr, -1};
            if (beta < 1.0) return {IfrClass::Dfr, -1};
            return {IfrClass::Both, -1};
        }
        case Family::FinitePmf: {
            const long nmax = dist.support_max();
            for (long t = 0; t <= nmax; ++t) {
                if (dist.pmf(t) == 0.0 && dist.sf(t) > 0.0) return {IfrClass::Neither, nmax};
            }
            bool inc_ok = true, dec_ok = true;
            double prev = dist.pmf(0);
            for (long t = 1; t <= nmax; ++t) {
                const double denom = dist.sf(t - 1);
                if (denom <= 0.0) break;
                const double cur = dist.pmf(t) / denom;
                if (cur < prev - kHazardSlack) inc_ok = false;
                if (cur > prev + kHazardSlack) dec_ok = false;
                prev = cur;
            }
            if (inc_ok && dec_ok) return {IfrClass::Both, nmax};
            if (inc_ok) return {IfrClass::Ifr, nmax};
            if (dec_ok) return {IfrClass::Dfr, nmax};
            return {IfrClass::Neither, nmax};
        }
        case Family::Residual: {
            const long horizon = std::max(dist.quantile_sf(1e-12), 1L);
            bool rose = false, fell = false;
            double prev = dist.pmf(0);
            for (long t = 1; t <= horizon; ++t) {
                const double denom = dist.sf(t - 1);
                if (denom <= 1e-280) break;
                const double cur = dist.pmf(t) / denom;
                if (cur > prev + kHazardSlack) rose = true;
                if (cur < prev - kHazardSlack) fell = true;
                prev = cur;
            }
            if (rose && fell) return {IfrClass::Neither, horizon};
            return {IfrClass::Unknown, horizon};
        }
    }
    return {IfrClass::Unknown, -1};
}

OrderVerdict system_st_compare(const SystemSpec& a, const SystemSpec& b, double eps) {
    a.validate();
    b.validate();
    if (a.n != b.n || a.k != b.k)
        throw DimensionMismatch("system_st_compare requires matching n and k");

    detail::SystemSweep sa(a), sb(b);
    constexpr long kCap = 5000;

    OrderVerdict v;
    v.relation = OrderRelation::St;
    v.holds = true;
    long t = 0;
    for (;; ++t) {
        const double ra = sa.reliability(t);
        const double rb = sb.reliability(t);
        if (v.holds && ra > rb + kStSlack) {
            v.holds = false;
            v.counterexample = t;
        }
        if ((ra <= eps && rb <= eps) || t == kCap) break;
    }
    v.horizon = t;
    v.residual_mass = std::max(sa.reliability(t), sb.reliability(t));
    return v;
}

}  // namespace koon

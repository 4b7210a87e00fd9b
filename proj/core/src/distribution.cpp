#include "koon/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "koon/errors.hpp"
#include "koon/special_functions.hpp"

namespace koon {

namespace {

void check_prob_open(double p, const char* what) {
    if (!std::isfinite(p) || p <= 0.0 || p >= 1.0)
        throw DomainError(std::string(what) + ": probability must lie in (0, 1)");
}

double geometric_sf(double p, long t) {
    if (t < 0) return 1.0;
    return std::pow(1.0 - p, double(t) + 1.0);
}

// Exact finite-sum survival of NB(r, p): sum_{s=0}^{r-1} C(r+t, s) p^s (1-p)^(r+t-s).
// Terms are accumulated from logs so deep-tail evaluations cannot underflow midway.
double nb_sf(long r, double p, long t) {
    if (t < 0) return 1.0;
    const double lp = std::log(p);
    const double lq = std::log1p(-p);
    double total = 0.0;
    for (long s = 0; s < r; ++s) {
        const double lt = log_choose(r + t, s) + double(s) * lp + double(r + t - s) * lq;
        total += (lt < -745.0) ? 0.0 : std::exp(lt);
    }
    return std::min(total, 1.0);
}

double nb_pmf(long r, double p, long t) {
    if (t < 0) return 0.0;
    const double lt = log_choose(r + t - 1, t) + double(t) * std::log1p(-p) +
                      double(r) * std::log(p);
    return (lt < -745.0) ? 0.0 : std::exp(lt);
}

double dw_sf(double q, double beta, long t) {
    if (t < 0) return 1.0;
    return std::exp(std::pow(double(t) + 1.0, beta) * std::log(q));
}

}  // namespace

bool ResidualParams::operator==(const ResidualParams& o) const {
    return shift == o.shift && *base == *o.base;
}

DiscreteLifetime DiscreteLifetime::geometric(double p) {
    check_prob_open(p, "geometric");
    return DiscreteLifetime(Params{GeometricParams{p}});
}

DiscreteLifetime DiscreteLifetime::neg_binomial(long r, double p) {
    if (r < 1) throw DomainError("neg_binomial: r must be a positive integer");
    check_prob_open(p, "neg_binomial");
    return DiscreteLifetime(Params{NegBinomialParams{r, p}});
}

DiscreteLifetime DiscreteLifetime::discrete_weibull(double q, double beta) {
    check_prob_open(q, "discrete_weibull");
    if (!std::isfinite(beta) || beta <= 0.0)
        throw DomainError("discrete_weibull: beta must be positive");
    return DiscreteLifetime(Params{DiscreteWeibullParams{q, beta}});
}

DiscreteLifetime DiscreteLifetime::finite_pmf(std::vector<double> weights) {
    for (double w : weights) {
        if (!std::isfinite(w) || w < 0.0)
            throw DomainError("finite_pmf: weights must be finite and nonnegative");
    }
    while (!weights.empty() && weights.back() == 0.0) weights.pop_back();
    double total = 0.0;
    for (double w : weights) total += w;
    if (!(total >= 1e-12)) throw DomainError("finite_pmf: weight sum below 1e-12");

    FinitePmfParams fp;
    fp.pmf.resize(weights.size());
    for (std::size_t i = 0; i < weights.size(); ++i) fp.pmf[i] = weights[i] / total;

    const std::size_t n = fp.pmf.size();
    fp.sf.assign(n, 0.0);
    for (std::size_t i = n - 1; i-- > 0;) fp.sf[i] = fp.sf[i + 1] + fp.pmf[i + 1];
    fp.sf_tail.assign(n, 0.0);
    fp.sf_tail[n - 1] = fp.sf[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) fp.sf_tail[i] = fp.sf[i] + fp.sf_tail[i + 1];
    return DiscreteLifetime(Params{std::move(fp)});
}

Family DiscreteLifetime::family() const {
    switch (params_.index()) {
        case 0: return Family::Geometric;
        case 1: return Family::NegBinomial;
        case 2: return Family::DiscreteWeibull;
        case 3: return Family::FinitePmf;
        default: return Family::Residual;
    }
}

double DiscreteLifetime::sf(long t) const {
    if (t < 0) return 1.0;
    if (auto* g = std::get_if<GeometricParams>(&params_)) return geometric_sf(g->p, t);
    if (auto* nb = std::get_if<NegBinomialParams>(&params_)) return nb_sf(nb->r, nb->p, t);
    if (auto* dw = std::get_if<DiscreteWeibullParams>(&params_)) return dw_sf(dw->q, dw->beta, t);
    if (auto* fp = std::get_if<FinitePmfParams>(&params_)) {
        return std::size_t(t) < fp->sf.size() ? fp->sf[t] : 0.0;
    }
    const auto& res = std::get<ResidualParams>(params_);
    return res.base->sf(t + res.shift) / res.denom;
}

double DiscreteLifetime::cdf(long t) const { return t < 0 ? 0.0 : 1.0 - sf(t); }

double DiscreteLifetime::pmf(long t) const {
    if (t < 0) return 0.0;
    if (auto* g = std::get_if<GeometricParams>(&params_))
        return g->p * std::pow(1.0 - g->p, double(t));
    if (auto* nb = std::get_if<NegBinomialParams>(&params_)) return nb_pmf(nb->r, nb->p, t);
    if (auto* dw = std::get_if<DiscreteWeibullParams>(&params_))
        return dw_sf(dw->q, dw->beta, t - 1) - dw_sf(dw->q, dw->beta, t);
    if (auto* fp = std::get_if<FinitePmfParams>(&params_)) {
        return std::size_t(t) < fp->pmf.size() ? fp->pmf[t] : 0.0;
    }
    const auto& res = std::get<ResidualParams>(params_);
    if (t == 0) return 0.0;  // conditioned on survival past the shift point
    return res.base->pmf(t + res.shift) / res.denom;
}

bool DiscreteLifetime::has_finite_support() const {
    return std::holds_alternative<FinitePmfParams>(params_);
}

long DiscreteLifetime::support_max() const {
    if (auto* fp = std::get_if<FinitePmfParams>(&params_)) return long(fp->pmf.size()) - 1;
    throw InvalidArgs("support_max: distribution has unbounded support");
}

double DiscreteLifetime::mean(double max_err) const {
    if (auto* g = std::get_if<GeometricParams>(&params_)) return (1.0 - g->p) / g->p;
    if (auto* nb = std::get_if<NegBinomialParams>(&params_))
        return double(nb->r) * (1.0 - nb->p) / nb->p;
    if (auto* fp = std::get_if<FinitePmfParams>(&params_)) return fp->sf_tail[0];
    if (!(max_err > 0.0)) throw DomainError("mean: max_err must be positive");
    // E X = sum_{t >= 0} sf(t); truncate where the certified tail drops below max_err.
    const long stop = tail_bound_inverse(max_err);
    double total = 0.0;
    for (long t = stop; t >= 0; --t) total += sf(t);
    return total;
}

DiscreteLifetime DiscreteLifetime::residual(long t) const {
    if (t < 0) throw InvalidArgs("residual: conditioning time must be >= 0");
    const double denom = sf(t);
    if (denom <= 0.0)
        throw ConditioningOnNullEvent("residual: conditioning event {X > t} has probability 0");
    if (auto* fp = std::get_if<FinitePmfParams>(&params_)) {
        const long n = long(fp->pmf.size());
        std::vector<double> w(std::size_t(n - t), 0.0);
        for (long s = 1; s + t < n; ++s) w[s] = fp->pmf[s + t];
        return finite_pmf(std::move(w));
    }
    if (auto* res = std::get_if<ResidualParams>(&params_)) {
        ResidualParams collapsed{res->base, res->shift + t, res->base->sf(res->shift + t)};
        return DiscreteLifetime(Params{std::move(collapsed)});
    }
    auto base = std::make_shared<const DiscreteLifetime>(*this);
    return DiscreteLifetime(Params{ResidualParams{base, t, denom}});
}

double DiscreteLifetime::tail_bound(long t0) const {
    if (t0 < -1) throw InvalidArgs("tail_bound: t0 must be >= -1");
    if (auto* g = std::get_if<GeometricParams>(&params_)) {
        // Exact: sum_{t > t0} (1-p)^(t+1).
        return std::pow(1.0 - g->p, double(t0) + 2.0) / g->p;
    }
    if (auto* nb = std::get_if<NegBinomialParams>(&params_)) {
        return double(nb->r) / nb->p * nb_sf(nb->r, nb->p, t0 + 1);
    }
    if (auto* dw = std::get_if<DiscreteWeibullParams>(&params_)) {
        if (dw->beta >= 1.0) {
            // sf(t) <= q^(t+1) for beta >= 1, summed geometrically.
            return std::pow(dw->q, double(t0) + 2.0) / (1.0 - dw->q);
        }
        const double s = 1.0 / dw->beta + 1.0;
        if (s > 170.0)
            throw UnboundedTail("tail_bound: discrete Weibull shape too small for the gamma rule");
        const double loginv = std::log(1.0 / dw->q);
        const double s0 = std::floor(std::pow(double(t0) + 2.0, dw->beta));
        const double arg = (s0 + 1.0) * loginv;
        return (1.0 - dw->q) / (dw->q * dw->q) * std::pow(loginv, -s) *
               upper_inc_gamma(s, arg);
    }
    if (auto* fp = std::get_if<FinitePmfParams>(&params_)) {
        const long n = long(fp->pmf.size());
        if (t0 + 1 >= n) return 0.0;
        return t0 < 0 ? fp->sf_tail[0] : fp->sf_tail[t0 + 1];
    }
    const auto& res = std::get<ResidualParams>(params_);
    return res.base->tail_bound(t0 + res.shift) / res.denom;
}

long DiscreteLifetime::tail_bound_inverse(double budget) const {
    if (!(budget > 0.0)) throw DomainError("tail_bound_inverse: budget must be positive");

    // Settle a closed-form candidate onto the smallest t0 >= -1 with
    // tail_bound(t0) <= budget (the bound is non-increasing in t0).
    auto settle = [&](long cand) {
        if (tail_bound(-1) <= budget) return -1L;
        long hi = std::max(cand, 0L);
        while (tail_bound(hi) > budget) hi = hi < 1 ? hi + 1 : 2 * hi;
        long lo = -1;  // invariant: tail_bound(lo) > budget, tail_bound(hi) <= budget
        while (hi - lo > 1) {
            const long mid = lo + (hi - lo) / 2;
            (tail_bound(mid) > budget ? lo : hi) = mid;
        }
        return hi;
    };

    if (auto* g = std::get_if<GeometricParams>(&params_)) {
        const double x = std::log(budget * g->p) / std::log1p(-g->p) - 2.0;
        return settle(x > 1e18 ? long(1e18) : long(std::ceil(x)));
    }
    if (auto* nb = std::get_if<NegBinomialParams>(&params_)) {
        return settle(quantile_sf(std::min(1.0, budget * nb->p / double(nb->r))) - 1);
    }
    if (auto* dw = std::get_if<DiscreteWeibullParams>(&params_)) {
        if (dw->beta >= 1.0) {
            const double x = std::log(budget * (1.0 - dw->q)) / std::log(dw->q) - 2.0;
            return settle(x > 1e18 ? long(1e18) : long(std::ceil(x)));
        }
        const double s = 1.0 / dw->beta + 1.0;
        if (s > 170.0)
            throw UnboundedTail(
                "tail_bound_inverse: discrete Weibull shape too small for the gamma rule");
        const double loginv = std::log(1.0 / dw->q);
        const double y =
            budget * dw->q * dw->q * std::pow(loginv, s) / (1.0 - dw->q);
        if (y >= std::tgamma(s)) return settle(-1);
        const double xstar = upper_inc_gamma_inverse(s, y);
        const double cand = std::pow(xstar / loginv, 1.0 / dw->beta) - 2.0;
        return settle(cand > 1e18 ? long(1e18) : long(std::ceil(cand)));
    }
    if (auto* fp = std::get_if<FinitePmfParams>(&params_)) {
        const long n = long(fp->pmf.size());
        long m = 0;
        while (m < n && fp->sf_tail[m] > budget) ++m;
        return m - 1;
    }
    const auto& res = std::get<ResidualParams>(params_);
    return settle(res.base->tail_bound_inverse(budget * res.denom) - res.shift);
}

long DiscreteLifetime::quantile_sf(double target) const {
    if (!(target >= 0.0)) throw DomainError("quantile_sf: target must be >= 0");
    if (target >= 1.0) return -1;
    if (auto* fp = std::get_if<FinitePmfParams>(&params_)) {
        const long n = long(fp->pmf.size());
        for (long m = 0; m < n; ++m) {
            if (fp->sf[m] <= target) return m;
        }
        return n - 1;  // sf[n-1] = 0 <= target for any target >= 0
    }
    if (!(target > 0.0))
        throw DomainError("quantile_sf: target must be positive for unbounded support");
    long lo = -1, hi = 1;
    while (sf(hi) > target) {
        lo = hi;
        hi *= 2;
        if (hi > (1L << 60)) throw DomainError("quantile_sf: target unreachable");
    }
    while (hi - lo > 1) {
        const long mid = lo + (hi - lo) / 2;
        (sf(mid) > target ? lo : hi) = mid;
    }
    return hi;
}

long DiscreteLifetime::quantile(double u) const {
    if (!(u >= 0.0) || !(u < 1.0)) throw DomainError("quantile: u must lie in [0, 1)");
    const long m = quantile_sf(1.0 - u);
    return m < 0 ? 0 : m;
}

bool DiscreteLifetime::operator==(const DiscreteLifetime& other) const {
    return params_ == other.params_;
}

double DiscreteLifetime::geom_p() const {
    if (auto* g = std::get_if<GeometricParams>(&params_)) return g->p;
    throw InvalidArgs("geom_p: not a geometric distribution");
}

long DiscreteLifetime::nb_r() const {
    if (auto* nb = std::get_if<NegBinomialParams>(&params_)) return nb->r;
    throw InvalidArgs("nb_r: not a negative binomial distribution");
}

double DiscreteLifetime::nb_p() const {
    if (auto* nb = std::get_if<NegBinomialParams>(&params_)) return nb->p;
    throw InvalidArgs("nb_p: not a negative binomial distribution");
}

double DiscreteLifetime::dw_q() const {
    if (auto* dw = std::get_if<DiscreteWeibullParams>(&params_)) return dw->q;
    throw InvalidArgs("dw_q: not a discrete Weibull distribution");
}

double DiscreteLifetime::dw_beta() const {
    if (auto* dw = std::get_if<DiscreteWeibullParams>(&params_)) return dw->beta;
    throw InvalidArgs("dw_beta: not a discrete Weibull distribution");
}

const std::vector<double>& DiscreteLifetime::pmf_table() const {
    if (auto* fp = std::get_if<FinitePmfParams>(&params_)) return fp->pmf;
    throw InvalidArgs("pmf_table: not a finite pmf distribution");
}

const DiscreteLifetime& DiscreteLifetime::residual_base() const {
    if (auto* res = std::get_if<ResidualParams>(&params_)) return *res->base;
    throw InvalidArgs("residual_base: not a residual distribution");
}

long DiscreteLifetime::residual_shift() const {
    if (auto* res = std::get_if<ResidualParams>(&params_)) return res->shift;
    throw InvalidArgs("residual_shift: not a residual distribution");
}

long nb_sf_complement_inverse(long r, double p, double target) {
    if (r < 1) throw DomainError("nb_sf_complement_inverse: r must be a positive integer");
    check_prob_open(p, "nb_sf_complement_inverse");
    if (!(target > 0.0) || !(target <= 1.0))
        throw DomainError("nb_sf_complement_inverse: target must lie in (0, 1]");
    return DiscreteLifetime::neg_binomial(r, 1.0 - p).quantile_sf(target);
}

}  // namespace koon

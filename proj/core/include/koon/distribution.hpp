#pragma once

#include <memory>
#include <variant>
#include <vector>

namespace koon {

class DiscreteLifetime;

enum class Family { Geometric, NegBinomial, DiscreteWeibull, FinitePmf, Residual };

struct GeometricParams {
    double p;  // success probability per trial, pmf(t) = p (1-p)^t
    bool operator==(const GeometricParams&) const = default;
};

struct NegBinomialParams {
    long r;    // number of successes to stop at, integer >= 1
    double p;  // success probability, pmf(t) = C(r+t-1, t) (1-p)^t p^r
    bool operator==(const NegBinomialParams&) const = default;
};

struct DiscreteWeibullParams {
    double q;     // sf(t) = q^((t+1)^beta), 0 < q < 1
    double beta;  // shape, > 0
    bool operator==(const DiscreteWeibullParams&) const = default;
};

struct FinitePmfParams {
    std::vector<double> pmf;      // normalized mass on {0, ..., N}
    std::vector<double> sf;       // sf[t] = P(X > t), t in 0..N (sf[N] = 0)
    std::vector<double> sf_tail;  // sf_tail[t] = sum_{s >= t} sf[s]
    bool operator==(const FinitePmfParams& o) const { return pmf == o.pmf; }
};

struct ResidualParams {
    std::shared_ptr<const DiscreteLifetime> base;
    long shift;    // conditioning time t of [X - t | X > t]
    double denom;  // base->sf(shift), cached
    bool operator==(const ResidualParams& o) const;
};

// A discrete lifetime on {0, 1, 2, ...}. Immutable value type; all queries are
// const and safe to call concurrently.
class DiscreteLifetime {
public:
    static DiscreteLifetime geometric(double p);
    static DiscreteLifetime neg_binomial(long r, double p);
    static DiscreteLifetime discrete_weibull(double q, double beta);
    // Accepts arbitrary nonnegative weights, normalizes them; rejects weight sums
    // below 1e-12 and trims trailing zeros.
    static DiscreteLifetime finite_pmf(std::vector<double> weights);

    Family family() const;

    double sf(long t) const;   // P(X > t); equals 1 for every t < 0
    double cdf(long t) const;  // P(X <= t)
    double pmf(long t) const;  // P(X = t)

    bool has_finite_support() const;
    long support_max() const;  // largest t with pmf(t) > 0; finite support only

    // Lower estimate M of E X with M <= E X <= M + max_err. Closed form (exact)
    // for Geometric, NegBinomial and FinitePmf; certified truncated sum otherwise.
    double mean(double max_err = 1e-13) const;

    // Distribution of [X - t | X > t]; requires t >= 0 (throws InvalidArgs) and
    // sf(t) > 0 (throws ConditioningOnNullEvent). Exact FinitePmf result for
    // finite-support inputs.
    DiscreteLifetime residual(long t) const;

    // Certified upper bound b(t0) >= sum_{t > t0} sf(t), non-increasing in t0 >= -1.
    double tail_bound(long t0) const;
    // Smallest t0 >= -1 with tail_bound(t0) <= budget; budget must be positive.
    long tail_bound_inverse(double budget) const;

    // Smallest m >= -1 with sf(m) <= target. For unbounded support target must be
    // positive; finite support also accepts 0.
    long quantile_sf(double target) const;
    // Smallest t >= 0 with cdf(t) >= u, for u in [0, 1).
    long quantile(double u) const;

    bool operator==(const DiscreteLifetime& other) const;

    double geom_p() const;
    long nb_r() const;
    double nb_p() const;
    double dw_q() const;
    double dw_beta() const;
    const std::vector<double>& pmf_table() const;
    const DiscreteLifetime& residual_base() const;
    long residual_shift() const;

private:
    using Params =
        std::variant<GeometricParams, NegBinomialParams, DiscreteWeibullParams, FinitePmfParams,
                     ResidualParams>;
    explicit DiscreteLifetime(Params params) : params_(std::move(params)) {}
    Params params_;
};

// Smallest integer m >= -1 such that the survival function of NB(r, 1-p), the
// negative binomial with r stops at success probability 1-p, evaluated by the
// exact finite sum, satisfies sf(m) <= target. Requires 0 < target <= 1.
long nb_sf_complement_inverse(long r, double p, double target);

}  // namespace koon

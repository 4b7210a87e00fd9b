#include "koon/order_statistics.hpp"

#include <algorithm>

#include "koon/envelope.hpp"
#include "koon/errors.hpp"
#include "koon/special_functions.hpp"

namespace koon {

void SystemSpec::validate() const {
    if (n < 1) throw InvalidArgs("SystemSpec: n must be >= 1");
    if (k < 1 || k > n) throw InvalidArgs("SystemSpec: need 1 <= k <= n");
    if (static_cast<long>(active.size()) != n)
        throw InvalidArgs("SystemSpec: active component count must equal n");
}

bool SystemSpec::iid_active() const {
    for (const auto& c : active)
        if (!(c == active.front())) return false;
    return true;
}

double category_sum(const CategoryWeights& weights, long count_below, long count_exact) {
    const long n = weights.size();
    if (static_cast<long>(weights.exact.size()) != n ||
        static_cast<long>(weights.above.size()) != n)
        throw DimensionMismatch("category_sum: weight vectors differ in length");
    if (count_below < 0 || count_exact < 0)
        throw InvalidCounts("category_sum: counts must be nonnegative");
    if (count_below + count_exact > n)
        throw InvalidCounts("category_sum: counts exceed component count");

    // dp[i*(B+1)+j] = coefficient of x^i y^j after processing a prefix of the
    // components. Descending update order lets the table be reused in place.
    const long A = count_below, B = count_exact;
    std::vector<double> dp((A + 1) * (B + 1), 0.0);
    dp[0] = 1.0;
    for (long c = 0; c < n; ++c) {
        const double a = weights.below[c], b = weights.exact[c], cc = weights.above[c];
        const long imax = std::min(A, c + 1), jmax = std::min(B, c + 1);
        for (long i = imax; i >= 0; --i) {
            for (long j = (i == imax ? jmax : B); j >= 0; --j) {
                double v = dp[i * (B + 1) + j] * cc;
                if (i > 0) v += dp[(i - 1) * (B + 1) + j] * a;
                if (j > 0) v += dp[i * (B + 1) + (j - 1)] * b;
                dp[i * (B + 1) + j] = v;
            }
        }
    }
    return dp[A * (B + 1) + B];
}

double h_kn(const SystemSpec& sys, long t, long u) {
    sys.validate();
    if (u < 0 || u > t) throw InvalidArgs("h_kn: requires 0 <= u <= t");

    const double gz = sys.standby.sf(t - u);
    if (gz == 0.0) return 0.0;

    const long n = sys.n, m = sys.n - sys.k + 1;
    CategoryWeights w;
    w.below.reserve(n);
    w.exact.reserve(n);
    w.above.reserve(n);
    for (const auto& c : sys.active) {
        w.below.push_back(c.cdf(u - 1));
        w.exact.push_back(c.pmf(u));
        w.above.push_back(c.sf(t));
    }

    double inner = 0.0;
    for (long v = 0; v <= sys.n - sys.k; ++v) inner += category_sum(w, v, m - v);
    return gz * inner;
}

double os_sf(const std::vector<DiscreteLifetime>& components, long k, long t) {
    const long n = static_cast<long>(components.size());
    if (n < 1) throw InvalidArgs("os_sf: empty component list");
    if (k < 1 || k > n) throw InvalidArgs("os_sf: need 1 <= k <= n");
    if (t < 0) return 1.0;

    // Distribution of the failure count by time t, truncated above n-k:
    // counts beyond n-k mean the order statistic has already been passed.
    const long cap = n - k;
    std::vector<double> dp(cap + 1, 0.0);
    dp[0] = 1.0;
    for (long c = 0; c < n; ++c) {
        const double q = components[c].cdf(t);
        for (long j = std::min(cap, c + 1); j >= 1; --j)
            dp[j] = dp[j] * (1.0 - q) + dp[j - 1] * q;
        dp[0] *= 1.0 - q;
    }
    double total = 0.0;
    for (long j = cap; j >= 0; --j) total += dp[j];
    return std::min(total, 1.0);
}

double os_mean(const std::vector<DiscreteLifetime>& components, long k, double d) {
    const long n = static_cast<long>(components.size());
    if (n < 1) throw InvalidArgs("os_mean: empty component list");
    if (k < 1 || k > n) throw InvalidArgs("os_mean: need 1 <= k <= n");
    if (!(d > 0.0)) throw DomainError("os_mean: error budget must be positive");

    double csum = 0.0;
    for (long v = 0; v <= n - k; ++v) csum += choose(n, v);

    SurvivalEnvelope env = SurvivalEnvelope::for_components(components);
    long t0 = env.smallest_t0(d / csum);
    while (csum * env.bound(t0) > d) ++t0;

    double total = 0.0;
    for (long t = t0; t >= 0; --t) total += os_sf(components, k, t);
    return total;
}

}  // namespace koon

#pragma once

// Internal batch evaluator for reliability and standby-phase sums. Curve and
// expectation code sweeps t upward over thousands of cycles; evaluating each
// point from scratch would redo the same survival lookups and inner products,
// so this class keeps per-component survival/cdf grids and a reliability cache
// that extend on demand.
//
// The partition identity behind standby_sum: summing the category DP over the
// split counts v = 0..n-k collapses to a difference of two coefficients,
//
//   sum_v category_sum(F(u-), p(u), sfbar(t); v, m-v) = g(t, u) - g(t, u-1),
//
// where g(t, x) = [y^m] prod_j (F_j(x) y + sfbar_j(t)) and m = n-k+1. Each
// g(t, x) costs O(n m) instead of O(n m^2) for the category sums, and the
// telescoping makes a whole u-sweep cost one g evaluation per term.

#include <algorithm>
#include <cmath>
#include <vector>

#include "koon/special_functions.hpp"
#include "koon/system.hpp"

namespace koon::detail {

class SystemSweep {
public:
    explicit SystemSweep(SystemSpec sys) : sys_(std::move(sys)) {
        sys_.validate();
        n_ = sys_.n;
        k_ = sys_.k;
        m_ = n_ - k_ + 1;
        iid_ = sys_.iid_active();
        if (iid_) cnm_ = choose(n_, m_);
        gbuf_.resize(m_ + 1);
        cdf_.resize(n_);
        sfv_.resize(n_);
    }

    const SystemSpec& spec() const { return sys_; }

    // P(T > t), cached
    double reliability(long t) {
        if (t < 0) return 1.0;
        extend(t);
        while (static_cast<long>(rel_.size()) <= t) {
            const long s = static_cast<long>(rel_.size());
            const double v = os_survival(s) + standby_sum(s, 0);
            rel_.push_back(std::min(v, 1.0));
        }
        return rel_[t];
    }

    // P(X_{n-k+1:n} > t), cached
    double os_survival(long t) {
        if (t < 0) return 1.0;
        extend(t);
        while (static_cast<long>(os_.size()) <= t) {
            const long s = static_cast<long>(os_.size());
            os_.push_back(os_at(s));
        }
        return os_[t];
    }

    // sum_{u = max(ulo,0)}^{t} P(X_{n-k+1:n} = u, X_{n-k+2:n} > t, Z > t-u)
    double standby_sum(long t, long ulo) {
        ulo = std::max(ulo, 0L);
        if (t < 0 || ulo > t) return 0.0;
        extend(t);
        if (iid_) {
            double acc = 0.0;
            const double fprev = ulo > 0 ? cdf_[0][ulo - 1] : 0.0;
            double powm_prev = std::pow(fprev, double(m_));
            for (long u = ulo; u <= t; ++u) {
                const double powm = std::pow(cdf_[0][u], double(m_));
                acc += std::max(powm - powm_prev, 0.0) * gz_[t - u];
                powm_prev = powm;
            }
            return acc * cnm_ * std::pow(sfv_[0][t], double(k_ - 1));
        }
        double acc = 0.0;
        double gprev = g_of(t, ulo - 1);
        for (long u = ulo; u <= t; ++u) {
            const double gcur = g_of(t, u);
            acc += std::max(gcur - gprev, 0.0) * gz_[t - u];
            gprev = gcur;
        }
        return acc;
    }

private:
    void extend(long h) {
        if (h <= hi_) return;
        for (long j = 0; j < n_; ++j) {
            cdf_[j].reserve(h + 1);
            sfv_[j].reserve(h + 1);
            for (long x = hi_ + 1; x <= h; ++x) {
                const double sf = sys_.active[j].sf(x);
                sfv_[j].push_back(sf);
                cdf_[j].push_back(1.0 - sf);
            }
        }
        gz_.reserve(h + 1);
        for (long x = hi_ + 1; x <= h; ++x) gz_.push_back(sys_.standby.sf(x));
        hi_ = h;
    }

    // coefficient of y^m in prod_j (F_j(u) y + sfbar_j(t))
    double g_of(long t, long u) {
        if (u < 0) return 0.0;
        std::fill(gbuf_.begin(), gbuf_.end(), 0.0);
        gbuf_[0] = 1.0;
        for (long j = 0; j < n_; ++j) {
            const double a = cdf_[j][u], c = sfv_[j][t];
            for (long i = std::min(m_, j + 1); i >= 1; --i)
                gbuf_[i] = gbuf_[i] * c + gbuf_[i - 1] * a;
            gbuf_[0] *= c;
        }
        return gbuf_[m_];
    }

    double os_at(long t) {
        const long cap = n_ - k_;
        std::vector<double> dp(cap + 1, 0.0);
        dp[0] = 1.0;
        for (long j = 0; j < n_; ++j) {
            const double sf = sfv_[j][t], q = cdf_[j][t];
            for (long i = std::min(cap, j + 1); i >= 1; --i)
                dp[i] = dp[i] * sf + dp[i - 1] * q;
            dp[0] *= sf;
        }
        double total = 0.0;
        for (long i = cap; i >= 0; --i) total += dp[i];
        return std::min(total, 1.0);
    }

    SystemSpec sys_;
    long n_ = 0, k_ = 0, m_ = 0;
    bool iid_ = false;
    double cnm_ = 0.0;
    long hi_ = -1;                          // highest time the grids cover
    std::vector<std::vector<double>> cdf_;  // cdf_[j][x] = F_j(x)
    std::vector<std::vector<double>> sfv_;  // sfv_[j][x] = 1 - F_j(x), family-exact
    std::vector<double> gz_;                // standby survival
    std::vector<double> rel_;
    std::vector<double> os_;
    std::vector<double> gbuf_;
};

}  // namespace koon::detail

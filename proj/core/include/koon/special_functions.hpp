#pragma once

namespace koon {

// Upper incomplete gamma Gamma(s, x) = int_x^inf u^{s-1} e^{-u} du for s > 0, x >= 0.
// Series expansion for x < s + 1, continued fraction otherwise; relative accuracy
// targets 1e-10 over the supported range (s <= 170 so Gamma(s) stays finite).
double upper_inc_gamma(double s, double x);

// Smallest-argument inverse of the map x -> Gamma(s, x): returns x with
// Gamma(s, x) = y for 0 < y < Gamma(s), absolute accuracy 1e-10 in x.
// Throws DomainError when y is outside (0, Gamma(s)).
double upper_inc_gamma_inverse(double s, double y);

// Regularized incomplete beta I_x(a, b), continued-fraction evaluation.
double regularized_incomplete_beta(double a, double b, double x);

// log of the binomial coefficient C(n, k) for 0 <= k <= n.
double log_choose(long n, long k);

// C(n, k) as a double (exact for values representable in 53 bits).
double choose(long n, long k);

}  // namespace koon

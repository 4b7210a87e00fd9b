#pragma once

#include <cstdint>
#include <string>

#include "koon/system.hpp"

namespace koon {

// Ground-truth companions to the analytic modules: exhaustive enumeration
// over (possibly truncated) joint supports, and a seedable simulator.
// Both evaluate T = min(X_{n-k+1:n} + Z, X_{n-k+2:n}) directly.

struct Query {
    enum class Kind { ExpectedLifetime, ReliabilityAt, ConditionalSf, ConditionalMean };
    enum class Conditioning { Usual, SystemLevel, Working };

    Kind kind = Kind::ExpectedLifetime;
    Conditioning conditioning = Conditioning::Usual;
    long t = 0;
    long s = 0;

    static Query expected_lifetime();
    static Query reliability_at(long t);
    static Query conditional_sf(Conditioning c, long t, long s);
    static Query conditional_mean(Conditioning c, long t);

    // Text form used by the CLI:
    //   "et" | "rel@T" | "mrl:usual|system|working@T" | "sf:usual|system|working@T,S"
    static Query parse(const std::string& text);
    std::string str() const;
};

// Exact value of the query by full joint enumeration. Unbounded supports are
// truncated where survival drops below 1e-16 and the cut mass is folded into
// the last atom, so results are exact for finite systems and correct to well
// under any test tolerance otherwise.
double enumerate_exact(const SystemSpec& sys, const Query& query);

struct SimResult {
    double estimate = 0.0;
    double std_error = 0.0;
    long n_samples = 0;
    std::uint64_t seed = 0;
};

// Monte-Carlo estimate with one deterministic substream per component, so a
// component's draws do not depend on how many other components exist.
// Conditional queries are estimated by rejection.
SimResult simulate(const SystemSpec& sys, const Query& query, long n_samples,
                   std::uint64_t seed);

}  // namespace koon

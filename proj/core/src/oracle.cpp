#include "koon/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <vector>

#include "koon/errors.hpp"

namespace koon {

Query Query::expected_lifetime() { return {}; }

Query Query::reliability_at(long t) {
    Query q;
    q.kind = Kind::ReliabilityAt;
    q.t = t;
    return q;
}

Query Query::conditional_sf(Conditioning c, long t, long s) {
    Query q;
    q.kind = Kind::ConditionalSf;
    q.conditioning = c;
    q.t = t;
    q.s = s;
    return q;
}

Query Query::conditional_mean(Conditioning c, long t) {
    Query q;
    q.kind = Kind::ConditionalMean;
    q.conditioning = c;
    q.t = t;
    return q;
}

namespace {

Query::Conditioning parse_conditioning(const std::string& word) {
    if (word == "usual") return Query::Conditioning::Usual;
    if (word == "system") return Query::Conditioning::SystemLevel;
    if (word == "working") return Query::Conditioning::Working;
    throw InvalidArgs("unknown conditioning '" + word + "' (usual|system|working)");
}

const char* conditioning_word(Query::Conditioning c) {
    switch (c) {
        case Query::Conditioning::Usual: return "usual";
        case Query::Conditioning::SystemLevel: return "system";
        case Query::Conditioning::Working: return "working";
    }
    return "usual";
}

long parse_long(const std::string& text, const std::string& whole) {
    try {
        std::size_t used = 0;
        const long v = std::stol(text, &used);
        if (used != text.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw InvalidArgs("bad integer in query '" + whole + "'");
    }
}

}  // namespace

Query Query::parse(const std::string& text) {
    if (text == "et") return expected_lifetime();

    const auto at = text.find('@');
    if (at == std::string::npos)
        throw InvalidArgs("cannot parse query '" + text +
                          "' (expected et | rel@T | mrl:COND@T | sf:COND@T,S)");
    const std::string head = text.substr(0, at);
    const std::string args = text.substr(at + 1);

    if (head == "rel") return reliability_at(parse_long(args, text));

    const auto colon = head.find(':');
    if (colon == std::string::npos)
        throw InvalidArgs("cannot parse query '" + text + "'");
    const std::string op = head.substr(0, colon);
    const Conditioning cond = parse_conditioning(head.substr(colon + 1));

    if (op == "mrl") return conditional_mean(cond, parse_long(args, text));
    if (op == "sf") {
        const auto comma = args.find(',');
        if (comma == std::string::npos)
            throw InvalidArgs("sf query needs two arguments: '" + text + "'");
        return conditional_sf(cond, parse_long(args.substr(0, comma), text),
                              parse_long(args.substr(comma + 1), text));
    }
    throw InvalidArgs("cannot parse query '" + text + "'");
}

std::string Query::str() const {
    switch (kind) {
        case Kind::ExpectedLifetime: return "et";
        case Kind::ReliabilityAt: return "rel@" + std::to_string(t);
        case Kind::ConditionalMean:
            return std::string("mrl:") + conditioning_word(conditioning) + "@" +
                   std::to_string(t);
        case Kind::ConditionalSf:
            return std::string("sf:") + conditioning_word(conditioning) + "@" +
                   std::to_string(t) + "," + std::to_string(s);
    }
    return "et";
}

namespace {

constexpr double kEnumCut = 1e-16;
constexpr double kSimCut = 1e-15;
constexpr long kSentinel = std::numeric_limits<long>::max() / 4;

struct Atoms {
    std::vector<double> prob;  // prob[v] = P(X = v), tail mass folded into the back
};

Atoms atoms_for(const DiscreteLifetime& d, double cut) {
    Atoms a;
    long m = d.has_finite_support() ? d.support_max() : d.quantile_sf(cut);
    m = std::max(m, 0L);
    a.prob.resize(m + 1);
    for (long v = 0; v < m; ++v) a.prob[v] = d.pmf(v);
    a.prob[m] = d.pmf(m) + d.sf(m);
    return a;
}

struct Outcome {
    long y1 = 0;       // (n-k+1)-th smallest active lifetime
    long y2 = 0;       // next order statistic, sentinel when k = 1
    long z = 0;
    long t_value = 0;  // realized system lifetime
    long min_x = 0;
};

Outcome assemble(std::vector<long>& scratch, const std::vector<long>& x, long z, long k) {
    scratch.assign(x.begin(), x.end());
    std::sort(scratch.begin(), scratch.end());
    const long n = static_cast<long>(scratch.size());
    Outcome o;
    o.y1 = scratch[n - k];
    o.y2 = k >= 2 ? scratch[n - k + 1] : kSentinel;
    o.z = z;
    o.min_x = scratch[0];
    o.t_value = std::min(o.y1 + z, o.y2);
    return o;
}

// Numerator weight and conditioning indicator for a single outcome.
struct QueryEval {
    long double num = 0.0L;
    bool in_condition = true;
};

QueryEval evaluate(const Query& q, const Outcome& o) {
    QueryEval e;
    switch (q.kind) {
        case Query::Kind::ExpectedLifetime:
            e.num = o.t_value;
            return e;
        case Query::Kind::ReliabilityAt:
            e.num = o.t_value > q.t ? 1.0L : 0.0L;
            return e;
        default:
            break;
    }
    switch (q.conditioning) {
        case Query::Conditioning::Usual: e.in_condition = o.t_value > q.t; break;
        case Query::Conditioning::SystemLevel: e.in_condition = o.min_x > q.t; break;
        case Query::Conditioning::Working: e.in_condition = o.y1 > q.t; break;
    }
    if (!e.in_condition) return e;
    if (q.kind == Query::Kind::ConditionalSf)
        e.num = o.t_value > q.t + q.s ? 1.0L : 0.0L;
    else
        e.num = o.t_value - q.t;
    return e;
}

}  // namespace

double enumerate_exact(const SystemSpec& sys, const Query& query) {
    sys.validate();
    const long n = sys.n;

    std::vector<Atoms> comp;
    comp.reserve(n + 1);
    double states = 1.0;
    for (const auto& d : sys.active) {
        comp.push_back(atoms_for(d, kEnumCut));
        states *= static_cast<double>(comp.back().prob.size());
    }
    comp.push_back(atoms_for(sys.standby, kEnumCut));
    states *= static_cast<double>(comp.back().prob.size());
    if (states > 1e7) {
        char approx[32];
        std::snprintf(approx, sizeof approx, "%.3g", states);
        throw TooLarge(std::string("joint support has ~") + approx +
                       " states; enumeration is capped at 1e7");
    }

    std::vector<long> idx(n + 1, 0);
    std::vector<long> x(n);
    std::vector<long> scratch;
    long double num = 0.0L, den = 0.0L;

    for (;;) {
        long double w = 1.0L;
        for (long j = 0; j <= n; ++j) w *= comp[j].prob[idx[j]];
        if (w > 0.0L) {
            for (long j = 0; j < n; ++j) x[j] = idx[j];
            const Outcome o = assemble(scratch, x, idx[n], sys.k);
            const QueryEval e = evaluate(query, o);
            if (e.in_condition) {
                num += w * e.num;
                den += w;
            }
        }
        long j = 0;
        for (; j <= n; ++j) {
            if (++idx[j] < static_cast<long>(comp[j].prob.size())) break;
            idx[j] = 0;
        }
        if (j > n) break;
    }

    const bool conditional = query.kind == Query::Kind::ConditionalSf ||
                             query.kind == Query::Kind::ConditionalMean;
    if (!conditional) return static_cast<double>(num);
    if (den <= 0.0L)
        throw ConditioningOnNullEvent("conditioning event has zero probability");
    return static_cast<double>(num / den);
}

namespace {

// SplitMix64 step, used only to derive well-separated engine seeds.
std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

struct Sampler {
    std::vector<double> cdf;  // cdf[v] = P(X <= v), truncated
    std::mt19937_64 engine;

    long draw(std::uniform_real_distribution<double>& unit) {
        const double u = unit(engine);
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        if (it == cdf.end()) return static_cast<long>(cdf.size()) - 1;
        return static_cast<long>(it - cdf.begin());
    }
};

Sampler sampler_for(const DiscreteLifetime& d, std::uint64_t component_seed) {
    Sampler s;
    long m = d.has_finite_support() ? d.support_max() : d.quantile_sf(kSimCut);
    m = std::max(m, 0L);
    s.cdf.resize(m + 1);
    for (long v = 0; v <= m; ++v) s.cdf[v] = d.cdf(v);
    s.engine.seed(component_seed);
    return s;
}

}  // namespace

SimResult simulate(const SystemSpec& sys, const Query& query, long n_samples,
                   std::uint64_t seed) {
    sys.validate();
    if (n_samples < 1) throw InvalidArgs("simulate needs n_samples >= 1");
    const long n = sys.n;

    std::uint64_t state = seed;
    std::vector<Sampler> comp;
    comp.reserve(n + 1);
    for (const auto& d : sys.active) comp.push_back(sampler_for(d, splitmix64(state)));
    comp.push_back(sampler_for(sys.standby, splitmix64(state)));

    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<long> x(n);
    std::vector<long> scratch;

    const bool conditional = query.kind == Query::Kind::ConditionalSf ||
                             query.kind == Query::Kind::ConditionalMean;
    long double s1 = 0.0L, s2 = 0.0L;
    long accepted = 0;

    for (long i = 0; i < n_samples; ++i) {
        for (long j = 0; j < n; ++j) x[j] = comp[j].draw(unit);
        const long z = comp[n].draw(unit);
        const Outcome o = assemble(scratch, x, z, sys.k);
        const QueryEval e = evaluate(query, o);
        if (!e.in_condition) continue;
        ++accepted;
        s1 += e.num;
        s2 += e.num * e.num;
    }

    if (conditional) {
        const double rate = static_cast<double>(accepted) / static_cast<double>(n_samples);
        if (accepted == 0 || (n_samples >= 1000000 && rate < 1e-6))
            throw ConditioningTooRare("conditioning acceptance rate " +
                                      std::to_string(rate) + " below 1e-6");
    }

    SimResult r;
    r.seed = seed;
    r.n_samples = accepted;
    const long double m = accepted;
    r.estimate = static_cast<double>(s1 / m);
    if (accepted > 1) {
        long double var = (s2 - s1 * s1 / m) / (m - 1.0L);
        if (var < 0.0L) var = 0.0L;
        r.std_error = static_cast<double>(std::sqrt(static_cast<double>(var / m)));
    }
    return r;
}

}  // namespace koon

#include <cmath>
#include <random>

#include <doctest.h>
#include <koon/distribution.hpp>
#include <koon/errors.hpp>
#include <koon/stochastic_orders.hpp>

using koon::DiscreteLifetime;
using koon::IfrClass;
using koon::OrderRelation;

namespace {

constexpr double kEps = 1e-10;

}  // namespace

TEST_SUITE("stochastic_orders") {

TEST_CASE("negative binomials with shared p are st-ordered by shape") {
    std::mt19937 rng(20240811);
    std::uniform_real_distribution<double> unit(0.05, 0.9);
    std::uniform_int_distribution<long> shape(1, 8);
    for (int i = 0; i < 25; ++i) {
        const double p = unit(rng);
        long r1 = shape(rng), r2 = shape(rng);
        if (r1 > r2) std::swap(r1, r2);
        const auto a = DiscreteLifetime::neg_binomial(r1, p);
        const auto b = DiscreteLifetime::neg_binomial(r2, p);
        const auto v = koon::st_leq(a, b, kEps);
        CHECK(v.holds);
        CHECK(v.relation == OrderRelation::St);
        CHECK(v.horizon >= 0);
        CHECK_FALSE(v.counterexample.has_value());
        if (r1 < r2) {
            const auto rev = koon::st_leq(b, a, kEps);
            CHECK_FALSE(rev.holds);
            REQUIRE(rev.counterexample.has_value());
            CHECK(*rev.counterexample >= 0);
        }
    }
}

TEST_CASE("discrete weibulls with shared q are st-ordered by inverse shape") {
    std::mt19937 rng(7210);
    std::uniform_real_distribution<double> qdist(0.2, 0.9);
    std::uniform_real_distribution<double> bdist(0.5, 2.5);
    for (int i = 0; i < 25; ++i) {
        const double q = qdist(rng);
        double b1 = bdist(rng), b2 = bdist(rng);
        if (b1 < b2) std::swap(b1, b2);  // b1 >= b2 makes the first smaller
        const auto a = DiscreteLifetime::discrete_weibull(q, b1);
        const auto b = DiscreteLifetime::discrete_weibull(q, b2);
        const auto v = koon::st_leq(a, b, kEps);
        CHECK(v.holds);
        if (b1 >= b2 + 0.15) {
            const auto rev = koon::st_leq(b, a, kEps);
            CHECK_FALSE(rev.holds);
        }
    }
}

TEST_CASE("a geometric is hr-dominated by any negative binomial sharing its p") {
    std::mt19937 rng(515151);
    std::uniform_real_distribution<double> unit(0.05, 0.9);
    std::uniform_int_distribution<long> shape(1, 8);
    for (int i = 0; i < 25; ++i) {
        const double p = unit(rng);
        const long r = shape(rng);
        const auto g = DiscreteLifetime::geometric(p);
        const auto nb = DiscreteLifetime::neg_binomial(r, p);
        const auto hr = koon::hr_leq(g, nb, kEps);
        CHECK(hr.holds);
        CHECK(hr.relation == OrderRelation::Hr);
        // hr implies st, so the st check must agree on the same pair
        CHECK(koon::st_leq(g, nb, kEps).holds);
    }
}

TEST_CASE("orders are reflexive under the numeric slack") {
    const auto g = DiscreteLifetime::geometric(0.35);
    const auto w = DiscreteLifetime::discrete_weibull(0.6, 1.7);
    for (const auto& d : {g, w}) {
        CHECK(koon::st_leq(d, d, kEps).holds);
        CHECK(koon::hr_leq(d, d, kEps).holds);
    }
}

TEST_CASE("st without hr: the classic two-support example") {
    const auto a = DiscreteLifetime::finite_pmf({0.5, 0.25, 0.25});
    const auto b = DiscreteLifetime::finite_pmf({0.25, 0.5, 0.25});
    CHECK(koon::st_leq(a, b, kEps).holds);
    const auto hr = koon::hr_leq(a, b, kEps);
    CHECK_FALSE(hr.holds);
    REQUIRE(hr.counterexample.has_value());
    // sf_b(1) sf_a(0) = 0.25 * 0.5 < sf_b(0) sf_a(1) = 0.75 * 0.25
    CHECK(*hr.counterexample == 1);
}

TEST_CASE("failure-rate classification of the parametric families") {
    using koon::ifr_class;
    CHECK(ifr_class(DiscreteLifetime::geometric(0.3)).cls == IfrClass::Both);
    CHECK(ifr_class(DiscreteLifetime::geometric(0.3)).horizon == -1);
    CHECK(ifr_class(DiscreteLifetime::neg_binomial(1, 0.6)).cls == IfrClass::Both);
    CHECK(ifr_class(DiscreteLifetime::neg_binomial(2, 0.25)).cls == IfrClass::Ifr);
    CHECK(ifr_class(DiscreteLifetime::neg_binomial(5, 0.8)).cls == IfrClass::Ifr);
    CHECK(ifr_class(DiscreteLifetime::discrete_weibull(0.75, 2.0)).cls == IfrClass::Ifr);
    CHECK(ifr_class(DiscreteLifetime::discrete_weibull(std::exp(-2.0), 0.5)).cls ==
          IfrClass::Dfr);
    CHECK(ifr_class(DiscreteLifetime::discrete_weibull(0.4, 1.0)).cls == IfrClass::Both);
}

TEST_CASE("failure-rate classification of finite pmfs by hazard scan") {
    using koon::ifr_class;
    // hazards 1/3, 1/2, 1: strictly increasing
    const auto uniform3 = ifr_class(DiscreteLifetime::finite_pmf({1, 1, 1}));
    CHECK(uniform3.cls == IfrClass::Ifr);
    CHECK(uniform3.horizon == 2);
    // a point mass is vacuously both
    CHECK(ifr_class(DiscreteLifetime::finite_pmf({1.0})).cls == IfrClass::Both);
    // hazards 0.6, 0.5, 1: down then up
    CHECK(ifr_class(DiscreteLifetime::finite_pmf({0.6, 0.2, 0.2})).cls == IfrClass::Neither);
    // a hole in the support has no monotone hazard reading
    CHECK(ifr_class(DiscreteLifetime::finite_pmf({0.5, 0.0, 0.5})).cls == IfrClass::Neither);
}

TEST_CASE("residual transforms stay unclassified without a counterexample") {
    const auto res = DiscreteLifetime::geometric(0.3).residual(2);
    const auto v = koon::ifr_class(res);
    CHECK(v.cls == IfrClass::Unknown);
    CHECK(v.horizon >= 1);
}

TEST_CASE("system comparison orders the geometric table row under its nb upgrade") {
    koon::SystemSpec t1;
    t1.n = 3;
    t1.k = 2;
    t1.active.assign(3, DiscreteLifetime::geometric(0.25));
    t1.standby = DiscreteLifetime::geometric(0.25);

    koon::SystemSpec t2 = t1;
    t2.active.assign(3, DiscreteLifetime::neg_binomial(2, 0.25));
    t2.standby = DiscreteLifetime::neg_binomial(2, 0.25);

    const auto v = koon::system_st_compare(t1, t2, 1e-9);
    CHECK(v.holds);
    CHECK(v.relation == OrderRelation::St);
    CHECK(v.horizon >= 0);
    CHECK(v.residual_mass <= 1e-8);
    CHECK_FALSE(v.counterexample.has_value());

    const auto rev = koon::system_st_compare(t2, t1, 1e-9);
    CHECK_FALSE(rev.holds);
    REQUIRE(rev.counterexample.has_value());
    CHECK(*rev.counterexample >= 0);

    CHECK(koon::system_st_compare(t1, t1, 1e-9).holds);

    koon::SystemSpec series = t1;
    series.k = 3;
    CHECK_THROWS_AS(koon::system_st_compare(t1, series, 1e-9), koon::DimensionMismatch);
}

}  // TEST_SUITE

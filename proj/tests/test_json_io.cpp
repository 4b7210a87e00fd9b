#include <string>

#include <doctest.h>
#include <koon/json_io.hpp>

using koon::DiscreteLifetime;
using koon::SchemaError;

namespace {

bool mentions(const std::exception& e, const char* needle) {
    return std::string(e.what()).find(needle) != std::string::npos;
}

}  // namespace

TEST_SUITE("json_io") {

TEST_CASE("distributions survive a write/read round trip") {
    const DiscreteLifetime dists[] = {
        DiscreteLifetime::geometric(0.37),
        DiscreteLifetime::neg_binomial(4, 0.21),
        DiscreteLifetime::discrete_weibull(0.73, 1.9),
        DiscreteLifetime::finite_pmf({0.2, 0.5, 0.3}),
    };
    for (const auto& d : dists) {
        const std::string text = koon::distribution_to_json_text(d);
        CHECK(koon::distribution_from_json_text(text) == d);
    }
}

TEST_CASE("systems survive a write/read round trip") {
    koon::SystemSpec sys;
    sys.n = 3;
    sys.k = 2;
    sys.active = {DiscreteLifetime::geometric(0.3), DiscreteLifetime::neg_binomial(2, 0.4),
                  DiscreteLifetime::finite_pmf({0.1, 0.9})};
    sys.standby = DiscreteLifetime::discrete_weibull(0.8, 1.5);

    const auto back = koon::system_from_json_text(koon::system_to_json_text(sys));
    CHECK(back.n == sys.n);
    CHECK(back.k == sys.k);
    REQUIRE(back.active.size() == sys.active.size());
    for (std::size_t i = 0; i < sys.active.size(); ++i) CHECK(back.active[i] == sys.active[i]);
    CHECK(back.standby == sys.standby);
}

TEST_CASE("iid shorthand expands to n copies") {
    const auto sys = koon::system_from_json_text(R"({
        "n": 4, "k": 2,
        "iid": {"family": "geometric", "p": 0.25},
        "standby": {"family": "geometric", "p": 0.1}
    })");
    CHECK(sys.n == 4);
    CHECK(sys.k == 2);
    REQUIRE(sys.active.size() == 4);
    for (const auto& c : sys.active) CHECK(c == DiscreteLifetime::geometric(0.25));
    CHECK(sys.standby == DiscreteLifetime::geometric(0.1));
}

TEST_CASE("schema violations carry the offending path") {
    CHECK_THROWS_AS(koon::distribution_from_json_text(R"({"family":"geometric"})"),
                    SchemaError);
    CHECK_THROWS_AS(koon::distribution_from_json_text(R"({"family":"geometric","p":"x"})"),
                    SchemaError);
    CHECK_THROWS_AS(koon::distribution_from_json_text(R"({"family":"exponential","p":0.5})"),
                    SchemaError);
    CHECK_THROWS_AS(
        koon::distribution_from_json_text(R"({"family":"negbinomial","r":2.5,"p":0.3})"),
        SchemaError);
    CHECK_THROWS_AS(koon::distribution_from_json_text(R"({"family":"pmf","weights":[]})"),
                    SchemaError);

    // parameter domain errors surface as schema errors, not bare domain errors
    try {
        koon::distribution_from_json_text(R"({"family":"geometric","p":1.5})");
        FAIL("expected SchemaError");
    } catch (const SchemaError&) {
    }

    try {
        koon::system_from_json_text(R"({
            "n": 2, "k": 1,
            "active": [{"family":"geometric","p":0.5},
                       {"family":"pmf","weights":[0.5,"x"]}],
            "standby": {"family":"geometric","p":0.5}
        })");
        FAIL("expected SchemaError");
    } catch (const SchemaError& e) {
        CHECK(mentions(e, "active"));
        CHECK(mentions(e, "weights"));
    }
}

TEST_CASE("system schema violations") {
    const char* bad[] = {
        // wrong active count
        R"({"n":3,"k":1,"active":[{"family":"geometric","p":0.5}],
            "standby":{"family":"geometric","p":0.5}})",
        // both explicit list and iid shorthand
        R"({"n":2,"k":1,"active":[{"family":"geometric","p":0.5},
                                  {"family":"geometric","p":0.5}],
            "iid":{"family":"geometric","p":0.5},
            "standby":{"family":"geometric","p":0.5}})",
        // neither
        R"({"n":2,"k":1,"standby":{"family":"geometric","p":0.5}})",
        // no standby
        R"({"n":2,"k":1,"iid":{"family":"geometric","p":0.5}})",
        // k out of range
        R"({"n":2,"k":3,"iid":{"family":"geometric","p":0.5},
            "standby":{"family":"geometric","p":0.5}})",
        // n not an integer
        R"({"n":2.5,"k":1,"iid":{"family":"geometric","p":0.5},
            "standby":{"family":"geometric","p":0.5}})",
    };
    for (const char* text : bad) CHECK_THROWS_AS(koon::system_from_json_text(text), SchemaError);
}

TEST_CASE("malformed json reports a parse error") {
    try {
        koon::system_from_json_text("{\"n\": 2,");
        FAIL("expected SchemaError");
    } catch (const SchemaError& e) {
        CHECK(mentions(e, "parse error"));
    }
}

TEST_CASE("residual-transformed distributions have no json form") {
    const auto res = DiscreteLifetime::geometric(0.4).residual(2);
    CHECK_THROWS_AS(koon::distribution_to_json_text(res), SchemaError);
    koon::SystemSpec sys;
    sys.n = 1;
    sys.k = 1;
    sys.active = {res};
    sys.standby = DiscreteLifetime::geometric(0.4);
    CHECK_THROWS_AS(koon::system_to_json_text(sys), SchemaError);
}

}  // TEST_SUITE

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ppf/report.hpp"

#include <random>

using namespace ppf;

TEST_CASE("element literals") {
    CHECK(fe_hex(0) == "0x0");
    CHECK(fe_hex(0x2a) == "0x2a");
    CHECK(parse_fe_hex("0x2a") == 0x2a);
    CHECK(parse_fe_hex("42") == 42);
    CHECK_THROWS_AS(parse_fe_hex("0xZZ"), std::invalid_argument);
    CHECK_THROWS_AS(parse_fe_hex(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_fe_hex("12junk"), std::invalid_argument);
}

TEST_CASE("float formatting is fixed at 17 significant digits") {
    CHECK(float17(0.0) == "0");
    CHECK(float17(1.0) == "1");
    CHECK(float17(0.5) == "0.5");
    CHECK(float17(1.0 / 3.0) == "0.33333333333333331");
}

TEST_CASE("function spec round trip: structured") {
    std::mt19937_64 rng(61);
    for (auto [n, t] : std::vector<std::pair<unsigned, unsigned>>{{6, 3}, {8, 4}, {4, 2}}) {
        Field f(n);
        f.set_split(t, n / t);
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<std::tuple<unsigned, unsigned, Fe>> terms;
            for (unsigned k = 1; k < t; ++k)
                for (unsigned i = 0; i < (t - k) * (n / t); ++i) {
                    const Fe c = static_cast<Fe>(rng() % f.order());
                    if (c) terms.push_back({k, i, c});
                }
            const DOQuad F = DOQuad::from_family(f, terms);
            const DOQuad G = parse_function_spec(f, function_spec(F));
            CHECK(F.coeffs() == G.coeffs());
            REQUIRE(G.has_family());
            CHECK(F.family().c == G.family().c);
        }
    }
    Field f(6);
    f.set_split(3, 2);
    CHECK(function_spec(DOQuad::zero(f)) == "0");
    CHECK(parse_function_spec(f, "0").is_zero());
    CHECK(parse_function_spec(f, "").is_zero());
}

TEST_CASE("function spec round trip: generic") {
    std::mt19937_64 rng(67);
    Field f(5); // no split: generic only
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<std::pair<DOQuad::Exponent, Fe>> terms;
        for (unsigned i = 0; i < 5; ++i)
            for (unsigned j = i + 1; j < 5; ++j) {
                const Fe c = static_cast<Fe>(rng() % 32);
                if (c) terms.push_back({{i, j}, c});
            }
        const DOQuad F = DOQuad::from_generic(f, terms);
        const std::string spec = function_spec(F);
        CHECK(spec.rfind("gen:", 0) == 0);
        CHECK(parse_function_spec(f, spec).coeffs() == F.coeffs());
    }
    // forcing the generic reading on a split field
    Field g(6);
    g.set_split(3, 2);
    const DOQuad F = parse_function_spec(g, "gen:0,1=0x3");
    CHECK(F.coeffs().at({0, 1}) == 3);
    CHECK_FALSE(F.has_family()); // difference 1 is not a multiple of m=2
}

TEST_CASE("malformed function specs are rejected") {
    Field f(6);
    f.set_split(3, 2);
    CHECK_THROWS_AS(parse_function_spec(f, "1=0x1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_function_spec(f, "a,b=0x1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_function_spec(f, "1,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_function_spec(f, "1,0=0xqq"), std::invalid_argument);
    CHECK_THROWS_AS(parse_function_spec(f, "9,0=0x1"), std::invalid_argument); // k >= t
}

TEST_CASE("reports carry the tool version and field description") {
    Field f(6);
    f.set_split(3, 2);
    const DOQuad F = fam_t3_binomial(f, 5);
    const Json j = verify_report(f, F, "both", true, true);
    CHECK(j.at("tool") == tool_version);
    CHECK(j.at("field").at("poly") == "0x43");
    CHECK(j.at("field").at("m") == 2);
    CHECK(j.at("agree") == true);
    CHECK(j.at("pseudo_planar") == true);

    const Json d = verify_report(f, F, "both", true, false); // hypothetical mismatch
    CHECK(d.at("agree") == false);

    const std::string dumped = dump_report(j);
    CHECK(dumped.back() == '\n');
    CHECK(dump_report(verify_report(f, F, "both", true, true)) == dumped);
}

TEST_CASE("bounds report marks the inapplicable region") {
    const Json j = bounds_report(64, 8); // N = K^2
    CHECK(j.at("levenstein").is_null());
    CHECK(j.at("welch_sq") == "1/9"); // (64-8)/(63*8) reduced
    const Json k = bounds_report(72, 8);
    CHECK(k.at("levenstein_sq") == "1/8");
}

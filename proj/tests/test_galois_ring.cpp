#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ppf/galois_ring.hpp"
#include "oracles.hpp"

#include <random>

using namespace ppf;

TEST_CASE("GR(4) is Z/4Z") {
    const Field f(1);
    const GrElem one{1, 0};
    const GrElem two = gr_add(f, one, one);
    CHECK(two == GrElem{0, 1});
    const GrElem three = gr_add(f, two, one);
    CHECK(three == GrElem{1, 1});
    CHECK(gr_add(f, three, one) == GrElem{0, 0});
    CHECK(tr_r(f, three) == 3);
    CHECK(tr_r(f, two) == 2);
    CHECK(gr_mul(f, two, two) == GrElem{0, 0}); // characteristic 4
}

TEST_CASE("additive and multiplicative structure") {
    const Field f(3);
    for (std::uint64_t xi = 0; xi < 64; ++xi) {
        const GrElem x = gr_decode(f, xi);
        CHECK(gr_add(f, x, GrElem{}) == x);
        CHECK(gr_mul(f, x, GrElem{1, 0}) == x);
        CHECK(gr_add(f, x, gr_neg(f, x)) == GrElem{});
        CHECK(gr_sub(f, x, x) == GrElem{});
        CHECK(gr_encode(f, x) == xi);
    }
    // Teichmuller closure: t(u) t(v) = t(uv)
    for (Fe u = 0; u < 8; ++u)
        for (Fe v = 0; v < 8; ++v)
            CHECK(gr_mul(f, GrElem{u, 0}, GrElem{v, 0}) == GrElem{f.mul(u, v), 0});
    // 2x + 2y = 2(x ^ y) on the 2R part
    for (Fe u = 0; u < 8; ++u)
        for (Fe v = 0; v < 8; ++v)
            CHECK(gr_add(f, GrElem{0, u}, GrElem{0, v}) == GrElem{0, Fe(u ^ v)});
}

TEST_CASE("gr_add associativity: exhaustive small, random larger") {
    for (unsigned n = 1; n <= 3; ++n) {
        const Field f(n);
        const std::uint64_t ring = f.order() * f.order();
        for (std::uint64_t a = 0; a < ring; ++a)
            for (std::uint64_t b = 0; b < ring; ++b)
                for (std::uint64_t c = 0; c < ring; ++c) {
                    const GrElem x = gr_decode(f, a), y = gr_decode(f, b), z = gr_decode(f, c);
                    CHECK(gr_add(f, gr_add(f, x, y), z) == gr_add(f, x, gr_add(f, y, z)));
                }
    }
    const Field f8(8);
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 100000; ++trial) {
        const GrElem x = gr_decode(f8, rng() % (1 << 16));
        const GrElem y = gr_decode(f8, rng() % (1 << 16));
        const GrElem z = gr_decode(f8, rng() % (1 << 16));
        CHECK(gr_add(f8, gr_add(f8, x, y), z) == gr_add(f8, x, gr_add(f8, y, z)));
        CHECK(gr_add(f8, x, y) == gr_add(f8, y, x));
        // distributivity
        CHECK(gr_mul(f8, x, gr_add(f8, y, z)) ==
              gr_add(f8, gr_mul(f8, x, y), gr_mul(f8, x, z)));
    }
}

TEST_CASE("tr_r: examples, additivity, Frobenius invariance") {
    const Field f3(3);
    CHECK(tr_r(f3, GrElem{}) == 0);
    CHECK(tr_r(f3, GrElem{1, 0}) == 3); // 1 + 1 + 1 in Z4

    for (unsigned n = 1; n <= 4; ++n) {
        const Field f(n);
        const std::uint64_t ring = f.order() * f.order();
        for (std::uint64_t a = 0; a < ring; ++a) {
            const GrElem x = gr_decode(f, a);
            // Frobenius x -> (a^2, b^2) preserves the trace
            const GrElem fx{f.sqr(x.a), f.sqr(x.b)};
            CHECK(tr_r(f, fx) == tr_r(f, x));
            for (std::uint64_t b = 0; b < ring; ++b) {
                const GrElem y = gr_decode(f, b);
                CHECK(((tr_r(f, x) + tr_r(f, y)) & 3) == tr_r(f, gr_add(f, x, y)));
            }
        }
    }
}

TEST_CASE("agreement with the Z4[x]/(h) model, exhaustive n <= 3") {
    for (unsigned n = 1; n <= 3; ++n) {
        const Field f(n);
        const oracle::Z4Model model(f);

        // model self-checks: the lift is multiplicative and reduces mod 2
        // to the field element
        for (std::uint64_t u = 0; u < f.order(); ++u) {
            const auto lifted = model.teich(f, Fe(u));
            Fe back = 0;
            for (unsigned i = 0; i < n; ++i)
                if (lifted[i] & 1) back |= Fe(1) << i;
            CHECK(back == Fe(u));
            for (std::uint64_t v = 0; v < f.order(); ++v)
                CHECK(model.mul(model.teich(f, Fe(u)), model.teich(f, Fe(v))) ==
                      model.teich(f, f.mul(Fe(u), Fe(v))));
        }

        const std::uint64_t ring = f.order() * f.order();
        for (std::uint64_t a = 0; a < ring; ++a) {
            const GrElem x = gr_decode(f, a);
            const auto mx = model.lift(f, x.a, x.b);
            for (std::uint64_t b = 0; b < ring; ++b) {
                const GrElem y = gr_decode(f, b);
                const auto my = model.lift(f, y.a, y.b);
                const GrElem s = gr_add(f, x, y);
                CHECK(model.add(mx, my) == model.lift(f, s.a, s.b));
                const GrElem p = gr_mul(f, x, y);
                CHECK(model.mul(mx, my) == model.lift(f, p.a, p.b));
            }
            // trace through the model: sum of lifted conjugates
            auto acc = model.zero();
            Fe ca = x.a, cb = x.b;
            for (unsigned k = 0; k < n; ++k) {
                acc = model.add(acc, model.teich(f, ca));
                acc = model.add(acc, model.scale(model.teich(f, cb), 2));
                ca = f.sqr(ca);
                cb = f.sqr(cb);
            }
            for (unsigned i = 1; i < n; ++i) CHECK(acc[i] == 0);
            CHECK(acc[0] == tr_r(f, x));
        }
    }
}

TEST_CASE("relative difference sets from functions") {
    // n=1, F=0: D = {0, 1}, differences {1, 3} = R \ 2R
    {
        Field f(1);
        const DOQuad F = DOQuad::zero(f);
        const auto D = rds_from_function(F);
        REQUIRE(D.size() == 2);
        CHECK(D[0] == GrElem{0, 0});
        CHECK(D[1] == GrElem{1, 0});
        const RdsReport rep = verify_rds(f, D);
        CHECK(rep.ok);
        CHECK(rep.unit_covered == 2);
        CHECK(rep.forbidden_hits == 0);
    }
    // F = 0 at n = 2, 3
    for (unsigned n : {2u, 3u}) {
        Field f(n);
        const auto D = rds_from_function(DOQuad::zero(f));
        CHECK(D.size() == f.order());
        CHECK(verify_rds(f, D).ok);
    }
    // the worked example x^6 + x^10 over GF(2^3)
    {
        Field f(3);
        f.set_split(3, 1);
        const auto D = rds_from_function(fam_t3_binomial(f, 1));
        const RdsReport rep = verify_rds(f, D);
        CHECK(rep.ok);
        CHECK(rep.unit_covered == 56); // |R \ 2R| = 64 - 8
        CHECK(rep.forbidden_hits == 0);
        REQUIRE(rep.histogram.size() == 1);
        CHECK(rep.histogram[0] == std::make_pair(std::uint64_t(1), std::uint64_t(56)));
    }
}

TEST_CASE("verify_rds catches mutations") {
    Field f(3);
    f.set_split(3, 1);
    auto D = rds_from_function(fam_t3_binomial(f, 1));
    // replace one element by a 2R-translate of another: duplicate coset
    D[1] = gr_add(f, D[0], GrElem{0, 5});
    const RdsReport rep = verify_rds(f, D);
    CHECK_FALSE(rep.ok);
    CHECK(rep.forbidden_hits > 0);
    CHECK(rep.first_violation.has_value());
    CHECK(rep.violation_kind == "forbidden");

    CHECK_THROWS_AS(verify_rds(f, std::vector<GrElem>(D.begin(), D.begin() + 3)),
                    std::invalid_argument);
}

TEST_CASE("RDS verification equals pseudo-planarity (the bridge theorem)") {
    // all 512 trinomials over GF(2^3)
    {
        Field f(3);
        f.set_split(3, 1);
        for (Fe c1 = 0; c1 < 8; ++c1)
            for (Fe c2 = 0; c2 < 8; ++c2)
                for (Fe c3 = 0; c3 < 8; ++c3) {
                    const DOQuad F = DOQuad::from_family(
                        f, {{1, 0, c1}, {1, 1, c2}, {2, 0, c3}});
                    CHECK(verify_rds(f, rds_from_function(F)).ok == is_pp_bruteforce(F));
                }
    }
    // random generic quadratics at n = 4..6
    std::mt19937_64 rng(31);
    for (unsigned n = 4; n <= 6; ++n) {
        Field f(n);
        for (int trial = 0; trial < 60; ++trial) {
            std::vector<std::pair<DOQuad::Exponent, Fe>> terms;
            for (unsigned i = 0; i < n; ++i)
                for (unsigned j = i + 1; j < n; ++j)
                    terms.push_back({{i, j}, static_cast<Fe>(rng() % f.order())});
            const DOQuad F = DOQuad::from_generic(f, terms);
            CHECK(verify_rds(f, rds_from_function(F)).ok == is_pp_bruteforce(F));
        }
    }
}

TEST_CASE("size guard") {
    Field f(13);
    CHECK_THROWS_AS(rds_from_function(DOQuad::zero(f)), std::invalid_argument);
}

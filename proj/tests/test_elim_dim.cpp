#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace radgen;
using namespace radgen_test;

TEST_CASE("eliminate drops the tag variable", "[elimination]") {
    auto ctx = make_ring_q({"t", "x1"});
    auto elim = eliminate(Ideal<Rational>::of({parse_poly<Rational>("1 - t*x1", ctx)}),
                          {"t"});
    CHECK(elim.is_zero_ideal());
    CHECK(elim.ctx()->vars() == std::vector<std::string>{"x1"});

    auto elim2 = eliminate(Ideal<Rational>::of({parse_poly<Rational>("t*x1", ctx),
                                                parse_poly<Rational>("1 - t", ctx)}),
                           {"t"});
    REQUIRE(elim2.gens().size() == 1);
    CHECK(elim2.gens()[0].str() == "x1");
}

TEST_CASE("eliminate a middle variable", "[elimination]") {
    auto ctx = qring(3);
    auto elim = eliminate(
        Ideal<Rational>::of({qp("x1 - x2", ctx), qp("x2 - x3", ctx)}), {"x2"});
    REQUIRE(elim.gens().size() == 1);
    CHECK(elim.gens()[0].str() == "x1 - x3");
    CHECK(elim.ctx()->vars() == std::vector<std::string>{"x1", "x3"});
    CHECK_THROWS_AS(eliminate(Ideal<Rational>(ctx), {"y9"}), ValueError);
}

TEST_CASE("intersection of principal ideals", "[elimination]") {
    auto ctx = qring(2);
    Ideal<Rational> a = Ideal<Rational>::of({qp("x1", ctx)});
    Ideal<Rational> b = Ideal<Rational>::of({qp("x2", ctx)});
    auto self = intersect(a, a);
    REQUIRE(self.gens().size() == 1);
    CHECK(self.gens()[0].str() == "x1");
    auto meet = intersect(a, b);
    REQUIRE(meet.gens().size() == 1);
    CHECK(meet.gens()[0].str() == "x1*x2");
}

TEST_CASE("the worked prime decomposition intersects back to the ideal",
          "[elimination]") {
    auto ctx = qring(6);
    Ideal<Rational> I = Ideal<Rational>::of(
        {qp("x1*x2 + x3*x4", ctx), qp("x1*x6", ctx), qp("x3*x6", ctx), qp("x5*x6", ctx)});
    Ideal<Rational> c1 = Ideal<Rational>::of({qp("x1*x2 + x3*x4", ctx), qp("x6", ctx)});
    Ideal<Rational> c2 = Ideal<Rational>::of({qp("x1", ctx), qp("x3", ctx), qp("x5", ctx)});
    Ideal<Rational> meet = intersect(c1, c2);

    auto gb_meet = reduced_groebner(meet);
    auto gb_i = reduced_groebner(I);
    for (const auto& g : I.gens()) CHECK(normal_form(g, gb_meet).is_zero());
    for (const auto& g : meet.gens()) CHECK(normal_form(g, gb_i).is_zero());
}

TEST_CASE("intersection generators lie in both inputs, and products lie in the meet",
          "[elimination][property]") {
    auto ctx = qring(3);
    std::vector<std::pair<Ideal<Rational>, Ideal<Rational>>> cases;
    cases.emplace_back(Ideal<Rational>::of({qp("x1*x2", ctx), qp("x3", ctx)}),
                       Ideal<Rational>::of({qp("x1 + x2", ctx)}));
    cases.emplace_back(Ideal<Rational>::of({qp("x1^2", ctx), qp("x2", ctx)}),
                       Ideal<Rational>::of({qp("x1", ctx), qp("x3^2", ctx)}));
    for (const auto& [I, J] : cases) {
        auto meet = intersect(I, J);
        auto gbi = reduced_groebner(I);
        auto gbj = reduced_groebner(J);
        auto gbm = reduced_groebner(meet);
        for (const auto& g : meet.gens()) {
            CHECK(normal_form(g, gbi).is_zero());
            CHECK(normal_form(g, gbj).is_zero());
        }
        for (const auto& gi : I.gens())
            for (const auto& hj : J.gens())
                CHECK(normal_form(gi * hj, gbm).is_zero());
    }
}

TEST_CASE("intersection with the zero ideal", "[elimination]") {
    auto ctx = qring(2);
    auto meet = intersect(Ideal<Rational>::of({qp("x1", ctx)}), Ideal<Rational>(ctx));
    CHECK(meet.is_zero_ideal());
}

TEST_CASE("dimension of the reference ideals", "[dimension]") {
    auto ctx5 = qring(5);
    Ideal<Rational> j = Ideal<Rational>::of(
        {qp("x1*x2 + x3*x4", ctx5), qp("x1*x5", ctx5), qp("x3*x5", ctx5)});
    CHECK(dimension(j) == 3);

    auto ctx3 = qring(3);
    CHECK(dimension(Ideal<Rational>::of({qp("x1", ctx3), qp("x2", ctx3), qp("x3", ctx3)})) ==
          0);

    // the n=6 family member: the component (x1, x3) has height 2
    auto ctx6 = qring(6);
    Ideal<Rational> i6 = Ideal<Rational>::of(
        {qp("x1*x2 + x3*x4", ctx6), qp("x1*x5", ctx6), qp("x1*x6", ctx6),
         qp("x3*x5", ctx6), qp("x3*x6", ctx6)});
    CHECK(dimension(i6) == 4);
}

TEST_CASE("dimension brute force against subset enumeration", "[dimension][property]") {
    // independent oracle: recompute via explicit subsets over the LT supports
    auto ctx = qring(4);
    Ideal<Rational> I = Ideal<Rational>::of(
        {qp("x1*x2", ctx), qp("x2*x3^2", ctx), qp("x3*x4", ctx)});
    auto gb = reduced_groebner(I);
    int best = -1;
    for (unsigned s = 0; s < 16; ++s) {
        bool ok = true;
        for (const auto& g : gb.elems) {
            bool contained = true;
            for (std::size_t v = 0; v < 4; ++v)
                if (g.leading_monomial()[v] > 0 && !((s >> v) & 1)) contained = false;
            if (contained) ok = false;
        }
        if (ok) best = std::max(best, __builtin_popcount(s));
    }
    CHECK(dimension(I) == best);
}

TEST_CASE("dimension rejects the whole ring and is order/permutation stable",
          "[dimension]") {
    auto ctx = qring(2);
    CHECK_THROWS_AS(dimension(Ideal<Rational>::of({qp("1", ctx)})), ValueError);
    CHECK_THROWS_AS(dimension(Ideal<Rational>::of({qp("x1 - 1", ctx), qp("x1", ctx)})),
                    ValueError);

    auto ctx5g = qring(5);
    auto ctx5l = qring(5, OrderKind::lex);
    std::vector<std::string> gens{"x1*x2 + x3*x4", "x1*x5", "x3*x5"};
    Ideal<Rational> a = Ideal<Rational>::of(
        {qp(gens[0], ctx5g), qp(gens[1], ctx5g), qp(gens[2], ctx5g)});
    Ideal<Rational> b = Ideal<Rational>::of(
        {qp(gens[2], ctx5l), qp(gens[0], ctx5l), qp(gens[1], ctx5l)});
    CHECK(dimension(a) == dimension(b));

    // zero ideal: the whole affine space
    CHECK(dimension(Ideal<Rational>(ctx)) == 2);
}

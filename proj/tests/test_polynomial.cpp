#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace radgen;
using namespace radgen_test;

TEST_CASE("parsing the worked binomial", "[poly][parse]") {
    auto ctx = qring(6);
    auto f = qp("x1*x2 + x3*x4", ctx);
    REQUIRE(f.term_count() == 2);
    CHECK(f.leading_coeff().is_one());
    CHECK(f.str() == "x1*x2 + x3*x4");
}

TEST_CASE("zero parses to the empty polynomial", "[poly][parse]") {
    auto ctx = qring(3);
    CHECK(qp("0", ctx).is_zero());
    CHECK(qp("0", ctx).str() == "0");
}

TEST_CASE("expansion cancels down to a monomial", "[poly]") {
    auto ctx = qring(2);
    auto f = qp("(x1+x2)^2 - x1^2 - 2*x1*x2", ctx);
    CHECK(f == qp("x2^2", ctx));
}

TEST_CASE("addition with disjoint supports", "[poly]") {
    auto ctx = qring(6);
    CHECK(qp("x1*x2", ctx) + qp("x3*x4", ctx) == qp("x1*x2 + x3*x4", ctx));
}

TEST_CASE("assembling q1 from Example-2 shaped pieces", "[poly]") {
    auto ctx = qring(5);
    auto q1 = qp("x2", ctx) * qp("x1*x2 + x3*x4", ctx) + qp("x3*x5", ctx);
    CHECK(q1 == qp("x1*x2^2 + x2*x3*x4 + x3*x5", ctx));
    CHECK(q1.str() == "x1*x2^2 + x2*x3*x4 + x3*x5");
}

TEST_CASE("freshman's dream over F_3", "[poly][fp]") {
    auto ctx = fpring(3, 2);
    auto f = pp<GfP>("(x1+x2)^3", ctx);
    CHECK(f == pp<GfP>("x1^3 + x2^3", ctx));
}

TEST_CASE("pow edge cases", "[poly]") {
    auto ctx = qring(2);
    CHECK(qp("x1+x2", ctx).pow(0) == Polynomial<Rational>::one(ctx));
    CHECK(Polynomial<Rational>::zero(ctx).pow(0) == Polynomial<Rational>::one(ctx));
    CHECK(Polynomial<Rational>::zero(ctx).pow(3).is_zero());
}

TEST_CASE("context mismatch is rejected", "[poly]") {
    auto a = qring(2);
    auto b = qring(3);
    CHECK_THROWS_AS(qp("x1", a) + qp("x1", b), ContextMismatchError);
    // same shape, different order: also distinct contexts
    auto c = qring(2, OrderKind::lex);
    CHECK_THROWS_AS(qp("x1", a) * qp("x2", c), ContextMismatchError);
}

TEST_CASE("division: witness extraction shape", "[poly][division]") {
    auto ctx = qring(5, OrderKind::lex);
    auto f = qp("x1*x2^2 + x2*x3*x4 + x3*x5", ctx);
    auto res = divide_multi<Rational>(f, {qp("x1", ctx), qp("x3", ctx)});
    CHECK(res.quotients[0] == qp("x2^2", ctx));
    CHECK(res.quotients[1] == qp("x2*x4 + x5", ctx));
    CHECK(res.remainder.is_zero());
}

TEST_CASE("division: identity and untouched remainder", "[poly][division]") {
    auto ctx = qring(5);
    auto res = divide_multi<Rational>(qp("x1", ctx), {qp("x1", ctx)});
    CHECK(res.quotients[0] == Polynomial<Rational>::one(ctx));
    CHECK(res.remainder.is_zero());

    auto res2 = divide_multi<Rational>(qp("x2", ctx), {qp("x1", ctx), qp("x3", ctx)});
    CHECK(res2.quotients[0].is_zero());
    CHECK(res2.quotients[1].is_zero());
    CHECK(res2.remainder == qp("x2", ctx));

    CHECK_THROWS_AS(
        divide_multi<Rational>(qp("x1", ctx),
                               {Polynomial<Rational>::zero(ctx)}),
        ValueError);
}

TEST_CASE("ring axioms hold exactly on random inputs", "[poly][property]") {
    auto ctx = qring(3);
    std::mt19937 rng(20240811);
    for (int round = 0; round < 200; ++round) {
        auto f = random_poly(ctx, rng);
        auto g = random_poly(ctx, rng);
        auto h = random_poly(ctx, rng);
        CHECK((f + g) + h == f + (g + h));
        CHECK(f + g == g + f);
        CHECK(f * (g + h) == f * g + f * h);
        CHECK(f * g == g * f);
        CHECK((f - f).is_zero());
        CHECK((f * (g * h)) == ((f * g) * h));
    }
}

TEST_CASE("division reconstructs the dividend exactly", "[poly][division][property]") {
    auto ctx = qring(3);
    std::mt19937 rng(7);
    for (int round = 0; round < 150; ++round) {
        auto f = random_poly(ctx, rng, 5, 3);
        std::vector<Polynomial<Rational>> divisors;
        for (int i = 0; i < 2; ++i) {
            auto d = random_poly(ctx, rng, 3, 2);
            if (!d.is_zero()) divisors.push_back(d);
        }
        if (divisors.empty()) continue;
        auto res = divide_multi(f, divisors);
        Polynomial<Rational> sum = res.remainder;
        for (std::size_t i = 0; i < divisors.size(); ++i)
            sum = sum + res.quotients[i] * divisors[i];
        CHECK(sum == f);
        // no remainder term is divisible by any divisor's leading monomial
        for (const auto& t : res.remainder.terms())
            for (const auto& d : divisors)
                CHECK_FALSE(d.leading_monomial().divides(t.mono));
    }
}

TEST_CASE("parse(print(f)) is the identity on random polynomials", "[poly][property]") {
    auto ctx = qring(4);
    std::mt19937 rng(99);
    for (int round = 0; round < 200; ++round) {
        auto f = random_poly(ctx, rng, 6, 3, 9);
        CHECK(qp(f.str(), ctx) == f);
    }
    auto fctx = fpring(13, 3);
    for (int round = 0; round < 100; ++round) {
        auto f = random_poly(fctx, rng, 5, 3, 20);
        CHECK(pp<GfP>(f.str(), fctx) == f);
    }
}

TEST_CASE("reduction mod p commutes with + and *", "[poly][fp][property]") {
    auto qctx = qring(3);
    auto fctx = fpring(7, 3);
    std::mt19937 rng(333);
    auto project = [&](const Polynomial<Rational>& f) {
        std::vector<Term<GfP>> ts;
        for (const auto& t : f.terms())
            ts.push_back({t.mono, FieldTraits<GfP>::from_fraction(
                                       t.coeff.numerator(), t.coeff.denominator(),
                                       fctx->proto())});
        return Polynomial<GfP>::from_terms(fctx, std::move(ts));
    };
    for (int round = 0; round < 100; ++round) {
        auto f = random_poly(qctx, rng, 4, 2, 10);
        auto g = random_poly(qctx, rng, 4, 2, 10);
        CHECK(project(f + g) == project(f) + project(g));
        CHECK(project(f * g) == project(f) * project(g));
    }
}

TEST_CASE("monomial order change re-sorts terms", "[poly]") {
    auto grev = qring(2);
    auto lex = qring(2, OrderKind::lex);
    auto f = qp("x1 + x2^2", grev);
    CHECK(f.str() == "x2^2 + x1");  // degree first under grevlex
    auto g = f.mapped_to(lex);
    CHECK(g.str() == "x1 + x2^2");  // leftmost variable first under lex
    CHECK(g.mapped_to(grev) == f);
}

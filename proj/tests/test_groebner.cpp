#include <algorithm>
#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace radgen;
using namespace radgen_test;

namespace {

template <class F>
bool spolys_reduce_to_zero(const GroebnerBasis<F>& gb) {
    for (std::size_t i = 0; i < gb.elems.size(); ++i)
        for (std::size_t j = i + 1; j < gb.elems.size(); ++j)
            if (!normal_form(s_polynomial(gb.elems[i], gb.elems[j]), gb).is_zero())
                return false;
    return true;
}

std::vector<std::string> basis_strings(const GroebnerBasis<Rational>& gb) {
    std::vector<std::string> out;
    for (const auto& g : gb.elems) out.push_back(g.str());
    return out;
}

}  // namespace

TEST_CASE("principal ideal is its own basis", "[groebner]") {
    auto ctx = qring(2);
    auto gb = reduced_groebner(Ideal<Rational>::of({qp("x1", ctx)}));
    CHECK(basis_strings(gb) == std::vector<std::string>{"x1"});
}

TEST_CASE("one S-polynomial reduction", "[groebner]") {
    auto ctx = qring(2, OrderKind::lex);
    auto gb = reduced_groebner(Ideal<Rational>::of({qp("x1 - x2", ctx), qp("x1", ctx)}));
    CHECK(basis_strings(gb) == std::vector<std::string>{"x1", "x2"});
}

TEST_CASE("coprime leading terms add nothing", "[groebner]") {
    auto ctx = qring(6);
    auto gb = reduced_groebner(
        Ideal<Rational>::of({qp("x1*x2 + x3*x4", ctx), qp("x6", ctx)}));
    CHECK(basis_strings(gb) == std::vector<std::string>{"x1*x2 + x3*x4", "x6"});
    CHECK(spolys_reduce_to_zero(gb));
}

TEST_CASE("reduce_basis inter-reduction examples", "[groebner]") {
    auto ctx = qring(2);
    auto make_gb = [&](std::vector<Polynomial<Rational>> gens) {
        GroebnerBasis<Rational> gb;
        gb.ctx = ctx;
        gb.elems = std::move(gens);
        return gb;
    };
    CHECK(basis_strings(reduce_basis(make_gb({qp("x1", ctx), qp("x1 + x2", ctx)}))) ==
          std::vector<std::string>{"x1", "x2"});
    CHECK(basis_strings(reduce_basis(make_gb({qp("2*x1", ctx)}))) ==
          std::vector<std::string>{"x1"});
    CHECK(basis_strings(reduce_basis(make_gb({qp("x1^2", ctx), qp("x1^2 + x2", ctx)}))) ==
          std::vector<std::string>{"x1^2", "x2"});
}

TEST_CASE("normal form examples", "[groebner]") {
    auto ctx = qring(6);
    Ideal<Rational> example1 = Ideal<Rational>::of(
        {qp("x1*x2 + x3*x4", ctx), qp("x1*x6", ctx), qp("x3*x6", ctx), qp("x5*x6", ctx)});
    auto gb1 = reduced_groebner(example1);
    CHECK(normal_form(qp("x1*x2 + x3*x4", ctx), gb1).is_zero());

    auto gb2 = reduced_groebner(Ideal<Rational>::of({qp("x1", ctx), qp("x3", ctx)}));
    CHECK(normal_form(qp("x2", ctx), gb2) == qp("x2", ctx));

    auto ctx5 = qring(5);
    Ideal<Rational> j = Ideal<Rational>::of(
        {qp("x1*x2 + x3*x4", ctx5), qp("x1*x5", ctx5), qp("x3*x5", ctx5)});
    auto q1 = qp("x2", ctx5) * qp("x1*x2 + x3*x4", ctx5) + qp("x3*x5", ctx5);
    CHECK(normal_form(q1, reduced_groebner(j)).is_zero());
}

TEST_CASE("generators always reduce to zero against their own basis",
          "[groebner][property]") {
    auto ctx = qring(3);
    std::mt19937 rng(4242);
    for (int round = 0; round < 40; ++round) {
        std::vector<Polynomial<Rational>> gens;
        for (int i = 0; i < 3; ++i) gens.push_back(random_poly(ctx, rng, 3, 2, 4));
        Ideal<Rational> I(ctx, gens);
        if (I.is_zero_ideal()) continue;
        auto gb = reduced_groebner(I);
        for (const auto& g : I.gens()) CHECK(normal_form(g, gb).is_zero());
        CHECK(spolys_reduce_to_zero(gb));
        // reduced basis shape: monic, no LM divides another, tails irreducible
        for (const auto& g : gb.elems) CHECK(g.leading_coeff().is_one());
        for (std::size_t a = 0; a < gb.elems.size(); ++a)
            for (std::size_t b = 0; b < gb.elems.size(); ++b) {
                if (a == b) continue;
                CHECK_FALSE(gb.elems[a].leading_monomial().divides(
                    gb.elems[b].leading_monomial()));
            }
    }
}

TEST_CASE("reduced basis is invariant under generator permutation",
          "[groebner][property]") {
    auto ctx = qring(6);
    std::vector<Polynomial<Rational>> gens{qp("x1*x2 + x3*x4", ctx), qp("x1*x6", ctx),
                                           qp("x3*x6", ctx), qp("x5*x6", ctx)};
    auto reference = basis_strings(reduced_groebner(Ideal<Rational>(ctx, gens)));
    std::mt19937 rng(5);
    for (int round = 0; round < 10; ++round) {
        auto shuffled = gens;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        CHECK(basis_strings(reduced_groebner(Ideal<Rational>(ctx, shuffled))) == reference);
    }
}

TEST_CASE("unit ideal detection", "[groebner]") {
    auto ctx = qring(2);
    auto gb = reduced_groebner(Ideal<Rational>::of({qp("x1", ctx), qp("x1 + 1", ctx)}));
    CHECK(gb.is_unit());
    CHECK(basis_strings(gb) == std::vector<std::string>{"1"});
}

TEST_CASE("zero ideal has the empty basis", "[groebner]") {
    auto ctx = qring(2);
    auto gb = reduced_groebner(Ideal<Rational>(ctx));
    CHECK(gb.elems.empty());
    CHECK_FALSE(gb.is_unit());
    CHECK(normal_form(qp("x1", ctx), gb) == qp("x1", ctx));
}

TEST_CASE("pair limit raises a resource error", "[groebner]") {
    auto ctx = qring(3);
    GbLimits limits;
    limits.max_pairs = 1;
    Ideal<Rational> I = Ideal<Rational>::of(
        {qp("x1^2 - x2", ctx), qp("x2^2 - x3", ctx), qp("x1*x3 - x2", ctx)});
    CHECK_THROWS_AS(reduced_groebner(I, limits), ResourceLimitError);
}

TEST_CASE("buchberger over F_p", "[groebner][fp]") {
    auto ctx = fpring(32003, 3);
    Ideal<GfP> I = Ideal<GfP>::of(
        {pp<GfP>("x1^2 + x2^2 - 1", ctx), pp<GfP>("x1*x2 - 1", ctx)});
    auto gb = reduced_groebner(I);
    CHECK(spolys_reduce_to_zero(gb));
    for (const auto& g : I.gens()) CHECK(normal_form(g, gb).is_zero());
}

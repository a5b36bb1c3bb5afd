#pragma once

#include <random>
#include <string>
#include <vector>

#include "radgen/radgen.hpp"

namespace radgen_test {

using namespace radgen;

inline CtxPtr<Rational> qring(std::size_t n, OrderKind ord = OrderKind::grevlex) {
    return make_ring_q(default_vars(n), ord);
}

inline CtxPtr<GfP> fpring(std::uint64_t p, std::size_t n,
                          OrderKind ord = OrderKind::grevlex) {
    return make_ring_fp(p, default_vars(n), ord);
}

template <class F>
Polynomial<F> pp(const std::string& text, const CtxPtr<F>& ctx) {
    return parse_poly<F>(text, ctx);
}

inline Polynomial<Rational> qp(const std::string& text, const CtxPtr<Rational>& ctx) {
    return parse_poly<Rational>(text, ctx);
}

// deterministic small random polynomial: up to max_terms monomials of total
// degree <= max_deg, integer coefficients in [-bound, bound]
template <class F>
Polynomial<F> random_poly(const CtxPtr<F>& ctx, std::mt19937& rng,
                          std::size_t max_terms = 4, unsigned max_deg = 2,
                          long bound = 5) {
    std::uniform_int_distribution<std::size_t> nterms(0, max_terms);
    std::uniform_int_distribution<long> coeff(-bound, bound);
    std::uniform_int_distribution<unsigned> deg(0, max_deg);
    std::uniform_int_distribution<std::size_t> var(0, ctx->nvars() - 1);

    std::vector<Term<F>> terms;
    std::size_t k = nterms(rng);
    for (std::size_t t = 0; t < k; ++t) {
        std::vector<Exponent> e(ctx->nvars(), 0);
        unsigned d = deg(rng);
        for (unsigned i = 0; i < d; ++i) e[var(rng)] += 1;
        long c = coeff(rng);
        terms.push_back({Monomial(std::move(e)), ctx->scalar(c)});
    }
    return Polynomial<F>::from_terms(ctx, std::move(terms));
}

// random monomial with per-variable exponent <= max_exp (possibly constant 1)
template <class F>
Polynomial<F> random_monomial(const CtxPtr<F>& ctx, std::mt19937& rng,
                              unsigned max_exp = 3) {
    std::uniform_int_distribution<unsigned> exp(0, max_exp);
    std::vector<Exponent> e(ctx->nvars(), 0);
    for (std::size_t i = 0; i < ctx->nvars(); ++i) e[i] = exp(rng);
    return Polynomial<F>::from_terms(ctx, {{Monomial(std::move(e)), ctx->one()}});
}

}  // namespace radgen_test

#pragma once

#include <string>
#include <vector>

#include "radgen/groebner.hpp"
#include "radgen/ideal.hpp"

namespace radgen {

// Generators of I ∩ K[remaining vars], returned over the context of the
// remaining variables (same field, same order kind). Computed from a
// dedicated lex basis with the eliminated variables in front.
template <class F>
Ideal<F> eliminate(const Ideal<F>& I, const std::vector<std::string>& drop_vars,
                   const GbLimits& limits = {}) {
    const auto& ctx = I.ctx();
    std::vector<bool> drop(ctx->nvars(), false);
    for (const auto& name : drop_vars) {
        auto idx = ctx->var_index(name);
        if (!idx) throw ValueError("eliminate: unknown variable " + name);
        drop[*idx] = true;
    }
    std::vector<std::string> front, back;
    for (std::size_t i = 0; i < ctx->nvars(); ++i)
        (drop[i] ? front : back).push_back(ctx->vars()[i]);

    auto ectx = RingContext<F>::create(
        [&] {
            std::vector<std::string> v = front;
            v.insert(v.end(), back.begin(), back.end());
            return v;
        }(),
        OrderKind::lex, ctx->proto());

    GroebnerBasis<F> rgb = reduced_groebner(I.mapped_to(ectx), limits);

    auto rctx = RingContext<F>::create(back, ctx->order(), ctx->proto());
    std::vector<Polynomial<F>> kept;
    for (const auto& g : rgb.elems) {
        bool free_of_dropped = true;
        for (const auto& t : g.terms())
            for (std::size_t i = 0; i < front.size() && free_of_dropped; ++i)
                if (t.mono[i]) free_of_dropped = false;
        if (free_of_dropped) kept.push_back(g.mapped_to(rctx));
    }
    return Ideal<F>(rctx, std::move(kept));
}

// I ∩ J via the standard trick: eliminate t from t·I + (1−t)·J in the ring
// extended by t. Result generators lie in both inputs.
template <class F>
Ideal<F> intersect(const Ideal<F>& I, const Ideal<F>& J, const GbLimits& limits = {}) {
    require_same_context<F>(I.ctx(), J.ctx(), "intersect");
    const auto& ctx = I.ctx();
    if (I.is_zero_ideal() || J.is_zero_ideal()) return Ideal<F>(ctx);

    std::string tname = ctx->fresh_var("t");
    auto ectx = ctx->extended({tname}, /*prepend=*/true, OrderKind::lex);
    Polynomial<F> t = Polynomial<F>::variable(ectx, 0);
    Polynomial<F> one_minus_t = Polynomial<F>::one(ectx) - t;

    std::vector<Polynomial<F>> gens;
    for (const auto& g : I.gens()) gens.push_back(t * g.mapped_to(ectx));
    for (const auto& h : J.gens()) gens.push_back(one_minus_t * h.mapped_to(ectx));

    Ideal<F> lifted = eliminate(Ideal<F>(ectx, std::move(gens)), {tname}, limits);

    std::vector<Polynomial<F>> back;
    for (const auto& g : lifted.gens()) back.push_back(g.mapped_to(ctx));
    return Ideal<F>(ctx, std::move(back));
}

}  // namespace radgen

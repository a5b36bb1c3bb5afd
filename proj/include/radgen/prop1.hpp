#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "radgen/lift.hpp"
#include "radgen/matrix_criterion.hpp"

namespace radgen {

// Input for the recursive construction on the ideal
// (a1 b1 + a2 b2) + (b1, b2)(g_1, ..., g_{n-1}).
template <class F>
struct Prop1Input {
    Polynomial<F> alpha1, alpha2, beta1, beta2;
    std::vector<Polynomial<F>> gammas;

    void validate() const {
        if (gammas.empty()) throw ValueError("prop1: need at least one gamma");
        const CtxPtr<F>& ctx = alpha1.ctx();
        require_same_context<F>(ctx, alpha2.ctx(), "prop1");
        require_same_context<F>(ctx, beta1.ctx(), "prop1");
        require_same_context<F>(ctx, beta2.ctx(), "prop1");
        for (const auto& g : gammas) require_same_context<F>(ctx, g.ctx(), "prop1");
    }
};

// Witness for f in (b1, b2): f = u1 b1 + u2 b2 exactly. Plain division by
// [b1, b2] is tried first (this is what reproduces the worked values); when
// it leaves a remainder, the remainder is lifted through a cofactor-tracked
// basis of (b1, b2).
template <class F>
std::pair<Polynomial<F>, Polynomial<F>> lift_in_ideal(const Polynomial<F>& f,
                                                      const Polynomial<F>& beta1,
                                                      const Polynomial<F>& beta2,
                                                      const GbLimits& limits = {}) {
    DivisionResult<F> div = divide_multi(f, {beta1, beta2});
    if (div.remainder.is_zero())
        return {div.quotients[0], div.quotients[1]};
    auto rest = lift_membership(div.remainder, {beta1, beta2}, limits);
    if (!rest)
        throw ValueError("lift_in_ideal: polynomial is not in (beta1, beta2)");
    return {div.quotients[0] + (*rest)[0], div.quotients[1] + (*rest)[1]};
}

template <class F>
struct Prop1Result {
    std::vector<Polynomial<F>> qs;   // q'_1, q_2, ..., q_n
    Ideal<F> target;                 // the product-ideal sum J
    Ideal<F> combined;               // (q'_1, q_2, ..., q_n)
    std::vector<MembershipCertificate> in_beta_ideal;  // each q in (b1, b2)
    std::optional<RadicalEqualResult> certification;
};

// Recursive construction: the base case is the n=2 matrix-criterion
// specialization; each further gamma lifts the current q_1 through (b1, b2)
// and replaces it by q'_1 = u1 q_1 + b2 g, appending q_n = u2 q_1 - b1 g.
template <class F>
Prop1Result<F> prop1_construct(const Prop1Input<F>& input, bool certify = true,
                               const GbLimits& limits = {}) {
    input.validate();
    const CtxPtr<F>& ctx = input.alpha1.ctx();

    std::vector<Polynomial<F>> qs;
    {
        Corollary1Result<F> base =
            corollary1(input.alpha1, input.alpha2, input.beta1, input.beta2,
                       input.gammas[0], /*certify=*/false, limits);
        qs = {base.q1, base.q2};
    }
    for (std::size_t m = 1; m < input.gammas.size(); ++m) {
        auto [u1, u2] = lift_in_ideal(qs[0], input.beta1, input.beta2, limits);
        Polynomial<F> q1_new = u1 * qs[0] + input.beta2 * input.gammas[m];
        Polynomial<F> qn = u2 * qs[0] - input.beta1 * input.gammas[m];
        qs[0] = std::move(q1_new);
        qs.push_back(std::move(qn));
    }

    Polynomial<F> binomial = input.alpha1 * input.beta1 + input.alpha2 * input.beta2;
    std::vector<Polynomial<F>> target_gens{binomial};
    for (const auto& g : input.gammas) {
        target_gens.push_back(input.beta1 * g);
        target_gens.push_back(input.beta2 * g);
    }

    Prop1Result<F> res{.qs = qs,
                       .target = Ideal<F>(ctx, std::move(target_gens)),
                       .combined = Ideal<F>(ctx, qs),
                       .in_beta_ideal = {},
                       .certification = std::nullopt};

    Ideal<F> beta_ideal(ctx, {input.beta1, input.beta2});
    for (const auto& q : qs) {
        res.in_beta_ideal.push_back(ideal_member(q, beta_ideal, limits));
        if (!res.in_beta_ideal.back().positive())
            throw ValueError("prop1: constructed generator fell outside (beta1, beta2); "
                             "this indicates an engine bug");
    }
    if (certify) res.certification = radical_equal(res.target, res.combined, limits);
    return res;
}

}  // namespace radgen

#pragma once

#include <optional>
#include <vector>

#include "radgen/groebner.hpp"

namespace radgen {

namespace detail {

// Polynomial together with cofactors over the original generator list:
// value == sum cof[i] * gens[i] at all times.
template <class F>
struct Tracked {
    Polynomial<F> value;
    std::vector<Polynomial<F>> cof;
};

// Fully reduce t.value by the basis, mirroring every subtraction on the
// cofactors. Terms parked in the remainder stay part of the tracked sum.
template <class F>
Tracked<F> tracked_reduce(Tracked<F> t, const std::vector<Tracked<F>>& basis) {
    Polynomial<F> work = t.value;
    std::vector<Term<F>> rem;
    while (!work.is_zero()) {
        const Term<F>& lt = work.leading_term();
        bool divided = false;
        for (const auto& b : basis) {
            if (!b.value.leading_monomial().divides(lt.mono)) continue;
            Monomial m = lt.mono.quotient_by(b.value.leading_monomial());
            F c = lt.coeff / b.value.leading_coeff();
            work = work - b.value.mul_term(m, c);
            for (std::size_t i = 0; i < t.cof.size(); ++i)
                t.cof[i] = t.cof[i] - b.cof[i].mul_term(m, c);
            divided = true;
            break;
        }
        if (!divided) {
            rem.push_back(lt);
            work = work.without_leading();
        }
    }
    t.value = Polynomial<F>::from_terms(t.value.ctx(), std::move(rem));
    return t;
}

}  // namespace detail

// Exact membership witness: coefficients a_i with f == sum a_i * gens[i],
// or nullopt when f is not in the ideal. A Groebner basis is completed with
// cofactor tracking, then f is divided against it and the quotients are
// pushed back through the tracked cofactors.
template <class F>
std::optional<std::vector<Polynomial<F>>> lift_membership(
    const Polynomial<F>& f, const std::vector<Polynomial<F>>& gens,
    const GbLimits& limits = {}) {
    CtxPtr<F> ctx = f.ctx();
    using detail::Tracked;

    std::vector<Tracked<F>> basis;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].is_zero()) continue;
        require_same_context<F>(ctx, gens[i].ctx(), "lift_membership");
        Tracked<F> t{gens[i], std::vector<Polynomial<F>>(gens.size(), Polynomial<F>::zero(ctx))};
        t.cof[i] = Polynomial<F>::one(ctx);
        basis.push_back(std::move(t));
    }
    if (basis.empty())
        return f.is_zero() ? std::optional(std::vector<Polynomial<F>>(
                                 gens.size(), Polynomial<F>::zero(ctx)))
                           : std::nullopt;

    OrderKind ord = ctx->order();
    std::set<detail::SPair, detail::SPairLess<F>> pending{detail::SPairLess<F>{ord}};
    auto push_pair = [&](std::size_t i, std::size_t j) {
        Monomial l = Monomial::lcm(basis[i].value.leading_monomial(),
                                   basis[j].value.leading_monomial());
        pending.insert(detail::SPair{l.total_degree(), l, i, j});
    };
    for (std::size_t j = 1; j < basis.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) push_pair(i, j);

    std::size_t processed = 0;
    while (!pending.empty()) {
        if (++processed > limits.max_pairs)
            throw ResourceLimitError("lift_membership: pair limit exceeded");
        detail::SPair pr = *pending.begin();
        pending.erase(pending.begin());
        const auto& bi = basis[pr.i];
        const auto& bj = basis[pr.j];
        if (bi.value.leading_monomial().coprime_with(bj.value.leading_monomial()))
            continue;
        Monomial mi = pr.lcm.quotient_by(bi.value.leading_monomial());
        Monomial mj = pr.lcm.quotient_by(bj.value.leading_monomial());
        F ci = bi.value.leading_coeff().inverse();
        F cj = bj.value.leading_coeff().inverse();
        Tracked<F> s{bi.value.mul_term(mi, ci) - bj.value.mul_term(mj, cj),
                     std::vector<Polynomial<F>>()};
        s.cof.reserve(gens.size());
        for (std::size_t k = 0; k < gens.size(); ++k)
            s.cof.push_back(bi.cof[k].mul_term(mi, ci) - bj.cof[k].mul_term(mj, cj));
        Tracked<F> r = detail::tracked_reduce(std::move(s), basis);
        if (r.value.is_zero()) continue;
        basis.push_back(std::move(r));
        if (basis.size() > limits.max_basis)
            throw ResourceLimitError("lift_membership: basis size limit exceeded");
        for (std::size_t i = 0; i + 1 < basis.size(); ++i)
            push_pair(i, basis.size() - 1);
    }

    // divide f by the completed basis, tracking quotients
    Tracked<F> h{f, std::vector<Polynomial<F>>(gens.size(), Polynomial<F>::zero(ctx))};
    Polynomial<F> work = f;
    bool exact = true;
    while (!work.is_zero()) {
        const Term<F>& lt = work.leading_term();
        bool divided = false;
        for (const auto& b : basis) {
            if (!b.value.leading_monomial().divides(lt.mono)) continue;
            Monomial m = lt.mono.quotient_by(b.value.leading_monomial());
            F c = lt.coeff / b.value.leading_coeff();
            work = work - b.value.mul_term(m, c);
            for (std::size_t i = 0; i < gens.size(); ++i)
                h.cof[i] = h.cof[i] + b.cof[i].mul_term(m, c);
            divided = true;
            break;
        }
        if (!divided) { exact = false; break; }
    }
    if (!exact) return std::nullopt;
    return h.cof;
}

}  // namespace radgen

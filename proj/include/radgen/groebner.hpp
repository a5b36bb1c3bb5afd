#pragma once

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "radgen/ideal.hpp"
#include "radgen/polynomial.hpp"

namespace radgen {

// Safety caps: Buchberger terminates, but badly-posed inputs can blow up
// long before that. Hitting a cap raises ResourceLimitError.
struct GbLimits {
    std::size_t max_pairs = 1u << 20;
    std::size_t max_basis = 1u << 14;
};

struct GbStats {
    std::uint64_t pairs_processed = 0;
    std::uint64_t zero_reductions = 0;
    std::uint64_t basis_additions = 0;
};

template <class F>
struct GroebnerBasis {
    CtxPtr<F> ctx;
    std::vector<Polynomial<F>> elems;
    bool reduced = false;
    GbStats stats;

    bool is_unit() const {
        return elems.size() == 1 && elems.front().is_constant() && !elems.front().is_zero();
    }
};

template <class F>
Polynomial<F> s_polynomial(const Polynomial<F>& f, const Polynomial<F>& g) {
    require_same_context<F>(f.ctx(), g.ctx(), "s_polynomial");
    if (f.is_zero() || g.is_zero()) throw ValueError("s_polynomial of zero");
    Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
    Monomial mf = l.quotient_by(f.leading_monomial());
    Monomial mg = l.quotient_by(g.leading_monomial());
    return f.mul_term(mf, f.leading_coeff().inverse()) -
           g.mul_term(mg, g.leading_coeff().inverse());
}

namespace detail {

struct SPair {
    unsigned long deg;      // total degree of the lcm (normal selection key)
    Monomial lcm;
    std::size_t i, j;       // i < j
};

// normal strategy: smallest lcm degree first, ties by lcm order then indices
template <class F>
struct SPairLess {
    OrderKind ord;
    bool operator()(const SPair& a, const SPair& b) const {
        if (a.deg != b.deg) return a.deg < b.deg;
        auto c = cmp_monomials(ord, a.lcm, b.lcm);
        if (c != std::strong_ordering::equal)
            return c == std::strong_ordering::less;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

}  // namespace detail

// Buchberger completion with normal (minimal lcm degree) pair selection and
// the Gebauer-Moeller form of the coprime and chain criteria: new pairs are
// pruned against each other and against the queue at insertion time, and
// basis elements whose leading monomial becomes divisible by a newer one are
// retired from pair creation and reduction. Elements of
// gens[0..known_gb_prefix) are taken to be a Groebner basis already, so no
// pairs inside that prefix are ever formed — used to certify against a
// precomputed basis incrementally.
template <class F>
GroebnerBasis<F> buchberger(const Ideal<F>& I, const GbLimits& limits = {},
                            std::size_t known_gb_prefix = 0) {
    GroebnerBasis<F> gb;
    gb.ctx = I.ctx();
    OrderKind ord = I.ctx()->order();

    std::deque<Polynomial<F>> basis;  // stable references under push_back
    std::vector<bool> alive;
    std::vector<const Polynomial<F>*> reducers;  // alive elements, insertion order

    using detail::SPair;
    std::set<SPair, detail::SPairLess<F>> pending{detail::SPairLess<F>{ord}};

    auto rebuild_reducers = [&] {
        reducers.clear();
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (alive[i]) reducers.push_back(&basis[i]);
    };

    // Gebauer-Moeller update: admit h, prune the pair queue, retire covered
    // basis elements
    auto add_element = [&](Polynomial<F> h) {
        const Monomial& lmh = h.leading_monomial();
        std::size_t t = basis.size();

        // old pairs made redundant by h (keep those whose lcm survives)
        for (auto it = pending.begin(); it != pending.end();) {
            const Monomial& lmi = basis[it->i].leading_monomial();
            const Monomial& lmj = basis[it->j].leading_monomial();
            if (lmh.divides(it->lcm) && Monomial::lcm(lmi, lmh) != it->lcm &&
                Monomial::lcm(lmj, lmh) != it->lcm)
                it = pending.erase(it);
            else
                ++it;
        }

        // candidate pairs (g, h) for alive g, pruned among themselves
        struct Cand {
            std::size_t g;
            Monomial lcm;
            bool coprime;
        };
        std::vector<Cand> cands;
        for (std::size_t g = 0; g < basis.size(); ++g)
            if (alive[g])
                cands.push_back({g,
                                 Monomial::lcm(basis[g].leading_monomial(), lmh),
                                 basis[g].leading_monomial().coprime_with(lmh)});
        std::vector<Cand> admitted;
        for (std::size_t a = 0; a < cands.size(); ++a) {
            bool keep = cands[a].coprime;
            if (!keep) {
                keep = true;
                for (std::size_t b = a + 1; b < cands.size() && keep; ++b)
                    if (cands[b].lcm.divides(cands[a].lcm)) keep = false;
                for (std::size_t b = 0; b < admitted.size() && keep; ++b)
                    if (admitted[b].lcm.divides(cands[a].lcm)) keep = false;
            }
            if (keep) admitted.push_back(cands[a]);
        }
        for (const auto& d : admitted)
            if (!d.coprime)
                pending.insert(SPair{d.lcm.total_degree(), d.lcm, d.g, t});

        // retire basis elements h now top-reduces
        bool retired = false;
        for (std::size_t g = 0; g < basis.size(); ++g)
            if (alive[g] && lmh.divides(basis[g].leading_monomial())) {
                alive[g] = false;
                retired = true;
            }
        basis.push_back(std::move(h));
        alive.push_back(true);
        ++gb.stats.basis_additions;
        if (basis.size() > limits.max_basis)
            throw ResourceLimitError("buchberger: basis size limit exceeded");
        if (retired)
            rebuild_reducers();
        else
            reducers.push_back(&basis.back());
    };

    std::size_t idx = 0;
    for (const auto& g : I.gens()) {
        if (idx < known_gb_prefix) {
            basis.push_back(g.monic());
            alive.push_back(true);
        } else {
            add_element(g.monic());
        }
        ++idx;
    }
    rebuild_reducers();

    while (!pending.empty()) {
        if (++gb.stats.pairs_processed > limits.max_pairs)
            throw ResourceLimitError("buchberger: pair limit exceeded");
        SPair pr = *pending.begin();
        pending.erase(pending.begin());

        Polynomial<F> s = s_polynomial(basis[pr.i], basis[pr.j]);
        Polynomial<F> r = reduce_remainder(s, reducers);
        if (r.is_zero()) {
            ++gb.stats.zero_reductions;
            continue;
        }
        add_element(r.monic());
    }

    for (std::size_t i = 0; i < basis.size(); ++i)
        if (alive[i]) gb.elems.push_back(basis[i]);
    return gb;
}

namespace detail {

// Unique reduced basis of an already-completed basis: monic, minimal (no
// leading monomial divides another), fully tail-reduced, sorted descending by
// leading monomial.
template <class F>
GroebnerBasis<F> interreduce(const GroebnerBasis<F>& gb) {
    GroebnerBasis<F> out;
    out.ctx = gb.ctx;
    out.stats = gb.stats;
    out.reduced = true;
    if (gb.elems.empty()) return out;

    OrderKind ord = gb.ctx->order();
    std::vector<Polynomial<F>> work;
    work.reserve(gb.elems.size());
    for (const auto& g : gb.elems)
        if (!g.is_zero()) work.push_back(g.monic());

    // ascending by LM, so any potential divisor is seen before its multiples
    std::sort(work.begin(), work.end(), [&](const auto& a, const auto& b) {
        return monomial_less(ord, a.leading_monomial(), b.leading_monomial());
    });
    std::vector<Polynomial<F>> kept;
    for (const auto& g : work) {
        bool redundant = false;
        for (const auto& h : kept)
            if (h.leading_monomial().divides(g.leading_monomial())) { redundant = true; break; }
        if (!redundant) kept.push_back(g);
    }

    // tail-reduce: keep LT(g), fully reduce the rest. Tail terms are below
    // LM(g) in the order, so g itself can never act as its own reducer here.
    std::vector<Polynomial<F>> result;
    result.reserve(kept.size());
    for (const auto& g : kept) {
        Polynomial<F> lt = Polynomial<F>::from_terms(gb.ctx, {g.leading_term()});
        result.push_back(lt + reduce_remainder(g.without_leading(), kept));
    }
    std::sort(result.begin(), result.end(), [&](const auto& a, const auto& b) {
        return monomial_less(ord, b.leading_monomial(), a.leading_monomial());
    });
    out.elems = std::move(result);
    return out;
}

}  // namespace detail

// The unique reduced basis of the ideal spanned by gb's elements. Inputs that
// are not yet Groebner bases are completed first, so this is safe to call on
// arbitrary generating sets.
template <class F>
GroebnerBasis<F> reduce_basis(const GroebnerBasis<F>& gb, const GbLimits& limits = {}) {
    if (gb.reduced) return gb;
    return detail::interreduce(buchberger(Ideal<F>(gb.ctx, gb.elems), limits));
}

template <class F>
GroebnerBasis<F> reduced_groebner(const Ideal<F>& I, const GbLimits& limits = {},
                                  std::size_t known_gb_prefix = 0) {
    return detail::interreduce(buchberger(I, limits, known_gb_prefix));
}

// Remainder of full reduction; zero iff f lies in the ideal spanned by gb.
// Deterministic for a reduced basis.
template <class F>
Polynomial<F> normal_form(const Polynomial<F>& f, const GroebnerBasis<F>& gb) {
    require_same_context<F>(f.ctx(), gb.ctx, "normal_form");
    return reduce_remainder(f, gb.elems);
}

}  // namespace radgen

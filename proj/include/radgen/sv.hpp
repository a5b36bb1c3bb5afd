#pragma once

#include <optional>
#include <string>
#include <vector>

#include "radgen/membership.hpp"

namespace radgen {

// Partition input for the Schmitt-Vogel combination: subsets P_0..P_r of the
// generating set, a positive exponent e(p) per element, and the variant of
// the pairwise side condition to enforce. P_0 must have exactly one element.
template <class F>
struct SvPartition {
    enum class Variant { lemma1, lemma2 };

    CtxPtr<F> ctx;
    std::vector<std::vector<Polynomial<F>>> subsets;
    std::vector<std::vector<unsigned long>> exponents;  // same shape as subsets
    Variant variant = Variant::lemma2;

    void validate() const {
        if (subsets.empty()) throw ValueError("partition: no subsets");
        if (subsets[0].size() != 1)
            throw ValueError("partition: P_0 must have exactly one element");
        if (exponents.size() != subsets.size())
            throw ValueError("partition: exponent shape mismatch");
        for (std::size_t l = 0; l < subsets.size(); ++l) {
            if (subsets[l].empty())
                throw ValueError("partition: empty subset P_" + std::to_string(l));
            if (exponents[l].size() != subsets[l].size())
                throw ValueError("partition: exponent shape mismatch in P_" + std::to_string(l));
            for (std::size_t i = 0; i < subsets[l].size(); ++i) {
                if (subsets[l][i].is_zero())
                    throw ValueError("partition: zero element in P_" + std::to_string(l));
                require_same_context<F>(ctx, subsets[l][i].ctx(), "partition");
                if (exponents[l][i] < 1)
                    throw ValueError("partition: exponents must be positive");
            }
        }
    }

    // (P): the ideal generated by the union, in subset order.
    Ideal<F> generating_ideal() const {
        std::vector<Polynomial<F>> gens;
        for (const auto& s : subsets) gens.insert(gens.end(), s.begin(), s.end());
        return Ideal<F>(ctx, std::move(gens));
    }

    static SvPartition with_unit_exponents(CtxPtr<F> ctx,
                                           std::vector<std::vector<Polynomial<F>>> subsets,
                                           Variant variant = Variant::lemma2) {
        SvPartition p;
        p.ctx = std::move(ctx);
        p.variant = variant;
        p.exponents.reserve(subsets.size());
        for (const auto& s : subsets)
            p.exponents.emplace_back(s.size(), 1ul);
        p.subsets = std::move(subsets);
        return p;
    }
};

struct SvViolation {
    std::size_t level;
    std::size_t first, second;  // element positions within P_level
    std::string p_first, p_second;
};

struct SvCheckReport {
    bool ok = true;
    std::vector<SvViolation> violations;  // in (level, first, second) order
};

// Original side condition: for every pair p != p'' in P_l there must be a
// SINGLE element p' of an earlier subset with p*p'' in (p').
template <class F>
SvCheckReport check_sv_lemma1(const SvPartition<F>& part, const GbLimits& limits = {}) {
    part.validate();
    SvCheckReport report;
    for (std::size_t l = 1; l < part.subsets.size(); ++l) {
        const auto& level = part.subsets[l];
        for (std::size_t i = 0; i < level.size(); ++i) {
            for (std::size_t j = i + 1; j < level.size(); ++j) {
                if (level[i] == level[j]) continue;
                Polynomial<F> prod = level[i] * level[j];
                bool found = false;
                for (std::size_t lp = 0; lp < l && !found; ++lp)
                    for (const auto& cand : part.subsets[lp]) {
                        if (reduce_remainder(prod, {cand.monic()}).is_zero()) {
                            found = true;
                            break;
                        }
                    }
                (void)limits;
                if (!found) {
                    report.ok = false;
                    report.violations.push_back(
                        {l, i, j, level[i].str(), level[j].str()});
                }
            }
        }
    }
    return report;
}

// Generalized side condition: p*p'' only needs some power inside the ideal
// generated by the union of the earlier subsets.
template <class F>
SvCheckReport check_sv_lemma2(const SvPartition<F>& part, const GbLimits& limits = {}) {
    part.validate();
    SvCheckReport report;
    std::vector<Polynomial<F>> prefix;
    prefix.insert(prefix.end(), part.subsets[0].begin(), part.subsets[0].end());
    for (std::size_t l = 1; l < part.subsets.size(); ++l) {
        Ideal<F> earlier(part.ctx, prefix);
        std::optional<detail::RabinowitschEnv<F>> env;
        const auto& level = part.subsets[l];
        for (std::size_t i = 0; i < level.size(); ++i) {
            for (std::size_t j = i + 1; j < level.size(); ++j) {
                if (level[i] == level[j]) continue;
                if (!env) env = detail::make_rabinowitsch_env(earlier, limits);
                auto cert = detail::radical_member_in_env(level[i] * level[j], earlier,
                                                          *env, limits);
                if (!cert.positive()) {
                    report.ok = false;
                    report.violations.push_back(
                        {l, i, j, level[i].str(), level[j].str()});
                }
            }
        }
        prefix.insert(prefix.end(), level.begin(), level.end());
    }
    return report;
}

template <class F>
SvCheckReport check_sv(const SvPartition<F>& part, const GbLimits& limits = {}) {
    return part.variant == SvPartition<F>::Variant::lemma1
               ? check_sv_lemma1(part, limits)
               : check_sv_lemma2(part, limits);
}

template <class F>
struct SvCombineResult {
    std::vector<Polynomial<F>> qs;  // q_l = sum of p^e(p) over P_l
    Ideal<F> target;                // (P)
    Ideal<F> combined;              // (q_0..q_r)
    SvCheckReport check;
    std::optional<RadicalEqualResult> certification;
};

// The combination q_l = sum_{p in P_l} p^{e(p)}. By default the variant's
// side condition must pass and the radical equality sqrt(P) = sqrt(q_0..q_r)
// is certified and attached; with force=true the combination is emitted
// as-is, uncertified. certify=false skips only the certification step (for
// callers that certify against their own target afterwards).
template <class F>
SvCombineResult<F> sv_combine(const SvPartition<F>& part, bool force = false,
                              const GbLimits& limits = {}, bool certify = true) {
    part.validate();
    SvCombineResult<F> res{.qs = {},
                           .target = part.generating_ideal(),
                           .combined = Ideal<F>(part.ctx),
                           .check = {},
                           .certification = std::nullopt};
    res.check = check_sv(part, limits);
    if (!res.check.ok && !force)
        throw ConditionError("sv_combine: side condition failed for " +
                             std::to_string(res.check.violations.size()) +
                             " pair(s); pass force to emit anyway");
    for (std::size_t l = 0; l < part.subsets.size(); ++l) {
        Polynomial<F> q(part.ctx);
        for (std::size_t i = 0; i < part.subsets[l].size(); ++i)
            q = q + part.subsets[l][i].pow(part.exponents[l][i]);
        res.qs.push_back(std::move(q));
    }
    res.combined = Ideal<F>(part.ctx, res.qs);
    if (!force && certify)
        res.certification = radical_equal(res.target, res.combined, limits);
    return res;
}

}  // namespace radgen

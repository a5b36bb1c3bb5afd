#pragma once

#include <string>
#include <utility>
#include <vector>

#include "radgen/groebner.hpp"
#include "radgen/ideal.hpp"
#include "radgen/parse.hpp"

namespace radgen {

enum class Verdict { member, radical_member, non_member };

inline std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::member: return "member";
        case Verdict::radical_member: return "radical-member";
        case Verdict::non_member: return "non-member";
    }
    return "?";
}

// Machine-checkable record of one membership query. Everything is stored as
// canonical text so certificates survive serialization and can be replayed.
struct MembershipCertificate {
    std::string query;
    std::string ideal_hash;
    std::string field;
    std::string order;
    Verdict verdict = Verdict::non_member;
    bool radical_query = false;

    // Rabinowitsch witness (radical queries only): the fresh variable and the
    // reduced basis of I + (1 - t*f) in the extended ring. For a positive
    // verdict that basis is {1}; otherwise it documents the failure, and
    // failing_normal_form holds the irreducible normal form.
    std::string fresh_var;
    std::size_t fresh_var_index = 0;
    std::vector<std::string> witness_basis;
    std::string failing_normal_form;

    // resource counters of the deciding basis computation
    std::uint64_t pairs_processed = 0;
    std::size_t basis_size = 0;

    bool positive() const { return verdict != Verdict::non_member; }
};

template <class F>
MembershipCertificate ideal_member(const Polynomial<F>& f, const Ideal<F>& I,
                                   const GbLimits& limits = {}) {
    require_same_context<F>(f.ctx(), I.ctx(), "ideal_member");
    MembershipCertificate cert;
    cert.query = f.str();
    cert.ideal_hash = ideal_hash(I);
    cert.field = I.ctx()->field_descriptor();
    cert.order = order_name(I.ctx()->order());
    GroebnerBasis<F> rgb = reduced_groebner(I, limits);
    cert.pairs_processed = rgb.stats.pairs_processed;
    cert.basis_size = rgb.elems.size();
    Polynomial<F> nf = normal_form(f, rgb);
    if (nf.is_zero()) {
        cert.verdict = Verdict::member;
    } else {
        cert.verdict = Verdict::non_member;
        cert.failing_normal_form = nf.str();
    }
    return cert;
}

namespace detail {

// I's generators mapped into ctx extended by one fresh variable (appended
// last, same order kind). A reduced basis of t-free polynomials stays a
// reduced basis after this embedding for lex and grevlex, which is what makes
// the incremental certification below sound.
template <class F>
struct RabinowitschEnv {
    CtxPtr<F> ectx;
    std::string fresh;
    GroebnerBasis<F> target_gb;  // reduced GB of the embedded ideal
};

template <class F>
RabinowitschEnv<F> make_rabinowitsch_env(const Ideal<F>& I, const GbLimits& limits) {
    RabinowitschEnv<F> env;
    env.fresh = I.ctx()->fresh_var("t");
    env.ectx = I.ctx()->extended({env.fresh}, /*prepend=*/false, I.ctx()->order());
    env.target_gb = reduced_groebner(I.mapped_to(env.ectx), limits);
    return env;
}

template <class F>
MembershipCertificate radical_member_in_env(const Polynomial<F>& f, const Ideal<F>& I,
                                            const RabinowitschEnv<F>& env,
                                            const GbLimits& limits) {
    MembershipCertificate cert;
    cert.query = f.str();
    cert.ideal_hash = ideal_hash(I);
    cert.field = I.ctx()->field_descriptor();
    cert.order = order_name(I.ctx()->order());
    cert.radical_query = true;
    cert.fresh_var = env.fresh;
    cert.fresh_var_index = env.ectx->nvars() - 1;

    Polynomial<F> t = Polynomial<F>::variable(env.ectx, cert.fresh_var_index);
    Polynomial<F> aug = Polynomial<F>::one(env.ectx) - t * f.mapped_to(env.ectx);

    std::vector<Polynomial<F>> gens = env.target_gb.elems;
    gens.push_back(std::move(aug));
    GroebnerBasis<F> rgb = reduced_groebner(Ideal<F>(env.ectx, std::move(gens)), limits,
                                            env.target_gb.elems.size());
    cert.pairs_processed = rgb.stats.pairs_processed;
    cert.basis_size = rgb.elems.size();
    for (const auto& g : rgb.elems) cert.witness_basis.push_back(g.str());
    if (rgb.is_unit()) {
        cert.verdict = Verdict::radical_member;
    } else {
        cert.verdict = Verdict::non_member;
        cert.failing_normal_form = normal_form(Polynomial<F>::one(env.ectx), rgb).str();
    }
    return cert;
}

}  // namespace detail

// f in sqrt(I), decided by the Rabinowitsch trick: f is a radical member iff
// 1 lies in I + (1 - t*f) for a fresh variable t.
template <class F>
MembershipCertificate radical_member(const Polynomial<F>& f, const Ideal<F>& I,
                                     const GbLimits& limits = {}) {
    require_same_context<F>(f.ctx(), I.ctx(), "radical_member");
    auto env = detail::make_rabinowitsch_env(I, limits);
    return detail::radical_member_in_env(f, I, env, limits);
}

struct RadicalEqualResult {
    bool equal = false;
    std::vector<MembershipCertificate> lhs_in_rhs;  // one per generator of I
    std::vector<MembershipCertificate> rhs_in_lhs;  // one per generator of J
};

// sqrt(I) == sqrt(J): every generator of I is a radical member of J and vice
// versa. The embedded basis of each side is computed once and reused across
// that side's queries.
template <class F>
RadicalEqualResult radical_equal(const Ideal<F>& I, const Ideal<F>& J,
                                 const GbLimits& limits = {}) {
    require_same_context<F>(I.ctx(), J.ctx(), "radical_equal");
    RadicalEqualResult res;
    res.equal = true;
    auto envJ = detail::make_rabinowitsch_env(J, limits);
    for (const auto& g : I.gens()) {
        res.lhs_in_rhs.push_back(detail::radical_member_in_env(g, J, envJ, limits));
        res.equal = res.equal && res.lhs_in_rhs.back().positive();
    }
    auto envI = detail::make_rabinowitsch_env(I, limits);
    for (const auto& g : J.gens()) {
        res.rhs_in_lhs.push_back(detail::radical_member_in_env(g, I, envI, limits));
        res.equal = res.equal && res.rhs_in_lhs.back().positive();
    }
    return res;
}

}  // namespace radgen

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "radgen/dimension.hpp"
#include "radgen/elimination.hpp"
#include "radgen/prop1.hpp"
#include "radgen/sv.hpp"

namespace radgen {

// One bundled reference case: a target ideal, its known decomposition and
// quotient dimension, the construction recipe that produces a small
// up-to-radical generating set, and golden output values where the source
// prints them explicitly.
template <class F>
struct PaperCase {
    enum class Recipe { sv_combine, corollary1, prop1 };

    std::string id;
    CtxPtr<F> ctx;
    Ideal<F> target;
    std::vector<Ideal<F>> components;
    int claimed_dim = 0;
    Recipe recipe = Recipe::prop1;
    std::optional<SvPartition<F>> partition;   // sv_combine recipe
    std::optional<Prop1Input<F>> construction; // corollary1 / prop1 recipes
    std::vector<std::string> golden;           // canonical text, empty when unknown
    std::string lower_bound_note;              // documentation only, never checked

    std::size_t expected_generator_count() const {
        if (recipe == Recipe::sv_combine) return partition->subsets.size();
        return construction->gammas.size() + 1;
    }
};

inline std::string recipe_name(int r) {
    switch (r) {
        case 0: return "sv_combine";
        case 1: return "corollary1";
        case 2: return "prop1";
    }
    return "?";
}

namespace detail {

template <class F>
Polynomial<F> pv(const CtxPtr<F>& ctx, std::size_t i) {  // 1-based variable
    return Polynomial<F>::variable(ctx, i - 1);
}

// I_n = (x1x2+x3x4, x1x5..x1xn, x3x5..x3xn), the n>=5 family.
template <class F>
PaperCase<F> build_family_case(std::size_t n, const F& proto, OrderKind order) {
    auto ctx = RingContext<F>::create(default_vars(n), order, proto);
    auto x = [&](std::size_t i) { return pv(ctx, i); };

    Polynomial<F> binomial = x(1) * x(2) + x(3) * x(4);
    std::vector<Polynomial<F>> gens{binomial};
    for (std::size_t i = 5; i <= n; ++i) gens.push_back(x(1) * x(i));
    for (std::size_t i = 5; i <= n; ++i) gens.push_back(x(3) * x(i));

    std::vector<Polynomial<F>> comp1{binomial};
    for (std::size_t i = 5; i <= n; ++i) comp1.push_back(x(i));

    PaperCase<F> c;
    c.id = "in:" + std::to_string(n);
    c.ctx = ctx;
    c.target = Ideal<F>(ctx, std::move(gens));
    c.components = {Ideal<F>(ctx, std::move(comp1)), Ideal<F>(ctx, {x(1), x(3)})};
    c.claimed_dim = static_cast<int>(n) - 2;
    c.recipe = PaperCase<F>::Recipe::prop1;
    Prop1Input<F> in{x(2), x(4), x(1), x(3), {}};
    for (std::size_t i = 5; i <= n; ++i) in.gammas.push_back(x(i));
    c.construction = std::move(in);
    c.lower_bound_note = "known lower bound ara = " + std::to_string(n - 3) +
                         " (etale cohomology argument; not machine-checked)";
    if (n == 5) {
        c.golden = {"x1*x2^2 + x2*x3*x4 + x3*x5", "x1*x2*x4 + x3*x4^2 - x1*x5"};
    } else if (n == 6) {
        c.golden = {"x1*x2^4 + x2^3*x3*x4 + x2^2*x3*x5 + x3*x6",
                    "x1*x2*x4 + x3*x4^2 - x1*x5",
                    "x1*x2^3*x4 + x2^2*x3*x4^2 + x1*x2^2*x5 + 2*x2*x3*x4*x5 + x3*x5^2 - x1*x6"};
    }
    return c;
}

}  // namespace detail

// Instantiate a reference case over the field of `proto`. Valid ids:
// example1, example2, j6, in:<n> with n >= 5.
template <class F>
PaperCase<F> build_case(const std::string& id, const F& proto,
                        OrderKind order = OrderKind::grevlex) {
    using detail::pv;
    if (id == "example1") {
        auto ctx = RingContext<F>::create(default_vars(6), order, proto);
        auto x = [&](std::size_t i) { return pv(ctx, i); };
        Polynomial<F> binomial = x(1) * x(2) + x(3) * x(4);

        PaperCase<F> c;
        c.id = id;
        c.ctx = ctx;
        c.target = Ideal<F>(ctx, {binomial, x(1) * x(6), x(3) * x(6), x(5) * x(6)});
        c.components = {Ideal<F>(ctx, {binomial, x(6)}),
                        Ideal<F>(ctx, {x(1), x(3), x(5)})};
        c.claimed_dim = 4;
        c.recipe = PaperCase<F>::Recipe::sv_combine;
        c.partition = SvPartition<F>::with_unit_exponents(
            ctx,
            {{x(1) * x(6)}, {x(3) * x(6)}, {binomial, x(5) * x(6)}},
            SvPartition<F>::Variant::lemma2);
        c.golden = {"x1*x6", "x3*x6", "x1*x2 + x3*x4 + x5*x6"};
        c.lower_bound_note =
            "known lower bound ara = 3 (local cohomology argument; not machine-checked)";
        return c;
    }
    if (id == "example2") {
        PaperCase<F> c = detail::build_family_case<F>(5, proto, order);
        c.id = id;
        c.recipe = PaperCase<F>::Recipe::corollary1;
        c.lower_bound_note = "height 2 and ara = 2: a set-theoretic complete intersection";
        return c;
    }
    if (id == "j6") {
        PaperCase<F> c = detail::build_family_case<F>(6, proto, order);
        c.id = id;
        return c;
    }
    if (id.rfind("in:", 0) == 0) {
        std::size_t n = 0;
        try {
            n = std::stoul(id.substr(3));
        } catch (...) {
            throw ValueError("bad family case id: " + id);
        }
        if (n < 5) throw ValueError("family case needs n >= 5, got " + id);
        return detail::build_family_case<F>(n, proto, order);
    }
    throw ValueError("unknown case id: " + id);
}

struct DecompositionReport {
    bool ok = false;
    std::string detail;
};

// Exact ideal equality of I with the intersection of the components
// (mutual generator membership, not merely radical equality).
template <class F>
DecompositionReport verify_decomposition(const Ideal<F>& I,
                                         const std::vector<Ideal<F>>& components,
                                         const GbLimits& limits = {}) {
    if (components.empty()) return {false, "no components given"};
    Ideal<F> meet = components[0];
    for (std::size_t i = 1; i < components.size(); ++i)
        meet = intersect(meet, components[i], limits);

    GroebnerBasis<F> rgb_meet = reduced_groebner(meet, limits);
    GroebnerBasis<F> rgb_i = reduced_groebner(I, limits);
    for (const auto& g : I.gens())
        if (!normal_form(g, rgb_meet).is_zero())
            return {false, "generator " + g.str() + " is not in the intersection"};
    for (const auto& g : meet.gens())
        if (!normal_form(g, rgb_i).is_zero())
            return {false, "intersection element " + g.str() + " is not in the ideal"};
    return {true, ""};
}

// Per-claim verdicts; a claim that was not applicable stays unset.
struct CaseVerdicts {
    std::optional<bool> golden;
    bool radical_equality = false;
    std::optional<bool> decomposition;
    std::optional<bool> dimension;
    std::optional<bool> construction_membership;

    bool all() const {
        if (golden && !*golden) return false;
        if (!radical_equality) return false;
        if (decomposition && !*decomposition) return false;
        if (dimension && !*dimension) return false;
        if (construction_membership && !*construction_membership) return false;
        return true;
    }
};

struct CaseCertificate {
    std::string case_id;
    std::string field;
    std::string order;
    std::string recipe;
    std::vector<std::string> generators;  // constructed, canonical text
    CaseVerdicts verdicts;
    RadicalEqualResult radical_cert;
    int computed_dim = -1;
    std::string lower_bound_note;
    std::vector<std::string> notes;  // per-claim failure details

    std::uint64_t total_pairs() const {
        std::uint64_t s = 0;
        for (const auto& c : radical_cert.lhs_in_rhs) s += c.pairs_processed;
        for (const auto& c : radical_cert.rhs_in_lhs) s += c.pairs_processed;
        return s;
    }

    bool ok() const { return verdicts.all(); }
};

// Run a case's recipe and check every claim. Verification failures are
// reported in the certificate rather than thrown, so a certificate is always
// produced; only resource exhaustion escapes.
template <class F>
CaseCertificate certify_case(const PaperCase<F>& pc, const GbLimits& limits = {}) {
    CaseCertificate cert;
    cert.case_id = pc.id;
    cert.field = pc.ctx->field_descriptor();
    cert.order = order_name(pc.ctx->order());
    cert.recipe = recipe_name(static_cast<int>(pc.recipe));
    cert.lower_bound_note = pc.lower_bound_note;

    std::vector<Polynomial<F>> qs;
    if (pc.recipe == PaperCase<F>::Recipe::sv_combine) {
        SvCombineResult<F> r = sv_combine(*pc.partition, /*force=*/false, limits,
                                          /*certify=*/false);
        qs = std::move(r.qs);
    } else {
        Prop1Result<F> r = prop1_construct(*pc.construction, /*certify=*/false, limits);
        qs = std::move(r.qs);
        bool inside = true;
        for (const auto& c : r.in_beta_ideal) inside = inside && c.positive();
        cert.verdicts.construction_membership = inside;
    }
    for (const auto& q : qs) cert.generators.push_back(q.str());

    if (!pc.golden.empty()) {
        bool match = pc.golden.size() == qs.size();
        for (std::size_t i = 0; match && i < qs.size(); ++i) {
            Polynomial<F> expect = parse_poly<F>(pc.golden[i], pc.ctx);
            match = expect == qs[i];
            if (!match)
                cert.notes.push_back("golden mismatch at position " + std::to_string(i) +
                                     ": got " + qs[i].str());
        }
        cert.verdicts.golden = match;
    }

    cert.radical_cert = radical_equal(pc.target, Ideal<F>(pc.ctx, qs), limits);
    cert.verdicts.radical_equality = cert.radical_cert.equal;

    if (!pc.components.empty()) {
        DecompositionReport rep = verify_decomposition(pc.target, pc.components, limits);
        cert.verdicts.decomposition = rep.ok;
        if (!rep.ok) cert.notes.push_back("decomposition: " + rep.detail);
    }

    try {
        cert.computed_dim = dimension(pc.target, limits);
        cert.verdicts.dimension = (cert.computed_dim == pc.claimed_dim);
        if (!*cert.verdicts.dimension)
            cert.notes.push_back("dimension: computed " + std::to_string(cert.computed_dim) +
                                 ", claimed " + std::to_string(pc.claimed_dim));
    } catch (const ValueError& e) {
        cert.verdicts.dimension = false;
        cert.notes.push_back(std::string("dimension: ") + e.what());
    }
    return cert;
}

template <class F>
CaseCertificate certify_case(const std::string& id, const F& proto,
                             OrderKind order = OrderKind::grevlex,
                             const GbLimits& limits = {}) {
    return certify_case(build_case<F>(id, proto, order), limits);
}

// Deterministic corpus order for a full run.
inline std::vector<std::string> corpus_case_ids(std::size_t family_max = 8) {
    std::vector<std::string> ids{"example1", "example2", "j6"};
    for (std::size_t n = 5; n <= family_max; ++n)
        ids.push_back("in:" + std::to_string(n));
    return ids;
}

}  // namespace radgen

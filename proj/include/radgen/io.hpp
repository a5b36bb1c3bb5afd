#pragma once

#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "radgen/membership.hpp"
#include "radgen/paper_suite.hpp"
#include "radgen/sv.hpp"

namespace radgen {

using ordered_json = nlohmann::ordered_json;

// field descriptor as written in file headers and --field flags
struct FieldSpec {
    bool is_q = true;
    std::uint64_t p = 0;

    static FieldSpec parse(const std::string& s) {
        if (s == "Q") return {};
        if (s.rfind("Fp:", 0) == 0) {
            FieldSpec f;
            f.is_q = false;
            try {
                f.p = std::stoull(s.substr(3));
            } catch (...) {
                throw ValueError("bad field descriptor: " + s);
            }
            if (!is_prime(f.p)) throw ValueError("modulus " + std::to_string(f.p) + " is not prime");
            return f;
        }
        throw ValueError("bad field descriptor: " + s + " (expected Q or Fp:<prime>)");
    }

    std::string str() const { return is_q ? "Q" : "Fp:" + std::to_string(p); }
};

namespace detail {

inline std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    std::string s = (pos == std::string::npos) ? line : line.substr(0, pos);
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    for (std::string tok; in >> tok;) out.push_back(tok);
    return out;
}

}  // namespace detail

// Ideal file: header `ring <field> <var1> <var2> ...`, then one generator
// expression per nonempty line; `#` starts a comment.
struct IdealFileData {
    FieldSpec field;
    std::vector<std::string> vars;
    std::vector<std::string> gens;
};

inline IdealFileData read_ideal_file(std::istream& in) {
    IdealFileData data;
    bool have_header = false;
    std::string line;
    while (std::getline(in, line)) {
        std::string s = detail::strip_comment(line);
        if (s.empty()) continue;
        if (!have_header) {
            auto toks = detail::split_ws(s);
            if (toks.size() < 3 || toks[0] != "ring")
                throw ValueError("ideal file: expected header 'ring <field> <vars...>'");
            data.field = FieldSpec::parse(toks[1]);
            data.vars.assign(toks.begin() + 2, toks.end());
            have_header = true;
        } else {
            data.gens.push_back(s);
        }
    }
    if (!have_header) throw ValueError("ideal file: missing ring header");
    return data;
}

inline IdealFileData read_ideal_text(const std::string& text) {
    std::istringstream in(text);
    return read_ideal_file(in);
}

// Partition file: the ideal header, then `subset:` blocks; each block lists
// one generator expression per line, optionally followed by `exp: <int>`
// applying to the element above it.
struct PartitionElementData {
    std::string expr;
    unsigned long exp = 1;
};

struct PartitionFileData {
    FieldSpec field;
    std::vector<std::string> vars;
    std::vector<std::vector<PartitionElementData>> subsets;
};

inline PartitionFileData read_partition_file(std::istream& in) {
    PartitionFileData data;
    bool have_header = false;
    std::string line;
    while (std::getline(in, line)) {
        std::string s = detail::strip_comment(line);
        if (s.empty()) continue;
        if (!have_header) {
            auto toks = detail::split_ws(s);
            if (toks.size() < 3 || toks[0] != "ring")
                throw ValueError("partition file: expected header 'ring <field> <vars...>'");
            data.field = FieldSpec::parse(toks[1]);
            data.vars.assign(toks.begin() + 2, toks.end());
            have_header = true;
            continue;
        }
        if (s == "subset:") {
            data.subsets.emplace_back();
            continue;
        }
        if (s.rfind("exp:", 0) == 0) {
            if (data.subsets.empty() || data.subsets.back().empty())
                throw ValueError("partition file: exp: line without a preceding element");
            try {
                data.subsets.back().back().exp = std::stoul(s.substr(4));
            } catch (...) {
                throw ValueError("partition file: bad exponent line: " + s);
            }
            if (data.subsets.back().back().exp < 1)
                throw ValueError("partition file: exponents must be >= 1");
            continue;
        }
        if (data.subsets.empty())
            throw ValueError("partition file: expression before the first subset:");
        data.subsets.back().push_back({s, 1});
    }
    if (!have_header) throw ValueError("partition file: missing ring header");
    return data;
}

// Matrix-criterion input: {p: [expr...], rows: [{c: expr, i: int}...],
// alpha0: [expr...]}; the ring context comes from the accompanying ring file.
struct MatrixFileData {
    struct Row {
        std::string c;
        std::size_t i = 0;
    };
    std::vector<std::string> p;
    std::vector<Row> rows;
    std::vector<std::string> alpha0;
};

inline MatrixFileData read_matrix_json(const nlohmann::json& j) {
    MatrixFileData data;
    if (!j.is_object() || !j.contains("p") || !j.contains("rows") || !j.contains("alpha0"))
        throw ValueError("matrix input: need keys p, rows, alpha0");
    for (const auto& e : j.at("p")) data.p.push_back(e.get<std::string>());
    for (const auto& e : j.at("rows"))
        data.rows.push_back({e.at("c").get<std::string>(), e.at("i").get<std::size_t>()});
    for (const auto& e : j.at("alpha0")) data.alpha0.push_back(e.get<std::string>());
    return data;
}

// ---- typed materialization -------------------------------------------------

template <class F>
CtxPtr<F> context_for(const std::vector<std::string>& vars, OrderKind order, const F& proto) {
    return RingContext<F>::create(vars, order, proto);
}

template <class F>
Ideal<F> ideal_from_data(const IdealFileData& data, const CtxPtr<F>& ctx) {
    std::vector<Polynomial<F>> gens;
    gens.reserve(data.gens.size());
    for (const auto& s : data.gens) gens.push_back(parse_poly<F>(s, ctx));
    return Ideal<F>(ctx, std::move(gens));
}

template <class F>
SvPartition<F> partition_from_data(const PartitionFileData& data, const CtxPtr<F>& ctx,
                                   typename SvPartition<F>::Variant variant) {
    SvPartition<F> part;
    part.ctx = ctx;
    part.variant = variant;
    for (const auto& block : data.subsets) {
        part.subsets.emplace_back();
        part.exponents.emplace_back();
        for (const auto& el : block) {
            part.subsets.back().push_back(parse_poly<F>(el.expr, ctx));
            part.exponents.back().push_back(el.exp);
        }
    }
    return part;
}

template <class F>
MatrixCriterionInput<F> matrix_input_from_data(const MatrixFileData& data,
                                               const CtxPtr<F>& ctx) {
    MatrixCriterionInput<F> input;
    input.ctx = ctx;
    for (const auto& s : data.p) input.p.push_back(parse_poly<F>(s, ctx));
    for (const auto& r : data.rows)
        input.rows.push_back({parse_poly<F>(r.c, ctx), r.i});
    for (const auto& s : data.alpha0) input.alpha0.push_back(parse_poly<F>(s, ctx));
    return input;
}

// ---- JSON serialization ----------------------------------------------------

inline ordered_json to_json(const MembershipCertificate& c) {
    ordered_json j;
    j["query"] = c.query;
    j["ideal_hash"] = c.ideal_hash;
    j["verdict"] = verdict_name(c.verdict);
    if (!c.witness_basis.empty()) j["witness_basis"] = c.witness_basis;
    j["order"] = c.order;
    j["field"] = c.field;
    j["radical_query"] = c.radical_query;
    if (c.radical_query) {
        j["fresh_var"] = c.fresh_var;
        j["fresh_var_index"] = c.fresh_var_index;
    }
    if (!c.failing_normal_form.empty()) j["failing_normal_form"] = c.failing_normal_form;
    j["counters"] = {{"pairs_processed", c.pairs_processed}, {"basis_size", c.basis_size}};
    return j;
}

inline ordered_json to_json(const RadicalEqualResult& r) {
    ordered_json j;
    j["equal"] = r.equal;
    j["lhs_in_rhs"] = ordered_json::array();
    for (const auto& c : r.lhs_in_rhs) j["lhs_in_rhs"].push_back(to_json(c));
    j["rhs_in_lhs"] = ordered_json::array();
    for (const auto& c : r.rhs_in_lhs) j["rhs_in_lhs"].push_back(to_json(c));
    return j;
}

inline ordered_json to_json(const SvCheckReport& r) {
    ordered_json j;
    j["ok"] = r.ok;
    j["violations"] = ordered_json::array();
    for (const auto& v : r.violations)
        j["violations"].push_back({{"level", v.level},
                                   {"first", v.first},
                                   {"second", v.second},
                                   {"p_first", v.p_first},
                                   {"p_second", v.p_second}});
    return j;
}

inline ordered_json to_json(const CaseCertificate& c) {
    ordered_json j;
    j["case_id"] = c.case_id;
    j["field"] = c.field;
    j["order"] = c.order;
    j["recipe"] = c.recipe;
    j["generators"] = c.generators;
    ordered_json v;
    if (c.verdicts.golden) v["golden"] = *c.verdicts.golden;
    v["radical_equality"] = c.verdicts.radical_equality;
    if (c.verdicts.decomposition) v["decomposition"] = *c.verdicts.decomposition;
    if (c.verdicts.dimension) v["dimension"] = *c.verdicts.dimension;
    if (c.verdicts.construction_membership)
        v["construction_membership"] = *c.verdicts.construction_membership;
    v["all"] = c.verdicts.all();
    j["verdicts"] = v;
    j["computed_dim"] = c.computed_dim;
    j["membership_witnesses"] = to_json(c.radical_cert);
    j["counters"] = {{"total_pairs", c.total_pairs()}};
    j["lower_bound_note"] = c.lower_bound_note;
    if (!c.notes.empty()) j["notes"] = c.notes;
    return j;
}

}  // namespace radgen

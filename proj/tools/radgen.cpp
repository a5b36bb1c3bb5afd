// radgen: Groebner-backed construction and certification of small
// up-to-radical generating sets for polynomial ideals.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "radgen/radgen.hpp"

namespace {

using namespace radgen;

struct Options {
    std::string field;  // empty: take from file header (files) or Q (inline)
    std::string order = "grevlex";
    bool json = false;
    bool force = false;
    std::size_t limit_pairs = GbLimits{}.max_pairs;
    std::size_t limit_basis = GbLimits{}.max_basis;

    std::string ring_path;
    std::string poly_expr;
    std::string file_a, file_b;
    std::string variant = "lemma2";
    std::string alpha1, alpha2, beta1, beta2;
    std::vector<std::string> gammas;
    std::string case_id;
    bool all_cases = false;
    std::size_t family_max = 8;
    std::string golden_dir;

    GbLimits limits() const { return GbLimits{limit_pairs, limit_basis}; }
    OrderKind order_kind() const {
        if (order == "lex") return OrderKind::lex;
        if (order == "grevlex") return OrderKind::grevlex;
        throw ValueError("unknown order: " + order);
    }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValueError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

FieldSpec effective_field(const Options& opt, const FieldSpec& from_file) {
    if (opt.field.empty()) return from_file;
    return FieldSpec::parse(opt.field);
}

void emit(const Options& opt, const ordered_json& j, const std::string& human) {
    if (opt.json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << human;
}

std::string pass_fail(bool b) { return b ? "PASS" : "FAIL"; }

// ---- typed command bodies --------------------------------------------------

template <class F>
int cmd_gb(const Options& opt, const CtxPtr<F>& ctx, const Ideal<F>& I) {
    GroebnerBasis<F> rgb = reduced_groebner(I, opt.limits());
    ordered_json j;
    j["field"] = ctx->field_descriptor();
    j["order"] = order_name(ctx->order());
    j["basis"] = ordered_json::array();
    std::string human;
    for (const auto& g : rgb.elems) {
        j["basis"].push_back(g.str());
        human += g.str() + "\n";
    }
    emit(opt, j, human);
    return 0;
}

template <class F>
int cmd_member(const Options& opt, const CtxPtr<F>& ctx, const Ideal<F>& I, bool radical) {
    Polynomial<F> f = parse_poly<F>(opt.poly_expr, ctx);
    MembershipCertificate cert = radical ? radical_member(f, I, opt.limits())
                                         : ideal_member(f, I, opt.limits());
    emit(opt, to_json(cert), "verdict: " + verdict_name(cert.verdict) + "\n");
    return cert.positive() ? 0 : 1;
}

template <class F>
int cmd_radequal(const Options& opt, const Ideal<F>& I, const Ideal<F>& J) {
    RadicalEqualResult res = radical_equal(I, J, opt.limits());
    emit(opt, to_json(res), std::string("equal: ") + (res.equal ? "true" : "false") + "\n");
    return res.equal ? 0 : 1;
}

template <class F>
int cmd_intersect(const Options& opt, const Ideal<F>& I, const Ideal<F>& J) {
    Ideal<F> meet = intersect(I, J, opt.limits());
    ordered_json j;
    j["generators"] = ordered_json::array();
    std::string human;
    for (const auto& g : meet.gens()) {
        j["generators"].push_back(g.str());
        human += g.str() + "\n";
    }
    if (meet.gens().empty()) human = "0\n";
    emit(opt, j, human);
    return 0;
}

template <class F>
int cmd_dim(const Options& opt, const Ideal<F>& I) {
    int d = dimension(I, opt.limits());
    ordered_json j;
    j["dimension"] = d;
    emit(opt, j, "dim R/I = " + std::to_string(d) + "\n");
    return 0;
}

template <class F>
int cmd_sv(const Options& opt, const SvPartition<F>& part) {
    SvCombineResult<F> res = sv_combine(part, opt.force, opt.limits());
    ordered_json j;
    j["check"] = to_json(res.check);
    j["generators"] = ordered_json::array();
    std::string human;
    human += "condition check: " + pass_fail(res.check.ok) + "\n";
    for (const auto& v : res.check.violations)
        human += "  violation in P_" + std::to_string(v.level) + ": (" + v.p_first +
                 ") * (" + v.p_second + ")\n";
    for (const auto& q : res.qs) {
        j["generators"].push_back(q.str());
        human += q.str() + "\n";
    }
    bool ok = res.check.ok;
    if (res.certification) {
        j["certification"] = to_json(*res.certification);
        human += "radical_equality: " + pass_fail(res.certification->equal) + "\n";
        ok = ok && res.certification->equal;
    }
    emit(opt, j, human);
    return ok ? 0 : 1;
}

template <class F>
int cmd_matrix(const Options& opt, const MatrixCriterionInput<F>& input) {
    MatrixConstruction<F> cons = theorem1_construct(input, /*certify=*/true, opt.limits());
    ordered_json j;
    j["p0"] = cons.p0.str();
    j["minors"] = ordered_json::array();
    for (const auto& d : cons.minors) j["minors"].push_back(d.str());
    j["generators"] = ordered_json::array();
    std::string human = "p0 = " + cons.p0.str() + "\n";
    for (const auto& q : cons.q) {
        j["generators"].push_back(q.str());
        human += q.str() + "\n";
    }
    j["certification"] = to_json(*cons.certification);
    human += "radical_equality: " + pass_fail(cons.certification->equal) + "\n";
    emit(opt, j, human);
    return cons.certification->equal ? 0 : 1;
}

template <class F>
int cmd_prop1(const Options& opt, const Prop1Input<F>& input) {
    Prop1Result<F> res = prop1_construct(input, /*certify=*/true, opt.limits());
    ordered_json j;
    j["generators"] = ordered_json::array();
    std::string human;
    for (const auto& q : res.qs) {
        j["generators"].push_back(q.str());
        human += q.str() + "\n";
    }
    j["certification"] = to_json(*res.certification);
    human += "radical_equality: " + pass_fail(res.certification->equal) + "\n";
    emit(opt, j, human);
    return res.certification->equal ? 0 : 1;
}

std::string golden_file_name(const std::string& case_id) {
    std::string name = case_id;
    auto pos = name.find(':');
    if (pos != std::string::npos) name.erase(pos, 1);
    return name + ".txt";
}

template <class F>
std::vector<std::string> load_golden_override(const Options& opt, const std::string& id) {
    if (opt.golden_dir.empty()) return {};
    std::ifstream in(opt.golden_dir + "/" + golden_file_name(id));
    if (!in) return {};
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        std::string s = detail::strip_comment(line);
        if (!s.empty()) lines.push_back(s);
    }
    return lines;
}

std::string case_human(const CaseCertificate& cert) {
    std::string human = "case " + cert.case_id + " [" + cert.recipe + ", " + cert.field +
                        ", " + cert.order + "]\n";
    for (const auto& g : cert.generators) human += "  " + g + "\n";
    if (cert.verdicts.golden)
        human += "  golden:                  " + pass_fail(*cert.verdicts.golden) + "\n";
    human += "  radical_equality:        " + pass_fail(cert.verdicts.radical_equality) + "\n";
    if (cert.verdicts.decomposition)
        human += "  decomposition:           " + pass_fail(*cert.verdicts.decomposition) + "\n";
    if (cert.verdicts.dimension)
        human += "  dimension:               " + pass_fail(*cert.verdicts.dimension) + " (" +
                 std::to_string(cert.computed_dim) + ")\n";
    if (cert.verdicts.construction_membership)
        human += "  construction_membership: " +
                 pass_fail(*cert.verdicts.construction_membership) + "\n";
    for (const auto& n : cert.notes) human += "  note: " + n + "\n";
    human += "  => " + pass_fail(cert.ok()) + "\n";
    return human;
}

template <class F>
int cmd_paper(const Options& opt, const F& proto) {
    std::vector<std::string> ids;
    if (opt.all_cases)
        ids = corpus_case_ids(opt.family_max);
    else
        ids.push_back(opt.case_id);

    bool all_ok = true;
    ordered_json cases = ordered_json::array();
    std::string human;
    for (const auto& id : ids) {
        PaperCase<F> pc = build_case<F>(id, proto, opt.order_kind());
        auto golden = load_golden_override<F>(opt, id);
        if (!golden.empty()) pc.golden = golden;
        CaseCertificate cert = certify_case(pc, opt.limits());
        all_ok = all_ok && cert.ok();
        cases.push_back(to_json(cert));
        human += case_human(cert);
    }
    ordered_json j;
    if (opt.all_cases) {
        j["cases"] = cases;
        j["all"] = all_ok;
    } else {
        j = cases[0];
    }
    emit(opt, j, human);
    return all_ok ? 0 : 1;
}

// ---- field dispatch ----------------------------------------------------

template <class F>
F proto_of(const FieldSpec& fs);

template <>
Rational proto_of<Rational>(const FieldSpec&) { return Rational::one(); }

template <>
GfP proto_of<GfP>(const FieldSpec& fs) { return GfP(1, fs.p); }

template <class Fn>
int with_field(const FieldSpec& fs, Fn&& fn) {
    if (fs.is_q) return fn(proto_of<Rational>(fs));
    return fn(proto_of<GfP>(fs));
}

struct CommandSet {
    CLI::App* gb = nullptr;
    CLI::App* member = nullptr;
    CLI::App* radmember = nullptr;
    CLI::App* radequal = nullptr;
    CLI::App* isect = nullptr;
    CLI::App* dim = nullptr;
    CLI::App* sv = nullptr;
    CLI::App* matrix = nullptr;
    CLI::App* prop1 = nullptr;
    CLI::App* paper = nullptr;
};

int dispatch(const Options& opt, const CommandSet& cmd) {
    GbLimits limits = opt.limits();
    (void)limits;

    auto load_ideal = [&](const std::string& path, auto&& fn) {
        IdealFileData data = read_ideal_text(slurp(path));
        FieldSpec fs = effective_field(opt, data.field);
        return with_field(fs, [&](auto proto) {
            using F = decltype(proto);
            CtxPtr<F> ctx = context_for<F>(data.vars, opt.order_kind(), proto);
            return fn(ctx, ideal_from_data<F>(data, ctx));
        });
    };

    if (cmd.gb->parsed())
        return load_ideal(opt.ring_path,
                          [&](auto ctx, auto I) { return cmd_gb(opt, ctx, I); });
    if (cmd.member->parsed())
        return load_ideal(opt.ring_path,
                          [&](auto ctx, auto I) { return cmd_member(opt, ctx, I, false); });
    if (cmd.radmember->parsed())
        return load_ideal(opt.ring_path,
                          [&](auto ctx, auto I) { return cmd_member(opt, ctx, I, true); });

    if (cmd.radequal->parsed() || cmd.isect->parsed()) {
        IdealFileData da = read_ideal_text(slurp(opt.file_a));
        IdealFileData db = read_ideal_text(slurp(opt.file_b));
        FieldSpec fs = effective_field(opt, da.field);
        return with_field(fs, [&](auto proto) {
            using F = decltype(proto);
            CtxPtr<F> ctx = context_for<F>(da.vars, opt.order_kind(), proto);
            Ideal<F> I = ideal_from_data<F>(da, ctx);
            CtxPtr<F> ctxb = context_for<F>(db.vars, opt.order_kind(), proto);
            Ideal<F> J = ideal_from_data<F>(db, ctxb).mapped_to(ctx);
            return cmd.radequal->parsed() ? cmd_radequal(opt, I, J)
                                          : cmd_intersect(opt, I, J);
        });
    }

    if (cmd.dim->parsed())
        return load_ideal(opt.ring_path, [&](auto, auto I) { return cmd_dim(opt, I); });

    if (cmd.sv->parsed()) {
        std::istringstream in(slurp(opt.file_a));
        PartitionFileData data = read_partition_file(in);
        FieldSpec fs = effective_field(opt, data.field);
        return with_field(fs, [&](auto proto) {
            using F = decltype(proto);
            CtxPtr<F> ctx = context_for<F>(data.vars, opt.order_kind(), proto);
            auto variant = opt.variant == "lemma1" ? SvPartition<F>::Variant::lemma1
                                                   : SvPartition<F>::Variant::lemma2;
            return cmd_sv(opt, partition_from_data<F>(data, ctx, variant));
        });
    }

    if (cmd.matrix->parsed()) {
        IdealFileData ring = read_ideal_text(slurp(opt.ring_path));
        MatrixFileData data = read_matrix_json(nlohmann::json::parse(slurp(opt.file_a)));
        FieldSpec fs = effective_field(opt, ring.field);
        return with_field(fs, [&](auto proto) {
            using F = decltype(proto);
            CtxPtr<F> ctx = context_for<F>(ring.vars, opt.order_kind(), proto);
            return cmd_matrix(opt, matrix_input_from_data<F>(data, ctx));
        });
    }

    if (cmd.prop1->parsed()) {
        IdealFileData ring = read_ideal_text(slurp(opt.ring_path));
        FieldSpec fs = effective_field(opt, ring.field);
        return with_field(fs, [&](auto proto) {
            using F = decltype(proto);
            CtxPtr<F> ctx = context_for<F>(ring.vars, opt.order_kind(), proto);
            Prop1Input<F> input{parse_poly<F>(opt.alpha1, ctx), parse_poly<F>(opt.alpha2, ctx),
                                parse_poly<F>(opt.beta1, ctx), parse_poly<F>(opt.beta2, ctx),
                                {}};
            for (const auto& g : opt.gammas) input.gammas.push_back(parse_poly<F>(g, ctx));
            return cmd_prop1(opt, input);
        });
    }

    if (cmd.paper->parsed()) {
        FieldSpec fs = opt.field.empty() ? FieldSpec{} : FieldSpec::parse(opt.field);
        return with_field(fs, [&](auto proto) { return cmd_paper(opt, proto); });
    }

    std::cerr << "radgen: no command\n";
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"construct and certify small up-to-radical generating sets"};
    app.require_subcommand(1);

    app.add_option("--field", opt.field, "coefficient field: Q or Fp:<prime>");
    app.add_option("--order", opt.order, "monomial order: lex or grevlex")
        ->check(CLI::IsMember({"lex", "grevlex"}));
    app.add_flag("--json", opt.json, "machine-readable JSON output");
    app.add_flag("--force", opt.force, "emit combinations even when checks fail");
    app.add_option("--limit-pairs", opt.limit_pairs, "Buchberger pair cap");
    app.add_option("--limit-basis", opt.limit_basis, "Buchberger basis size cap");

    CommandSet cmd;
    cmd.gb = app.add_subcommand("gb", "reduced Groebner basis of an ideal file");
    cmd.gb->add_option("--ring", opt.ring_path, "ideal file")->required();

    cmd.member = app.add_subcommand("member", "ideal membership of a polynomial");
    cmd.member->add_option("--ring", opt.ring_path, "ideal file")->required();
    cmd.member->add_option("-f,--poly", opt.poly_expr, "query polynomial")->required();

    cmd.radmember = app.add_subcommand("radmember", "radical membership of a polynomial");
    cmd.radmember->add_option("--ring", opt.ring_path, "ideal file")->required();
    cmd.radmember->add_option("-f,--poly", opt.poly_expr, "query polynomial")->required();

    cmd.radequal = app.add_subcommand("radequal", "radical equality of two ideal files");
    cmd.radequal->add_option("lhs", opt.file_a, "first ideal file")->required();
    cmd.radequal->add_option("rhs", opt.file_b, "second ideal file")->required();

    cmd.isect = app.add_subcommand("intersect", "intersection of two ideal files");
    cmd.isect->add_option("lhs", opt.file_a, "first ideal file")->required();
    cmd.isect->add_option("rhs", opt.file_b, "second ideal file")->required();

    cmd.dim = app.add_subcommand("dim", "Krull dimension of R/I");
    cmd.dim->add_option("--ring", opt.ring_path, "ideal file")->required();

    cmd.sv = app.add_subcommand("sv", "Schmitt-Vogel combination from a partition file");
    cmd.sv->add_option("partition", opt.file_a, "partition file")->required();
    cmd.sv->add_option("--variant", opt.variant, "side condition: lemma1 or lemma2")
        ->check(CLI::IsMember({"lemma1", "lemma2"}));

    cmd.matrix = app.add_subcommand("matrix", "matrix-criterion construction from JSON");
    cmd.matrix->add_option("--ring", opt.ring_path, "ring header file")->required();
    cmd.matrix->add_option("input", opt.file_a, "JSON input {p, rows, alpha0}")->required();

    cmd.prop1 = app.add_subcommand("prop1", "recursive product-ideal construction");
    cmd.prop1->add_option("--ring", opt.ring_path, "ring header file")->required();
    cmd.prop1->add_option("--alpha1", opt.alpha1)->required();
    cmd.prop1->add_option("--alpha2", opt.alpha2)->required();
    cmd.prop1->add_option("--beta1", opt.beta1)->required();
    cmd.prop1->add_option("--beta2", opt.beta2)->required();
    cmd.prop1->add_option("--gamma", opt.gammas, "gamma list (repeatable)")->required();

    cmd.paper = app.add_subcommand("paper", "certify bundled reference cases");
    auto* case_opt = cmd.paper->add_option("--case", opt.case_id,
                                           "case id: example1 | example2 | j6 | in:<n>");
    auto* all_opt = cmd.paper->add_flag("--all", opt.all_cases, "run the whole corpus");
    cmd.paper->add_option("--nmax", opt.family_max, "family cap for --all (default 8)");
    cmd.paper->add_option("--golden-dir", opt.golden_dir,
                          "directory of golden fixtures overriding built-ins");
    case_opt->excludes(all_opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (cmd.paper->parsed() && !opt.all_cases && opt.case_id.empty()) {
            std::cerr << "radgen: paper needs --case <id> or --all\n";
            return 2;
        }
        return dispatch(opt, cmd);
    } catch (const ResourceLimitError& e) {
        std::cerr << "radgen: resource limit: " << e.what() << "\n";
        return 3;
    } catch (const ConditionError& e) {
        std::cerr << "radgen: " << e.what() << "\n";
        return 1;
    } catch (const ParseError& e) {
        std::cerr << "radgen: parse error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "radgen: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "radgen: bad JSON input: " << e.what() << "\n";
        return 2;
    }
}

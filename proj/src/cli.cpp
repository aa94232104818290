#include <homcalc/cli.hpp>
#include <homcalc/equivalence.hpp>
#include <homcalc/errors.hpp>
#include <homcalc/fixtures.hpp>
#include <homcalc/io.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <optional>

namespace homcalc
{

namespace
{

struct Options {
    std::string input;
    std::string builtin;
    std::string variant;
    std::string target;
    std::string emit = "text";
    std::string out;
    std::string function;
    std::string cochain;
    std::string args;
    std::string perturb;
    int s = 0;
    CheckConfig cfg;
};

struct Instance {
    InstanceKind kind = InstanceKind::algebroid;
    std::optional<HomAlgebroid> ab;
    std::optional<HomLieAlgebra> g;
    std::optional<Representation> rep;
};

Instance load(const Options &o)
{
    std::string builtin = o.builtin;
    if (builtin.empty() && o.input.rfind("builtin:", 0) == 0) {
        builtin = o.input.substr(8);
    }
    if (builtin.empty() && o.input.empty()) {
        throw ParseError("one of --input or --builtin is required", 0);
    }
    Instance inst;
    if (!builtin.empty()) {
        const auto names = builtin_homlie_names();
        if (std::find(names.begin(), names.end(), builtin) != names.end()) {
            inst.kind = InstanceKind::representation;
            inst.g = builtin_homlie(builtin);
            inst.rep = adjoint_rep(*inst.g);
        } else {
            inst.kind = InstanceKind::algebroid;
            try {
                inst.ab = builtin_algebroid(builtin);
            } catch (const StructureError &e) {
                throw ParseError(e.what(), 0);
            }
        }
    } else {
        const Json j = read_json_file(o.input);
        inst.kind = detect_kind(j);
        switch (inst.kind) {
        case InstanceKind::algebroid:
            inst.ab = algebroid_from_json(j);
            break;
        case InstanceKind::homlie:
            inst.g = homlie_from_json(j);
            break;
        case InstanceKind::representation:
            inst.rep = representation_from_json(j);
            inst.g = inst.rep->algebra();
            break;
        }
    }
    if (inst.ab) {
        if (!o.variant.empty()) {
            inst.ab = inst.ab->with_variant(parse_variant(o.variant));
        }
        if (!o.perturb.empty()) {
            try {
                inst.ab = perturb(*inst.ab, o.perturb);
            } catch (const StructureError &e) {
                throw ParseError(e.what(), 0);
            }
        }
    } else if (!o.variant.empty() || !o.perturb.empty()) {
        throw ParseError("--variant and --perturb apply to algebroid inputs only", 0);
    }
    return inst;
}

const HomAlgebroid &require_algebroid(const Instance &inst)
{
    if (!inst.ab) {
        throw ParseError("this command needs an algebroid input", 0);
    }
    return *inst.ab;
}

void write_file(const std::string &path, const std::string &text)
{
    std::ofstream f(path);
    if (!f) {
        throw ParseError("cannot write '" + path + "'", 0);
    }
    f << text;
}

int emit_report(const Report &report, const Options &o, std::ostream &out)
{
    if (o.emit == "json") {
        out << dump_json(report.to_json());
    } else {
        out << report.to_text();
        if (const CheckItem *f = report.first_failure()) {
            out << "first failure: " << f->name << '\n';
        }
    }
    return report.passed() ? exit_pass : exit_fail;
}

/// Report plus an optional algebroid file. With --out the file is written
/// there and only the report goes to `out`.
int emit_with_algebroid(const Report &report, const std::optional<HomAlgebroid> &ab, bool ok,
                        const Options &o, std::ostream &out)
{
    const std::optional<Json> file = ab ? std::optional<Json>(algebroid_to_json(*ab)) : std::nullopt;
    if (file && !o.out.empty()) {
        write_file(o.out, dump_json(*file));
    }
    if (o.emit == "json") {
        Json j{{"report", report.to_json()}};
        if (o.out.empty()) {
            j["algebroid"] = file ? *file : Json(nullptr);
        } else {
            j["written"] = file ? Json(o.out) : Json(nullptr);
        }
        out << dump_json(j);
    } else {
        out << report.to_text();
        if (const CheckItem *f = report.first_failure()) {
            out << "first failure: " << f->name << '\n';
        }
        if (file && o.out.empty()) {
            out << dump_json(*file);
        } else if (file) {
            out << "wrote " << o.out << '\n';
        }
    }
    return ok ? exit_pass : exit_fail;
}

Report homlie_checks(const Instance &inst, const CheckConfig &cfg, bool battery)
{
    Report report(inst.rep ? "Hom-Lie representation" : "Hom-Lie algebra");
    report.set_config(cfg.to_json());
    report.append(check_hom_jacobi(*inst.g));
    report.append(check_alpha_morphism(*inst.g));
    if (inst.rep) {
        const Report rep = check_representation(*inst.rep);
        report.append(rep);
        if (battery && rep.passed()) {
            const int max_k = static_cast<int>(inst.g->dim());
            for (int s = cfg.s_min; s <= cfg.s_max; ++s) {
                Report dd = check_d_squared_vec(*inst.rep, s, max_k);
                report.append(dd, "s=" + std::to_string(s) + " ");
            }
        }
    }
    return report;
}

int cmd_check(const Options &o, std::ostream &out)
{
    const Instance inst = load(o);
    if (inst.kind == InstanceKind::algebroid) {
        return emit_report(check_axioms(*inst.ab, o.cfg), o, out);
    }
    return emit_report(homlie_checks(inst, o.cfg, false), o, out);
}

int cmd_differential(const Options &o, std::ostream &out)
{
    const Instance inst = load(o);
    const HomAlgebroid &ab = require_algebroid(inst);
    if (o.function.empty() == o.cochain.empty()) {
        throw ParseError("give exactly one of --function or --cochain", 0);
    }
    Cochain c = o.function.empty()
                    ? cochain_from_json(parse_json_text(o.cochain), ab.base())
                    : Cochain::function([&] {
                          try {
                              return ab.base().parse(o.function);
                          } catch (const ParseError &e) {
                              throw ParseError("--function: " + e.detail(), e.position());
                          }
                      }());
    const std::vector<Section> args = parse_sections(o.args, ab);
    if (args.size() != c.degree() + 1) {
        throw StructureError("d^" + std::to_string(o.s) + " of a degree-" + std::to_string(c.degree())
                             + " cochain takes " + std::to_string(c.degree() + 1)
                             + " sections, got " + std::to_string(args.size()));
    }
    const DifferentialFamily fam(std::make_shared<const HomAlgebroid>(ab));
    const Poly value = fam.evaluate(o.s, c, args);
    if (o.emit == "json") {
        Json a = Json::array();
        for (const auto &x : args) {
            a.push_back(x.to_string());
        }
        out << dump_json(Json{{"s", o.s},
                              {"cochain", c.to_string()},
                              {"args", a},
                              {"value", value.to_string()}});
    } else {
        out << value.to_string() << '\n';
    }
    return exit_pass;
}

int cmd_reconstruct(const Options &o, std::ostream &out)
{
    const Instance inst = load(o);
    const RoundTripResult rt = round_trip(require_algebroid(inst), o.cfg);
    return emit_with_algebroid(rt.report, rt.reconstruction, rt.report.passed(), o, out);
}

int cmd_convert(const Options &o, std::ostream &out)
{
    const Instance inst = load(o);
    if (o.target.empty()) {
        throw ParseError("--target A|B is required", 0);
    }
    const ConvertResult cr = convert(require_algebroid(inst), parse_variant(o.target), o.cfg);
    return emit_with_algebroid(cr.report, cr.algebroid, cr.algebroid.has_value(), o, out);
}

Report algebroid_battery(const HomAlgebroid &ab, const CheckConfig &cfg)
{
    Report report("property battery (variant " + to_string(ab.variant()) + ")");
    report.set_config(cfg.to_json());
    const Report axioms = check_axioms(ab, cfg);
    report.append(axioms, "axioms ");
    if (!axioms.passed()) {
        return report;
    }
    const DifferentialFamily fam(std::make_shared<const HomAlgebroid>(ab));
    report.append(check_theorem_conditions(fam, ab.variant(), cfg), "theorem ");
    report.append(round_trip(ab, cfg).report, "round_trip ");

    const Variant other = ab.variant() == Variant::A ? Variant::B : Variant::A;
    const Poly det = poly_determinant(ab.base(), ab.alpha_sf());
    if (!det.is_zero() && det.is_constant()) {
        const ConvertResult there = convert(ab, other, cfg);
        if (!there.algebroid) {
            report.append(there.report, "convert ");
            return report;
        }
        const ConvertResult back = convert(*there.algebroid, ab.variant(), cfg);
        if (!back.algebroid) {
            report.append(back.report, "convert back ");
            return report;
        }
        if (*back.algebroid == ab) {
            report.add_pass("convert_involution");
        } else {
            report.add_fail("convert_involution",
                            Json{{"original", algebroid_to_json(ab)},
                                 {"round_trip", algebroid_to_json(*back.algebroid)}});
        }
    }
    return report;
}

int cmd_proptest(const Options &o, std::ostream &out)
{
    const Instance inst = load(o);
    if (inst.kind == InstanceKind::algebroid) {
        return emit_report(algebroid_battery(*inst.ab, o.cfg), o, out);
    }
    return emit_report(homlie_checks(inst, o.cfg, true), o, out);
}

void add_common(CLI::App *sub, Options &o)
{
    sub->add_option("--input", o.input, "Instance file (JSON), or builtin:<name>");
    sub->add_option("--builtin", o.builtin, "Builtin fixture name");
    sub->add_option("--variant", o.variant, "Override the algebroid's variant")
        ->check(CLI::IsMember({"A", "B"}));
    sub->add_option("--seed", o.cfg.seed, "Random seed");
    sub->add_option("--trials", o.cfg.trials, "Random tuples per identity")
        ->check(CLI::PositiveNumber);
    sub->add_option("--max-degree", o.cfg.max_degree, "Coefficient degree of random data")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--max-cochain-degree", o.cfg.max_cochain_degree,
                    "Highest generator cochain degree (<= 2)")
        ->check(CLI::Range(1, 2));
    sub->add_option("--s-min", o.cfg.s_min, "Lowest s")->check(CLI::NonNegativeNumber);
    sub->add_option("--s-max", o.cfg.s_max, "Highest s")->check(CLI::NonNegativeNumber);
    sub->add_option("--emit", o.emit, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--perturb", o.perturb, "Perturb one structure coefficient")
        ->check(CLI::IsMember({"bracket", "anchor", "alpha"}));
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact checks for Hom-Lie algebras and Hom-Lie algebroids", "homcalc"};
    app.require_subcommand(1);
    Options o;

    auto *check = app.add_subcommand("check", "Run the axiom checkers for an instance");
    add_common(check, o);

    auto *diff = app.add_subcommand("differential", "Evaluate d^s of a function or cochain");
    add_common(diff, o);
    diff->add_option("--s", o.s, "Which d^s")->check(CLI::NonNegativeNumber);
    diff->add_option("--function", o.function, "Degree-0 cochain, as a polynomial");
    diff->add_option("--cochain", o.cochain, "Cochain literal (JSON)");
    diff->add_option("--args", o.args, "Sections, e.g. \"[e1, x*e1]\"")->required();

    auto *rec = app.add_subcommand("reconstruct", "Rebuild anchor and bracket from the family");
    add_common(rec, o);
    rec->add_option("--out", o.out, "Write the reconstructed algebroid here");

    auto *conv = app.add_subcommand("convert", "Convert between the two definitions");
    add_common(conv, o);
    conv->add_option("--target", o.target, "Target variant")->check(CLI::IsMember({"A", "B"}));
    conv->add_option("--out", o.out, "Write the converted algebroid here");

    auto *prop = app.add_subcommand("proptest", "Run the seeded property battery");
    add_common(prop, o);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_pass : exit_input_error;
    }
    if (o.cfg.s_min > o.cfg.s_max) {
        err << "error: --s-min exceeds --s-max\n";
        return exit_input_error;
    }

    try {
        if (check->parsed()) {
            return cmd_check(o, out);
        }
        if (diff->parsed()) {
            return cmd_differential(o, out);
        }
        if (rec->parsed()) {
            return cmd_reconstruct(o, out);
        }
        if (conv->parsed()) {
            return cmd_convert(o, out);
        }
        return cmd_proptest(o, out);
    } catch (const ParseError &e) {
        err << "input error: " << e.what() << '\n';
        return exit_input_error;
    } catch (const StructureError &e) {
        err << "input error: " << e.what() << '\n';
        return exit_input_error;
    } catch (const PreconditionError &e) {
        err << "refused: " << e.what() << '\n';
        return exit_fail;
    }
}

} // namespace homcalc

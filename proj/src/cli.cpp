#include "dendra/cli.hpp"

#include "dendra/catalog.hpp"
#include "dendra/errors.hpp"
#include "dendra/io.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace dendra::cli {

namespace {

constexpr const char* kHochschildNote =
    "Hochschild differential: the multiplication is inserted in the middle terms. "
    "The variant that inserts the cochain itself does not match arities and is not used.";

struct Globals
{
    std::string input;
    std::string json_path;
    std::size_t max_entries = kComplexEntryLimit;
    bool quiet = false;
};

struct Outcome
{
    Json report;
    std::string text;
    int code = kPass;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw SchemaError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

WorkspaceDocument load(const Globals& g)
{
    if (g.input.empty())
        throw SchemaError("--input is required");
    return parse_document(read_file(g.input));
}

Json envelope(const std::string& command, const std::string& status, bool pass)
{
    return Json{{"command", command}, {"status", status}, {"pass", pass}};
}

std::string vector_text(const Vector& v)
{
    std::vector<std::string> parts;
    for (const auto& x : v)
        parts.push_back(to_string(x));
    return fmt::format("[{}]", fmt::join(parts, ", "));
}

std::string inputs_text(const std::vector<std::size_t>& inputs)
{
    std::vector<std::size_t> shifted;
    for (auto i : inputs)
        shifted.push_back(i + 1);
    return fmt::format("({})", fmt::join(shifted, ","));
}

CheckReport boolean_check(const std::string& name, bool pass)
{
    CheckReport r{name, true, {}};
    if (!pass)
        r.record(Violation{name, {}, {}});
    return r;
}

std::size_t max_degree_default(const WorkspaceDocument& doc)
{
    if (doc.options.contains("max_degree") && doc.options.at("max_degree").is_number_unsigned())
        return doc.options.at("max_degree").get<std::size_t>();
    return 3;
}

// ---------------------------------------------------------------------------
// verify

std::vector<CheckReport> verify_checks(const WorkspaceDocument& doc)
{
    std::vector<CheckReport> checks;
    if (doc.dendriform) {
        checks.push_back(check_dendriform_axioms(*doc.dendriform));
        auto rep = check_representation(DendRepresentation::adjoint(*doc.dendriform));
        rep.name = "adjoint representation";
        checks.push_back(std::move(rep));
    }
    if (doc.tensor_truncation) {
        auto t = truncated_tensor_dendriform(doc.tensor_truncation->vdim, doc.tensor_truncation->max_degree);
        checks.push_back(check_truncated_axioms(t));
        checks.push_back(boolean_check("truncation matches generator", doc.dendriform &&
                                                                           doc.dendriform->prec == t.algebra.prec &&
                                                                           doc.dendriform->succ == t.algebra.succ));
    }
    if (doc.associative)
        checks.push_back(check_associative(*doc.associative));
    if (doc.group) {
        if (doc.dendriform) {
            checks.push_back(check_action(DendGroupAction{*doc.dendriform, *doc.group}));
        } else {
            checks.push_back(check_group_representation(*doc.group));
            if (doc.associative)
                checks.push_back(boolean_check("multiplication equivariant",
                                               equivariant_hom_subspace(*doc.group, 2)
                                                   .contains(HomCochain::multiplication(*doc.associative).coeffs())));
        }
    }
    if (!doc.subgroups.empty()) {
        CheckReport r{"listed subgroups", true, {}};
        for (std::size_t i = 0; i < doc.subgroups.size(); ++i)
            if (!is_subgroup(doc.group->group, doc.subgroups[i]))
                r.record(Violation{fmt::format("subgroup[{}] = {{{}}}", i + 1, fmt::join(doc.subgroups[i], ",")), {}, {}});
        checks.push_back(std::move(r));
    }
    if (doc.rota_baxter) {
        const auto& v = *doc.associative;
        bool rb = check_rota_baxter(v, *doc.rota_baxter);
        checks.push_back(boolean_check("rota-baxter identity", rb));
        if (rb) {
            auto induced = from_rota_baxter(v, *doc.rota_baxter);
            auto axioms = check_dendriform_axioms(induced);
            axioms.name = "rota-baxter induced dendriform axioms";
            checks.push_back(axioms);
            if (axioms.pass)
                checks.push_back(boolean_check("induced sum equals rota-baxter product",
                                               associated_associative(induced).mul ==
                                                   rota_baxter_product(v, *doc.rota_baxter).mul));
            checks.push_back(boolean_check("pseudotwistor from rota-baxter",
                                           check_weak_pseudotwistor(v, pseudotwistor_from_rota_baxter(*doc.rota_baxter),
                                                                    companion_from_rota_baxter(*doc.rota_baxter))));
        }
    }
    if (doc.bimodule) {
        checks.push_back(check_bimodule(*doc.bimodule));
        if (doc.o_operator && checks.back().pass) {
            const auto& v = *doc.associative;
            bool o = check_o_operator(v, *doc.bimodule, *doc.o_operator);
            checks.push_back(boolean_check("o-operator identity", o));
            checks.push_back(boolean_check("graph subalgebra agrees with o-operator identity",
                                           graph_is_subalgebra(v, *doc.bimodule, *doc.o_operator) == o));
            checks.push_back(check_associative(semidirect_product(v, *doc.bimodule)));
            checks.back().name = "semidirect product associative";
            if (o) {
                auto induced = check_dendriform_axioms(from_o_operator(v, *doc.bimodule, *doc.o_operator));
                induced.name = "o-operator induced dendriform axioms";
                checks.push_back(std::move(induced));
            }
        }
    }
    if (doc.pseudotwistor) {
        bool ok = check_weak_pseudotwistor(*doc.associative, *doc.pseudotwistor, *doc.companion);
        checks.push_back(boolean_check("weak pseudotwistor squares", ok));
        if (ok) {
            auto twisted = check_associative(twisted_associative(*doc.associative, *doc.pseudotwistor, *doc.companion));
            twisted.name = "twisted product associative";
            checks.push_back(std::move(twisted));
        }
    }
    const bool structure_ok = std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
    if (doc.deformation && !structure_ok) {
        CheckReport r{"deformation equations", true, {}};
        r.record(Violation{"not evaluated: the algebra or its action failed", {}, {}});
        checks.push_back(std::move(r));
    } else if (doc.deformation) {
        FormalDeformation def{doc.action(), *doc.deformation, doc.group.has_value()};
        auto verdict = check_deformation(def);
        CheckReport r{"deformation equations", true, {}};
        if (!verdict.base_matches)
            r.record(Violation{"base term", {}, {}});
        for (const auto& o : verdict.orders)
            if (!o.pass)
                r.record(Violation{fmt::format("order {}", o.k), {}, o.residual.coeffs()});
        if (!verdict.terms_equivariant)
            r.record(Violation{"terms equivariant", {}, {}});
        for (const auto& s : verdict.subgroups)
            if (!s.pass)
                r.record(Violation{fmt::format("order {} restricted to {{{}}}", s.k, fmt::join(s.subgroup, ",")), {}, {}});
        checks.push_back(std::move(r));
        if (doc.gauge) {
            bool starts = !doc.gauge->maps.empty() && doc.gauge->maps[0] == Matrix::identity(doc.dim());
            checks.push_back(boolean_check("gauge starts at identity", starts));
            if (starts && verdict.pass())
                checks.push_back(boolean_check("gauge image satisfies the equations",
                                               check_deformation(apply_gauge(def, *doc.gauge)).pass()));
        }
    }
    return checks;
}

Outcome cmd_verify(const Globals& g)
{
    auto doc = load(g);
    auto checks = verify_checks(doc);
    bool pass = std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
    Outcome o;
    o.report = envelope("verify", pass ? "PASS" : "FAIL", pass);
    Json list = Json::array();
    std::string text;
    for (const auto& c : checks) {
        list.push_back(to_json(c));
        text += fmt::format("{}  {}", c.pass ? "PASS" : "FAIL", c.name);
        if (!c.pass)
            text += fmt::format(" ({} violation{})", c.violations.size(), c.violations.size() == 1 ? "" : "s");
        text += "\n";
        for (std::size_t i = 0; i < c.violations.size() && i < 10; ++i) {
            const auto& v = c.violations[i];
            text += fmt::format("      {}", v.identity);
            if (!v.inputs.empty())
                text += fmt::format(" at {}", inputs_text(v.inputs));
            if (!v.residual.empty())
                text += fmt::format(" residual {}", vector_text(v.residual));
            text += "\n";
        }
        if (c.violations.size() > 10)
            text += fmt::format("      ... {} more in the JSON report\n", c.violations.size() - 10);
    }
    o.report["checks"] = std::move(list);
    o.text = text + fmt::format("{}\n", pass ? "all checks pass" : "some checks fail");
    o.code = pass ? kPass : kFailed;
    return o;
}

// ---------------------------------------------------------------------------
// cohomology

std::string complex_table(const ComplexReport& r)
{
    std::string s = fmt::format("{}\n{:>4} {:>8} {:>8} {:>8} {:>8} {:>8}\n", r.name, "n", "dim C", "rank d", "dim Z",
                                "dim B", "dim H");
    for (const auto& d : r.degrees)
        s += fmt::format("{:>4} {:>8} {:>8} {:>8} {:>8} {:>8}\n", d.n, d.dim_C, d.rank_delta, d.dim_Z, d.dim_B,
                         d.dim_H);
    for (const auto& c : r.checks)
        s += fmt::format("  {} {}\n", c.pass ? "ok  " : "FAIL", c.name);
    return s;
}

std::string checks_text(const std::vector<NamedCheck>& checks)
{
    std::string s;
    for (const auto& c : checks)
        s += fmt::format("  {} {}\n", c.pass ? "ok  " : "FAIL", c.name);
    return s;
}

std::string isomorphism_text(const IsomorphismReport& r)
{
    std::string s = fmt::format("equivariant cochains vs invariant families ({} witnesses, {} morphisms)\n",
                                r.witness_count, r.morphism_count);
    s += fmt::format("{:>4} {:>8} {:>10} {:>10} {:>8} {:>10}\n", "n", "H equiv", "H families", "H sum", "rank",
                     "bijective");
    for (const auto& d : r.degrees)
        s += fmt::format("{:>4} {:>8} {:>10} {:>10} {:>8} {:>10}\n", d.n, d.dim_H_equivariant, d.dim_H_invariant,
                         d.dim_H_full, d.induced_rank, d.bijective ? "yes" : "no");
    return s + checks_text(r.checks);
}

std::string comparison_text(const ComparisonReport& r)
{
    std::string s = "dendriform to Hochschild comparison\n";
    s += fmt::format("{:>4} {:>8} {:>8} {:>8}\n", "n", "H dend", "H hoch", "rank");
    for (const auto& d : r.degrees)
        s += fmt::format("{:>4} {:>8} {:>8} {:>8}\n", d.n, d.dim_H_dend, d.dim_H_hochschild, d.induced_rank);
    return s + checks_text(r.checks);
}

Outcome cmd_cohomology(const Globals& g, const std::string& mode, std::optional<std::size_t> max_degree,
                       const std::string& coefficients)
{
    auto doc = load(g);
    const std::size_t n = max_degree.value_or(max_degree_default(doc));
    if (n == 0)
        throw SchemaError("--max-degree must be at least 1");
    Json result;
    std::string text;
    bool pass = true;
    bool hochschild_note = false;

    auto need_dend = [&]() {
        if (!doc.dendriform_algebra())
            throw SchemaError("mode '" + mode + "' needs a dendriform algebra");
        return doc.action();
    };

    if (mode == "dend") {
        auto act = need_dend();
        auto rep = coefficients == "trivial" ? DendRepresentation::trivial(act.algebra)
                                             : DendRepresentation::adjoint(act.algebra);
        auto r = dend_cohomology(rep, n, g.max_entries);
        r.name = "dendriform cohomology, " + coefficients + " coefficients";
        result = to_json(r);
        text = complex_table(r);
        pass = r.ok();
    } else if (mode == "hochschild") {
        AssociativeAlgebra v = doc.associative ? *doc.associative : associated_associative(*doc.dendriform_algebra());
        auto r = hochschild_cohomology(v, doc.group ? &*doc.group : nullptr, n, g.max_entries);
        result = to_json(r);
        text = complex_table(r);
        pass = r.ok();
        hochschild_note = true;
    } else if (mode == "equivariant") {
        auto r = equivariant_dend_cohomology(need_dend(), n, g.max_entries);
        result = to_json(r);
        text = complex_table(r);
        pass = r.ok();
    } else if (mode == "bredon") {
        auto og = build_og_algebra(need_dend(), doc.subgroups);
        auto b = bredon_complex(og, n, g.max_entries);
        result = Json{{"objects", og.objects.size()},
                      {"witness_count", og.witness_count},
                      {"morphism_count", og.morphisms.size()},
                      {"functoriality", to_json(og.functoriality)},
                      {"invariant_families", to_json(b.invariant)},
                      {"direct_sum", to_json(b.full)}};
        text = fmt::format("{} subgroups, {} witnesses, {} distinct morphisms, functoriality {}\n", og.objects.size(),
                           og.witness_count, og.morphisms.size(), og.functoriality.pass ? "ok" : "FAIL") +
               complex_table(b.invariant) + complex_table(b.full);
        pass = og.functoriality.pass && b.invariant.ok() && b.full.ok();
    } else if (mode == "compare") {
        auto r = induced_comparison(need_dend(), n, g.max_entries);
        result = to_json(r);
        text = complex_table(r.dend) + complex_table(r.hochschild) + comparison_text(r);
        pass = r.ok();
        hochschild_note = true;
    } else {
        auto act = need_dend();
        auto iso = verify_bredon_isomorphism(act, n, g.max_entries);
        auto cmp = induced_comparison(act, n, g.max_entries);
        result = Json{{"isomorphism", to_json(iso)}, {"comparison", to_json(cmp)}};
        text = complex_table(iso.equivariant) + complex_table(iso.bredon.invariant) + isomorphism_text(iso) +
               comparison_text(cmp);
        pass = iso.ok() && cmp.ok();
        hochschild_note = true;
    }

    Outcome o;
    o.report = envelope("cohomology", pass ? "PASS" : "INTERNAL_INVARIANT_FAILED", pass);
    o.report["mode"] = mode;
    o.report["max_degree"] = n;
    if (hochschild_note)
        o.report["note"] = kHochschildNote;
    o.report["result"] = std::move(result);
    o.text = text;
    if (hochschild_note)
        o.text += fmt::format("note: {}\n", kHochschildNote);
    if (!pass)
        o.text += "an internal invariant failed; this indicates an implementation bug\n";
    o.code = pass ? kPass : kFailed;
    return o;
}

// ---------------------------------------------------------------------------
// deform

std::string verdict_text(const DeformationReport& r)
{
    std::string s = fmt::format("base term {}\n", r.base_matches ? "matches" : "DIFFERS");
    for (const auto& o : r.orders)
        s += fmt::format("  order {}: {}\n", o.k, o.pass ? "ok" : "FAIL");
    if (!r.terms_equivariant)
        s += "  terms are not equivariant\n";
    std::size_t failed = std::count_if(r.subgroups.begin(), r.subgroups.end(), [](const auto& v) { return !v.pass; });
    s += fmt::format("  restrictions to fixed subalgebras: {} checked, {} failed\n", r.subgroups.size(), failed);
    return s;
}

std::string obstruction_text(const ObstructionClass& ob)
{
    return fmt::format("obstruction class {} (equivariant {}, closed {})\n", vector_text(ob.class_vector),
                       ob.is_equivariant ? "yes" : "no", ob.is_cocycle ? "yes" : "no");
}

Outcome failure(const std::string& status, const std::string& message)
{
    Outcome o;
    o.report = envelope("deform", status, false);
    o.report["message"] = message;
    o.text = fmt::format("{}: {}\n", status, message);
    o.code = kFailed;
    return o;
}

Outcome cmd_deform(const Globals& g, bool check, bool extend_flag, std::optional<std::size_t> to_order, bool rigidity,
                   const std::string& cocycle_path)
{
    int chosen = int(check) + int(extend_flag) + int(rigidity) + int(!cocycle_path.empty());
    if (chosen != 1)
        throw SchemaError("choose exactly one of --check, --extend, --rigidity, --from-cocycle");
    auto doc = load(g);
    if (!doc.dendriform_algebra())
        throw SchemaError("deform needs a dendriform algebra");
    const auto act = doc.action();
    Outcome o;

    if (check) {
        if (!doc.deformation)
            throw SchemaError("--check needs a deformation in the document");
        auto r = check_deformation(FormalDeformation{act, *doc.deformation, doc.group.has_value()});
        o.report = envelope("deform", r.pass() ? "PASS" : "NOT_A_DEFORMATION", r.pass());
        o.report["mode"] = "check";
        o.report["verdict"] = to_json(r);
        o.text = verdict_text(r);
        o.code = r.pass() ? kPass : kFailed;
        return o;
    }

    auto ctx = DeformationContext::build(act, g.max_entries);

    if (rigidity) {
        auto r = rigidity_report(act, ctx);
        o.report = envelope("deform", r.verdict, true);
        o.report["mode"] = "rigidity";
        o.report["dim_H2"] = r.dim_H2;
        o.report["note"] = r.rigid ? "the second equivariant cohomology vanishes, so every equivariant deformation is "
                                     "equivalent to the trivial one"
                                   : "a nonzero second cohomology does not by itself show that a nontrivial "
                                     "deformation exists";
        o.text = fmt::format("{} (dim H^2 = {})\n{}\n", r.verdict, r.dim_H2, o.report["note"].get<std::string>());
        return o;
    }

    FormalDeformation def{act, {}, true};
    std::size_t target = 0;
    std::optional<ObstructionClass> blocked;
    std::string mode;
    if (extend_flag) {
        mode = "extend";
        if (!to_order)
            throw SchemaError("--extend needs --to-order");
        target = *to_order;
        def = doc.deformation ? FormalDeformation{act, *doc.deformation, true} : FormalDeformation::constant(act, 0);
        auto start = check_deformation(def);
        if (!start.pass())
            return failure("NOT_A_DEFORMATION", "the input deformation fails its equations");
        while (def.order() < target) {
            auto step = extend(def, ctx);
            if (!step.extended) {
                blocked = step.obstruction;
                break;
            }
            def = std::move(step.deformation);
        }
    } else {
        mode = "from-cocycle";
        target = to_order.value_or(kDeformationOrderCap);
        Json cj;
        try {
            cj = Json::parse(read_file(cocycle_path));
        } catch (const Json::parse_error& e) {
            throw SchemaError(std::string("malformed cocycle JSON: ") + e.what());
        }
        auto z = cochain_from_json(cj, act.algebra.dim);
        try {
            auto r = cocycle_to_deformation(act, z, target, ctx);
            def = std::move(r.deformation);
            if (!r.complete)
                blocked = r.obstruction;
        } catch (const NotACocycle& e) {
            return failure("NOT_A_COCYCLE", e.what());
        }
    }

    auto verdict = check_deformation(def);
    const bool reached = !blocked;
    o.report = envelope("deform", reached ? "EXTENDED" : "OBSTRUCTED", verdict.pass());
    o.report["mode"] = mode;
    o.report["target_order"] = target;
    o.report["order_reached"] = def.order();
    o.report["obstruction"] = blocked ? to_json(*blocked) : Json(nullptr);
    o.report["note"] = "each new term is the canonical particular solution; adding any equivariant 2-cocycle gives "
                       "another valid term";
    o.report["verdict"] = to_json(verdict);
    WorkspaceDocument out = doc;
    out.deformation = def.terms;
    o.report["document"] = to_json(out);
    o.text = fmt::format("{} at order {} (target {})\n", reached ? "EXTENDED" : "OBSTRUCTED", def.order(), target);
    if (blocked)
        o.text += obstruction_text(*blocked);
    o.text += verdict_text(verdict);
    o.code = verdict.pass() ? kPass : kFailed;
    return o;
}

// ---------------------------------------------------------------------------

void emit(const Globals& g, const Outcome& o, std::ostream& out)
{
    if (g.json_path == "-") {
        out << dump(o.report);
    } else {
        if (!g.json_path.empty()) {
            std::ofstream f(g.json_path, std::ios::binary);
            if (!f)
                throw SchemaError("cannot write '" + g.json_path + "'");
            f << dump(o.report);
        }
        if (!g.quiet)
            out << o.text;
    }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact computations with dendriform algebras", "dendra"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--input", g.input, "input document (JSON)");
    app.add_option("--json", g.json_path, "write the JSON report here ('-' for stdout)");
    app.add_option("--max-entries", g.max_entries, "refuse differentials with more entries than this");
    app.add_flag("--quiet", g.quiet, "suppress the text report");

    auto* verify = app.add_subcommand("verify", "run every check that applies to the document");

    auto* cohom = app.add_subcommand("cohomology", "compute cohomology dimensions");
    std::string mode = "dend";
    std::optional<std::size_t> max_degree;
    std::string coefficients = "adjoint";
    cohom->add_option("--mode", mode, "dend, hochschild, equivariant, bredon, compare or isomorphism")->check(
        CLI::IsMember({"dend", "hochschild", "equivariant", "bredon", "compare", "isomorphism"}));
    cohom->add_option("--max-degree", max_degree, "highest cochain degree");
    cohom->add_option("--coefficients", coefficients, "dend mode only")->check(CLI::IsMember({"adjoint", "trivial"}));

    auto* deform = app.add_subcommand("deform", "formal deformations");
    bool check = false, extend_flag = false, rigidity = false;
    std::optional<std::size_t> to_order;
    std::string cocycle_path;
    deform->add_flag("--check", check, "check the deformation equations of the document");
    deform->add_flag("--extend", extend_flag, "extend the document's deformation order by order");
    deform->add_option("--to-order", to_order, "target order for --extend and --from-cocycle");
    deform->add_flag("--rigidity", rigidity, "report whether the second cohomology vanishes");
    deform->add_option("--from-cocycle", cocycle_path, "arity-2 cochain JSON");

    auto* examples = app.add_subcommand("examples", "write a shipped example document");
    std::string name;
    bool list = false;
    examples->add_option("name", name);
    examples->add_flag("--list", list);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kPass;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kSchema;
    }

    try {
        if (*examples) {
            if (list) {
                for (const auto& n : catalog::example_names())
                    out << n << "\n";
                return kPass;
            }
            if (name.empty())
                throw SchemaError("examples needs a name; --list shows them");
            std::string text = dump(to_json(catalog::example_document(name)));
            if (g.json_path.empty() || g.json_path == "-") {
                out << text;
            } else {
                std::ofstream f(g.json_path, std::ios::binary);
                if (!f)
                    throw SchemaError("cannot write '" + g.json_path + "'");
                f << text;
                if (!g.quiet)
                    out << "wrote " << g.json_path << "\n";
            }
            return kPass;
        }
        Outcome o;
        if (*verify)
            o = cmd_verify(g);
        else if (*cohom)
            o = cmd_cohomology(g, mode, max_degree, coefficients);
        else
            o = cmd_deform(g, check, extend_flag, to_order, rigidity, cocycle_path);
        emit(g, o, out);
        return o.code;
    } catch (const SchemaError& e) {
        err << e.what() << "\n";
        return kSchema;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return kFailed;
    }
}

} // namespace dendra::cli

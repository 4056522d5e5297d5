#include "arrowcat/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "arrowcat/adjunction.hpp"
#include "arrowcat/catspec.hpp"
#include "arrowcat/equivalence.hpp"
#include "arrowcat/generators.hpp"
#include "arrowcat/isomorphism_search.hpp"
#include "arrowcat/limits.hpp"
#include "arrowcat/workspace.hpp"

namespace arrowcat::cli {

namespace {

using json = nlohmann::ordered_json;
using catspec::Document;
using catspec::Workspace;

constexpr int holds = 0;
constexpr int fails = 1;
constexpr int failure = 2;

struct Options {
    std::string format = "text";
    std::string file;
    std::string cat, left, right, functor, nat, unit, counit;
    std::string mode = "standard";
    std::string to;
    std::string scope;
    std::string name;
    std::uint64_t seed = 0;
    std::size_t cap = default_search_cap;
    bool brute_force = false;
    std::size_t max_size = 2;
    std::vector<std::size_t> dup;
    std::size_t n = 1;
    std::size_t max_morphisms = 12;
};

json violations_json(const ValidationReport& r) {
    json out = json::array();
    for (const auto& v : r.violations)
        out.push_back({{"kind", to_string(v.kind)}, {"witnesses", v.witnesses}, {"message", v.message}});
    return out;
}

// One invocation: collects the text report and the structured record.
class Session {
public:
    Session(const Options& o, std::ostream& out, std::ostream& err) : o_(o), out_(out), err_(err) {}

    json record;
    std::ostringstream text;

    int finish(int code) {
        if (o_.format == "json") {
            record["exit_code"] = code;
            out_ << record.dump() << "\n";
        } else {
            out_ << text.str();
        }
        return code;
    }

    int error(const std::string& message) {
        err_ << "error: " << message << "\n";
        record["verdict"] = "error";
        record["error"] = message;
        return finish(failure);
    }

    int parse_failure(const catspec::parse_error& e) {
        json diags = json::array();
        for (const auto& d : e.diagnostics()) {
            err_ << d.to_text(e.filename()) << "\n";
            diags.push_back({{"kind", catspec::to_string(d.kind)},
                             {"line", d.span.line},
                             {"column", d.span.column},
                             {"message", d.message}});
        }
        record["verdict"] = "error";
        record["diagnostics"] = diags;
        return finish(failure);
    }

    int invalid(const invalid_data& e) {
        err_ << e.what() << "\n";
        text << e.what() << "\n" << e.report().to_text();
        record["verdict"] = "fails";
        record["error"] = e.what();
        record["violations"] = violations_json(e.report());
        return finish(fails);
    }

    int verdict(bool ok) {
        record["verdict"] = ok ? "holds" : "fails";
        return finish(ok ? holds : fails);
    }

    void emit_catspec(const std::string& spec) {
        text << spec;
        record["catspec"] = spec;
    }

private:
    const Options& o_;
    std::ostream& out_;
    std::ostream& err_;
};

std::string describe(const Category& c) {
    return std::to_string(c.size()) + " morphisms, " + std::to_string(c.identities().size()) + " identities";
}

void add_category(Document& doc, const Category& c) { doc.categories.emplace(c.name(), catspec::declare(c)); }

// Keep the input's own declaration (standard or objectless) when it has one.
void add_declared(Document& doc, const Workspace& ws, const std::string& name) {
    doc.categories.emplace(name, ws.document().categories.at(name));
}

void add_functor(Document& doc, const Functor& f) { doc.functors.emplace(f.name(), catspec::declare(f)); }

catspec::NatDecl nat_decl(const NatTransf& t, catspec::FunctorExpr from, catspec::FunctorExpr to) {
    auto d = catspec::declare(t);
    d.from = std::move(from);
    d.to = std::move(to);
    return d;
}

catspec::FunctorExpr id_expr(const std::string& c) { return {c, {}}; }
catspec::FunctorExpr chain_expr(std::vector<std::string> chain) { return {{}, std::move(chain)}; }

int cmd_check(Session& s, const Workspace& ws) {
    bool ok = true;
    json cats = json::array(), functors = json::array(), nats = json::array();
    std::set<std::string> broken;
    for (const auto& [name, decl] : ws.document().categories) {
        auto r = ws.check_category(name);
        json entry{{"name", name}, {"ok", r.ok()}};
        if (r.ok()) {
            auto c = ws.category(name);
            s.text << "category " << name << ": ok (" << describe(*c) << ")\n";
            entry["morphisms"] = c->size();
            entry["identities"] = c->identities().size();
        } else {
            ok = false;
            broken.insert(name);
            s.text << "category " << name << ": invalid\n" << r.to_text();
            entry["violations"] = violations_json(r);
        }
        cats.push_back(entry);
    }
    std::set<std::string> broken_functors;
    for (const auto& [name, d] : ws.document().functors) {
        json entry{{"name", name}};
        if (broken.count(d.source) || broken.count(d.target)) {
            ok = false;
            broken_functors.insert(name);
            s.text << "functor " << name << ": not checked (invalid source or target)\n";
            entry["ok"] = false;
            entry["skipped"] = true;
        } else {
            auto r = ws.check_functor(name);
            entry["ok"] = r.ok();
            if (!r.ok()) {
                ok = false;
                broken_functors.insert(name);
                s.text << "functor " << name << ": invalid\n" << r.to_text();
                entry["violations"] = violations_json(r);
            } else {
                s.text << "functor " << name << ": ok\n";
            }
        }
        functors.push_back(entry);
    }
    for (const auto& [name, d] : ws.document().nats) {
        json entry{{"name", name}};
        try {
            auto t = ws.nat(name);
            auto r = validate_nat(t);
            entry["ok"] = r.ok();
            if (r.ok()) {
                const bool iso = is_natural_isomorphism(t);
                entry["isomorphism"] = iso;
                s.text << "nat " << name << ": ok" << (iso ? " (natural isomorphism)" : "") << "\n";
            } else {
                ok = false;
                s.text << "nat " << name << ": invalid\n" << r.to_text();
                entry["violations"] = violations_json(r);
            }
        } catch (const invalid_data& e) {
            ok = false;
            s.text << "nat " << name << ": not checked (" << e.what() << ")\n";
            entry["ok"] = false;
            entry["skipped"] = true;
        }
        nats.push_back(entry);
    }
    s.record["categories"] = cats;
    s.record["functors"] = functors;
    s.record["nats"] = nats;
    return s.verdict(ok);
}

int cmd_identities(Session& s, const Workspace& ws, const Options& o) {
    auto c = ws.category(o.cat);
    json ids = json::array(), arrows = json::array();
    s.text << "identities of " << c->name() << ":";
    for (auto i : c->identities()) {
        s.text << " " << c->name_of(i);
        ids.push_back(c->name_of(i));
    }
    s.text << "\n";
    for (auto a : c->arrows()) {
        s.text << "  " << c->name_of(a) << ": " << c->name_of(c->dom(a)) << " -> " << c->name_of(c->cod(a)) << "\n";
        arrows.push_back({{"name", c->name_of(a)}, {"dom", c->name_of(c->dom(a))}, {"cod", c->name_of(c->cod(a))}});
    }
    s.record["identities"] = ids;
    s.record["arrows"] = arrows;
    return s.verdict(true);
}

int cmd_homs(Session& s, const Workspace& ws, const Options& o) {
    auto c = ws.category(o.cat);
    json homs = json::array();
    for (auto x : c->identities())
        for (auto y : c->identities()) {
            auto h = c->hom(x, y);
            if (h.empty()) continue;
            auto names = names_of(*c, h);
            s.text << "hom(" << c->name_of(x) << ", " << c->name_of(y) << ") [" << h.size() << "]:";
            for (const auto& n : names) s.text << " " << n;
            s.text << "\n";
            homs.push_back({{"from", c->name_of(x)}, {"to", c->name_of(y)}, {"arrows", names}});
        }
    s.record["homs"] = homs;
    return s.verdict(true);
}

int cmd_skeleton(Session& s, const Workspace& ws, const Options& o) {
    auto c = ws.category(o.cat);
    auto sk = skeleton(c, o.seed);
    Document doc;
    add_declared(doc, ws, c->name());
    add_category(doc, *sk.skeleton);
    add_functor(doc, sk.inclusion);
    add_functor(doc, sk.retraction);
    doc.nats.emplace(sk.witness.name(), nat_decl(sk.witness, id_expr(c->name()),
                                                 chain_expr({sk.inclusion.name(), sk.retraction.name()})));
    json reps = json::object();
    for (const auto& [from, rep] : sk.representatives) reps[c->name_of(from)] = c->name_of(rep);
    s.text << "# skeleton of " << c->name() << " (seed " << o.seed << "): " << describe(*sk.skeleton) << "\n";
    s.record["skeleton"] = sk.skeleton->name();
    s.record["morphisms"] = sk.skeleton->size();
    s.record["identities"] = sk.skeleton->identities().size();
    s.record["representatives"] = reps;
    s.emit_catspec(catspec::serialize(doc));
    return s.verdict(true);
}

int cmd_iso(Session& s, const Workspace& ws, const Options& o) {
    auto c = ws.category(o.left);
    auto d = ws.category(o.right);
    auto k = find_category_isomorphism(c, d, o.cap);
    if (!k) {
        s.text << c->name() << " and " << d->name() << " are not isomorphic\n";
        return s.verdict(false);
    }
    Document doc;
    add_declared(doc, ws, c->name());
    add_declared(doc, ws, d->name());
    add_functor(doc, *k);
    s.text << "# " << c->name() << " and " << d->name() << " are isomorphic via " << k->name() << "\n";
    s.emit_catspec(catspec::serialize(doc));
    return s.verdict(true);
}

int cmd_equiv(Session& s, const Workspace& ws, const Options& o) {
    auto c = ws.category(o.left);
    auto d = ws.category(o.right);
    auto w = o.brute_force ? brute_force_equivalence(c, d) : are_equivalent(c, d, o.cap);
    s.record["method"] = o.brute_force ? "brute-force" : "skeleton";
    if (!w) {
        s.text << c->name() << " and " << d->name() << " are not equivalent\n";
        return s.verdict(false);
    }
    auto report = validate_equivalence(*w);
    Document doc;
    add_declared(doc, ws, c->name());
    add_declared(doc, ws, d->name());
    add_functor(doc, w->forward);
    add_functor(doc, w->backward);
    doc.nats.emplace(w->unit.name(), nat_decl(w->unit, id_expr(c->name()),
                                              chain_expr({w->backward.name(), w->forward.name()})));
    doc.nats.emplace(w->counit.name(), nat_decl(w->counit, id_expr(d->name()),
                                                chain_expr({w->forward.name(), w->backward.name()})));
    s.text << "# " << c->name() << " and " << d->name() << " are equivalent; witness re-validated: "
           << (report.ok() ? "yes" : "no") << "\n";
    s.record["witness_valid"] = report.ok();
    s.emit_catspec(catspec::serialize(doc));
    return s.verdict(report.ok());
}

int cmd_functor_check(Session& s, const Workspace& ws, const Options& o) {
    auto r = ws.check_functor(o.functor);
    s.text << "functor " << o.functor << ": " << (r.ok() ? "ok" : "invalid") << "\n" << r.to_text();
    s.record["violations"] = violations_json(r);
    return s.verdict(r.ok());
}

int cmd_nat_check(Session& s, const Workspace& ws, const Options& o) {
    auto t = ws.nat(o.nat);
    auto r = validate_nat(t);
    s.text << "nat " << o.nat << ": " << (r.ok() ? "natural" : "invalid") << "\n" << r.to_text();
    s.record["violations"] = violations_json(r);
    if (r.ok()) {
        const bool iso = is_natural_isomorphism(t);
        s.text << "natural isomorphism: " << (iso ? "yes" : "no") << "\n";
        s.record["isomorphism"] = iso;
    }
    return s.verdict(r.ok());
}

json adjunction_json(const AdjunctionReport& r) {
    json pairs = json::array();
    for (const auto& [x, y] : r.failing_pairs) pairs.push_back({{"x", x}, {"y", y}});
    json out{{"mode", to_string(r.mode)}, {"ok", r.ok()}, {"natural", r.literal_ok}};
    if (r.mode == AdjunctionMode::standard) {
        out["triangles"] = r.triangles_ok;
        out["hom_bijections"] = r.hom_bijection_ok;
    }
    out["failing_pairs"] = pairs;
    out["violations"] = violations_json(r.violations);
    return out;
}

int cmd_adjoint(Session& s, const Workspace& ws, const Options& o) {
    AdjunctionCandidate a{ws.functor(o.left), ws.functor(o.right), ws.nat(o.unit), ws.nat(o.counit),
                          o.mode == "standard" ? AdjunctionMode::standard : AdjunctionMode::paper_literal};
    auto r = check_adjunction(a);
    s.text << r.to_text();
    s.record["adjunction"] = adjunction_json(r);
    return s.verdict(r.ok());
}

std::optional<LimitScope> parse_scope(const std::string& text) {
    if (text.empty() || text == "all") return LimitScope{};
    LimitScope scope{false, false, false};
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item == "terminal")
            scope.terminal = true;
        else if (item == "products")
            scope.products = true;
        else if (item == "equalizers")
            scope.equalizers = true;
        else
            return std::nullopt;
    }
    return scope;
}

json limits_json(const LimitReport& r) {
    json failures = json::array();
    for (const auto& f : r.failures)
        failures.push_back({{"kind", to_string(f.kind)},
                            {"diagram", f.diagram},
                            {"counterexample", f.counterexample},
                            {"message", f.message}});
    return {{"ok", r.ok()}, {"cones_checked", r.cones_checked}, {"failures", failures}};
}

int cmd_limits(Session& s, const Workspace& ws, const Options& o) {
    if (!o.functor.empty()) {
        auto f = ws.functor(o.functor);
        auto scope = o.scope == "available" ? available_scope(f.source()) : *parse_scope(o.scope);
        auto r = preserves_finite_limits(f, scope);
        s.text << "functor " << f.name() << " (" << to_string(scope) << "): " << r.to_text();
        s.record["scope"] = to_string(scope);
        s.record["preservation"] = limits_json(r);
        return s.verdict(r.ok());
    }
    if (o.cat.empty()) return s.error("limits needs --cat or --functor");
    auto c = ws.category(o.cat);
    json terminals = json::array();
    s.text << "terminal objects of " << c->name() << ":";
    for (auto t : terminal_objects(*c)) {
        s.text << " " << c->name_of(t);
        terminals.push_back(c->name_of(t));
    }
    s.text << "\n";
    json products = json::array();
    const auto ids = c->identities();
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = i; j < ids.size(); ++j) {
            auto p = binary_product(*c, ids[i], ids[j]);
            const auto a = c->name_of(ids[i]), b = c->name_of(ids[j]);
            if (p) {
                s.text << "product " << a << " x " << b << " = " << c->name_of(p->apex) << " (legs "
                       << c->name_of(p->legs[0]) << ", " << c->name_of(p->legs[1]) << ")\n";
                products.push_back({{"factors", {a, b}},
                                    {"apex", c->name_of(p->apex)},
                                    {"legs", {c->name_of(p->legs[0]), c->name_of(p->legs[1])}}});
            } else {
                s.text << "product " << a << " x " << b << ": none\n";
                products.push_back({{"factors", {a, b}}, {"apex", nullptr}});
            }
        }
    const auto scope = available_scope(*c);
    s.text << "complete for: " << to_string(scope) << "\n";
    s.record["terminal"] = terminals;
    s.record["products"] = products;
    s.record["scope"] = to_string(scope);
    return s.verdict(true);
}

int cmd_admissible(Session& s, const Workspace& ws, const Options& o) {
    auto r = is_admissible(ws.functor(o.left), ws.functor(o.right), ws.nat(o.unit), ws.nat(o.counit));
    s.text << r.to_text();
    s.record["adjunction"] = adjunction_json(r.adjunction);
    s.record["scope"] = to_string(r.scope);
    s.record["preservation"] = limits_json(r.limits);
    return s.verdict(r.ok());
}

int cmd_convert(Session& s, const Workspace& ws, const Options& o) {
    Document doc;
    for (const auto& [name, decl] : ws.document().categories) {
        if (!o.cat.empty() && name != o.cat) continue;
        auto c = ws.category(name);
        if (o.to == "objectless")
            add_category(doc, *c);
        else
            doc.categories.emplace(name, to_standard(*c));
    }
    if (!o.cat.empty() && doc.categories.empty()) throw name_not_found(o.cat);
    if (o.cat.empty()) {
        // Arrow names survive both conversions; component keys become
        // identity names, which both block kinds accept.
        for (const auto& [name, f] : ws.document().functors) doc.functors.emplace(name, f);
        for (const auto& [name, n] : ws.document().nats) {
            auto t = ws.nat(name);
            doc.nats.emplace(name, nat_decl(t, n.from, n.to));
        }
    }
    s.emit_catspec(catspec::serialize(doc));
    return s.verdict(true);
}

int cmd_generate(Session& s, const std::string& kind, const Options& o) {
    Document doc;
    if (kind == "finset") {
        auto c = gen_finset(o.max_size, o.dup, o.name);
        doc.categories.emplace(c.name, c);
    } else if (kind == "discrete") {
        auto c = gen_discrete(o.n, o.name);
        doc.categories.emplace(c.name, c);
    } else if (kind == "walking-iso") {
        auto c = gen_walking_iso(o.name.empty() ? "WalkingIso" : o.name);
        doc.categories.emplace(c.name, c);
    } else {
        auto c = gen_random(o.seed, o.max_morphisms, o.name);
        doc.categories.emplace(c.name, c);
    }
    s.record["generator"] = kind;
    s.emit_catspec(catspec::serialize(doc));
    return s.verdict(true);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Finite categories from composition tables", "arrowcat"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));

    auto file_cmd = [&](const std::string& name, const std::string& help) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("file", o.file, "catspec file")->required();
        return sub;
    };
    auto* check = file_cmd("check", "Validate every category, functor and transformation");
    auto* identities = file_cmd("identities", "List identities and the typing of every morphism");
    identities->add_option("--cat", o.cat)->required();
    auto* homs = file_cmd("homs", "List the hom-classes");
    homs->add_option("--cat", o.cat)->required();
    auto* skel = file_cmd("skeleton", "Emit a skeleton with its equivalence data");
    skel->add_option("--cat", o.cat)->required();
    skel->add_option("--seed", o.seed, "Representative choice seed");
    auto* iso = file_cmd("iso", "Search for an isomorphism of categories");
    iso->add_option("--left", o.left)->required();
    iso->add_option("--right", o.right)->required();
    iso->add_option("--cap", o.cap, "Largest category searched");
    auto* equiv = file_cmd("equiv", "Decide equivalence and emit a witness");
    equiv->add_option("--left", o.left)->required();
    equiv->add_option("--right", o.right)->required();
    equiv->add_option("--cap", o.cap, "Largest skeleton searched");
    equiv->add_flag("--brute-force", o.brute_force, "Use exhaustive search");
    auto* fcheck = file_cmd("functor-check", "Check the functor laws");
    fcheck->add_option("--functor", o.functor)->required();
    auto* ncheck = file_cmd("nat-check", "Check naturality");
    ncheck->add_option("--nat", o.nat)->required();
    auto* adjoint = file_cmd("adjoint-check", "Check an adjunction candidate");
    auto* admissible = file_cmd("admissible", "Adjunction plus preservation of finite limits");
    for (auto* sub : {adjoint, admissible}) {
        sub->add_option("--left", o.left, "Left adjoint")->required();
        sub->add_option("--right", o.right, "Right adjoint")->required();
        sub->add_option("--unit", o.unit)->required();
        sub->add_option("--counit", o.counit)->required();
    }
    adjoint->add_option("--mode", o.mode)->check(CLI::IsMember({"standard", "paper-literal"}));
    auto* limits = file_cmd("limits", "List limits, or check that a functor preserves them");
    limits->add_option("--cat", o.cat);
    limits->add_option("--functor", o.functor);
    limits->add_option("--scope", o.scope, "all, available, or a list of terminal,products,equalizers")
        ->check([](const std::string& v) {
            return v == "available" || parse_scope(v) ? std::string{} : "unknown limit kind in '" + v + "'";
        });
    auto* convert = file_cmd("convert", "Convert between objectless and standard blocks");
    convert->add_option("--to", o.to)->required()->check(CLI::IsMember({"objectless", "standard"}));
    convert->add_option("--cat", o.cat, "Convert one category only");

    auto* generate = app.add_subcommand("generate", "Print a generated category");
    generate->require_subcommand(1);
    auto* g_finset = generate->add_subcommand("finset", "All functions between small sets");
    g_finset->add_option("--max-size", o.max_size)->check(CLI::Range(0, 9));
    g_finset->add_option("--dup", o.dup, "Add a copy of a set of this size (repeatable)");
    auto* g_discrete = generate->add_subcommand("discrete", "Identities only");
    g_discrete->add_option("--n", o.n)->check(CLI::Range(0, 4096));
    auto* g_iso = generate->add_subcommand("walking-iso", "Two objects and an isomorphism");
    auto* g_random = generate->add_subcommand("random", "Seeded random category");
    g_random->add_option("--seed", o.seed);
    g_random->add_option("--max-morphisms", o.max_morphisms)->check(CLI::Range(1, 4096));
    for (auto* sub : {g_finset, g_discrete, g_iso, g_random}) sub->add_option("--name", o.name);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return holds;
        }
        err << "usage error: " << e.what() << "\n" << "run with --help for usage\n";
        return failure;
    }

    Session s(o, out, err);
    try {
        if (generate->parsed()) {
            std::string kind = g_finset->parsed() ? "finset" : g_discrete->parsed() ? "discrete" : g_iso->parsed() ? "walking-iso" : "random";
            s.record["command"] = "generate";
            return cmd_generate(s, kind, o);
        }
        const auto* sub = app.get_subcommands().front();
        s.record["command"] = sub->get_name();
        s.record["file"] = o.file;
        Workspace ws(catspec::read_file(o.file));
        if (sub == check) return cmd_check(s, ws);
        if (sub == identities) return cmd_identities(s, ws, o);
        if (sub == homs) return cmd_homs(s, ws, o);
        if (sub == skel) return cmd_skeleton(s, ws, o);
        if (sub == iso) return cmd_iso(s, ws, o);
        if (sub == equiv) return cmd_equiv(s, ws, o);
        if (sub == fcheck) return cmd_functor_check(s, ws, o);
        if (sub == ncheck) return cmd_nat_check(s, ws, o);
        if (sub == adjoint) return cmd_adjoint(s, ws, o);
        if (sub == admissible) return cmd_admissible(s, ws, o);
        if (sub == limits) return cmd_limits(s, ws, o);
        if (sub == convert) return cmd_convert(s, ws, o);
        return s.error("unhandled command " + sub->get_name());
    } catch (const catspec::parse_error& e) {
        return s.parse_failure(e);
    } catch (const invalid_data& e) {
        return s.invalid(e);
    } catch (const inapplicable_scope& e) {
        return s.error(std::string("inapplicable scope: ") + e.what());
    } catch (const capacity_error& e) {
        return s.error(std::string("capacity: ") + e.what());
    } catch (const wiring_error& e) {
        return s.error(std::string("wiring: ") + e.what());
    } catch (const name_not_found& e) {
        return s.error(std::string(e.what()) + " in " + o.file);
    } catch (const error& e) {
        return s.error(e.what());
    }
}

}  // namespace arrowcat::cli

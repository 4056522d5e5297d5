#include <algorithm>
#include <set>

#include "arrowcat/catspec.hpp"

namespace arrowcat::catspec {

namespace {

std::string join(const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t i = 0; i < names.size(); ++i) out += (i ? ", " : "") + names[i];
    return out;
}

void write_table(std::string& out, std::vector<CompositionEntry> table) {
    std::sort(table.begin(), table.end());
    for (const auto& e : table) out += "  compose: " + e.after + " . " + e.before + " = " + e.result + ";\n";
}

void write(std::string& out, const ObjlessData& d) {
    out += "objless " + d.name + " {\n";
    auto arrows = d.morphisms;
    std::sort(arrows.begin(), arrows.end());
    if (!arrows.empty()) out += "  arrows: " + join(arrows) + ";\n";
    write_table(out, d.table);
    out += "}\n";
}

void write(std::string& out, const StdCategory& declared) {
    StdCategory c = declared;
    complete_identities(c);
    out += "category " + c.name + " {\n";
    auto objects = c.objects;
    std::sort(objects.begin(), objects.end());
    if (!objects.empty()) out += "  objects: " + join(objects) + ";\n";
    auto arrows = c.arrows;
    std::sort(arrows.begin(), arrows.end(), [](const StdArrow& a, const StdArrow& b) { return a.name < b.name; });
    for (const auto& a : arrows) out += "  arrow " + a.name + ": " + a.dom + " -> " + a.cod + ";\n";
    for (const auto& [object, arrow] : c.id_of) out += "  id " + object + " = " + arrow + ";\n";
    write_table(out, c.table);
    out += "}\n";
}

}  // namespace

std::string serialize(const Document& doc) {
    std::vector<std::string> blocks;
    for (const auto& [name, decl] : doc.categories) {
        std::string out;
        std::visit([&](const auto& d) { write(out, d); }, decl);
        blocks.push_back(std::move(out));
    }
    for (const auto& [name, f] : doc.functors) {
        std::string out = "functor " + f.name + ": " + f.source + " -> " + f.target +
                          (f.variance == Variance::contravariant ? " contravariant" : "") + " {\n";
        for (const auto& [from, to] : f.map) out += "  map " + from + " -> " + to + ";\n";
        out += "}\n";
        blocks.push_back(std::move(out));
    }
    for (const auto& [name, n] : doc.nats) {
        std::string out = "nat " + n.name + ": " + n.from.to_text() + " => " + n.to.to_text() + " {\n";
        for (const auto& [key, value] : n.components) out += "  component " + key + ": " + value + ";\n";
        out += "}\n";
        blocks.push_back(std::move(out));
    }
    std::string text;
    for (std::size_t i = 0; i < blocks.size(); ++i) text += (i ? "\n" : "") + blocks[i];
    return text;
}

ObjlessData declare(const Category& c) { return c.data(); }

FunctorDecl declare(const Functor& f) {
    FunctorDecl d{f.name(), f.source().name(), f.target().name(), f.variance(), {}};
    for (auto a : f.source().arrows()) d.map.emplace(f.source().name_of(a), f.target().name_of(f(a)));
    return d;
}

NatDecl declare(const NatTransf& t) {
    NatDecl d{t.name(), {{}, {t.from().name()}}, {{}, {t.to().name()}}, {}};
    d.components = t.component_names();
    return d;
}

}  // namespace arrowcat::catspec

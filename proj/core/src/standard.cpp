#include "arrowcat/standard.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "arrowcat/isomorphism_search.hpp"

namespace arrowcat {

namespace {

void require_names(const StdCategory& c) {
    std::set<std::string> seen;
    for (const auto& o : c.objects) {
        if (!is_valid_name(o)) throw error("malformed object name '" + o + "'");
        if (!seen.insert(o).second) throw error("duplicate object name '" + o + "'");
    }
    seen.clear();
    for (const auto& a : c.arrows) {
        if (!is_valid_name(a.name)) throw error("malformed arrow name '" + a.name + "'");
        if (!seen.insert(a.name).second) throw error("duplicate arrow name '" + a.name + "'");
    }
}

}  // namespace

ValidationReport validate_standard(const StdCategory& c) {
    require_names(c);
    ValidationReport report;
    const std::set<std::string> objects(c.objects.begin(), c.objects.end());
    std::unordered_map<std::string, const StdArrow*> arrows;
    bool typed = true;
    for (const auto& a : c.arrows) {
        arrows.emplace(a.name, &a);
        for (const auto* end : {&a.dom, &a.cod})
            if (!objects.count(*end)) {
                report.add(ViolationKind::unknown_reference, {a.name, *end},
                           "arrow " + a.name + " refers to unknown object " + *end);
                typed = false;
            }
    }
    for (const auto& o : c.objects) {
        auto it = c.id_of.find(o);
        if (it == c.id_of.end()) {
            report.add(ViolationKind::identity_missing, {o}, "object " + o + " has no identity arrow");
            typed = false;
            continue;
        }
        auto a = arrows.find(it->second);
        if (a == arrows.end()) {
            report.add(ViolationKind::unknown_reference, {o, it->second},
                       "identity of " + o + " names unknown arrow " + it->second);
            typed = false;
        } else if (a->second->dom != o || a->second->cod != o) {
            report.add(ViolationKind::typing, {it->second, o},
                       "identity " + it->second + " of " + o + " is not an arrow " + o + " -> " + o);
            typed = false;
        }
    }

    std::map<std::pair<std::string, std::string>, std::string> table;
    for (const auto& e : c.table) {
        bool known = true;
        for (const auto* n : {&e.after, &e.before, &e.result})
            if (!arrows.count(*n)) {
                report.add(ViolationKind::unknown_reference, {*n},
                           "composition " + e.after + " . " + e.before + " refers to unknown arrow " + *n);
                known = false;
            }
        if (!known) {
            typed = false;
            continue;
        }
        auto [it, inserted] = table.emplace(std::pair{e.after, e.before}, e.result);
        if (!inserted && it->second != e.result)
            report.add(ViolationKind::functionality, {e.after, e.before},
                       e.after + " . " + e.before + " is given two results: " + it->second + " and " +
                           e.result);
        const auto& g = *arrows.at(e.after);
        const auto& f = *arrows.at(e.before);
        const auto& h = *arrows.at(e.result);
        if (f.cod != g.dom) {
            report.add(ViolationKind::typing, {e.after, e.before},
                       e.after + " . " + e.before + " is listed but " + e.before + " ends at " + f.cod +
                           " while " + e.after + " starts at " + g.dom);
            typed = false;
        } else if (h.dom != f.dom || h.cod != g.cod) {
            report.add(ViolationKind::typing, {e.after, e.before, e.result},
                       "result " + e.result + " of " + e.after + " . " + e.before + " should be " + f.dom +
                           " -> " + g.cod);
            typed = false;
        }
    }
    if (!typed) return report;

    auto get = [&](const std::string& after, const std::string& before) -> const std::string* {
        auto it = table.find({after, before});
        return it == table.end() ? nullptr : &it->second;
    };

    std::map<std::string, std::vector<const StdArrow*>> out_of;
    for (const auto& a : c.arrows) out_of[a.dom].push_back(&a);

    for (const auto& f : c.arrows)
        for (const auto* g : out_of[f.cod])
            if (!get(g->name, f.name))
                report.add(ViolationKind::composition_missing, {g->name, f.name},
                           g->name + " . " + f.name + " is composable but not defined");

    for (const auto& [object, id] : c.id_of) {
        for (const auto& f : c.arrows) {
            if (f.cod == object) {
                if (const auto* r = get(id, f.name); r && *r != f.name)
                    report.add(ViolationKind::identity_nonneutral, {id, f.name},
                               id + " . " + f.name + " = " + *r + " instead of " + f.name);
            }
            if (f.dom == object) {
                if (const auto* r = get(f.name, id); r && *r != f.name)
                    report.add(ViolationKind::identity_nonneutral, {id, f.name},
                               f.name + " . " + id + " = " + *r + " instead of " + f.name);
            }
        }
    }

    for (const auto& f : c.arrows)
        for (const auto* g : out_of[f.cod])
            for (const auto* h : out_of[g->cod]) {
                const auto* gf = get(g->name, f.name);
                const auto* hg = get(h->name, g->name);
                if (!gf || !hg) continue;  // reported as composition-missing
                const auto* left = get(h->name, *gf);
                const auto* right = get(*hg, f.name);
                if (left && right && *left != *right)
                    report.add(ViolationKind::associativity_equal, {h->name, g->name, f.name},
                               h->name + " . (" + g->name + " . " + f.name + ") = " + *left + " but (" +
                                   h->name + " . " + g->name + ") . " + f.name + " = " + *right);
            }
    return report;
}

void complete_identities(StdCategory& c) {
    std::unordered_map<std::string, std::size_t> arrow_pos;
    for (std::size_t i = 0; i < c.arrows.size(); ++i) arrow_pos.emplace(c.arrows[i].name, i);
    for (const auto& o : c.objects) {
        if (c.id_of.count(o)) continue;
        const std::string id = "id_" + o;
        if (auto it = arrow_pos.find(id); it != arrow_pos.end()) {
            const auto& existing = c.arrows[it->second];
            if (existing.dom != o || existing.cod != o)
                throw error("generated identity name '" + id + "' collides with arrow " + id + ": " +
                            existing.dom + " -> " + existing.cod);
        } else {
            arrow_pos.emplace(id, c.arrows.size());
            c.arrows.push_back({id, o, o});
        }
        c.id_of.emplace(o, id);
    }
    std::set<std::pair<std::string, std::string>> present;
    for (const auto& e : c.table) present.emplace(e.after, e.before);
    auto add = [&](const std::string& after, const std::string& before, const std::string& result) {
        if (present.emplace(after, before).second) c.table.push_back({after, before, result});
    };
    for (const auto& [object, id] : c.id_of)
        for (const auto& f : c.arrows) {
            if (f.cod == object) add(id, f.name, f.name);
            if (f.dom == object) add(f.name, id, f.name);
        }
    canonicalize(c);
}

void canonicalize(StdCategory& c) {
    std::sort(c.objects.begin(), c.objects.end());
    std::sort(c.arrows.begin(), c.arrows.end());
    std::sort(c.table.begin(), c.table.end());
    c.table.erase(std::unique(c.table.begin(), c.table.end()), c.table.end());
}

Category to_objectless(const StdCategory& c) {
    auto report = validate_standard(c);
    if (!report.ok())
        throw invalid_data("standard category '" + c.name + "' is not valid", std::move(report));
    ObjlessData data;
    data.name = c.name;
    for (const auto& a : c.arrows) data.morphisms.push_back(a.name);
    data.table = c.table;
    return Category(std::move(data));
}

StdCategory to_standard(const Category& c) {
    StdCategory s;
    s.name = c.name();
    for (auto id : c.identities()) {
        s.objects.push_back(c.name_of(id));
        s.id_of.emplace(c.name_of(id), c.name_of(id));
    }
    for (auto a : c.arrows()) s.arrows.push_back({c.name_of(a), c.name_of(c.dom(a)), c.name_of(c.cod(a))});
    s.table = c.data().table;
    canonicalize(s);
    return s;
}

std::optional<Renaming> equal_up_to_renaming(const StdCategory& a, const StdCategory& b) {
    if (a.arrows.size() > renaming_search_cap || b.arrows.size() > renaming_search_cap)
        throw capacity_error("renaming search is capped at " + std::to_string(renaming_search_cap) +
                             " arrows");
    if (a.objects.size() != b.objects.size() || a.arrows.size() != b.arrows.size()) return std::nullopt;
    const Category ca = to_objectless(a);
    const Category cb = to_objectless(b);
    auto map = find_isomorphism_map(ca, cb, renaming_search_cap);
    if (!map) return std::nullopt;

    std::map<std::string, std::string> object_of_b;
    for (const auto& [object, id] : b.id_of) object_of_b.emplace(id, object);
    Renaming r;
    for (const auto& [object, id] : a.id_of)
        r.objects.emplace(object, object_of_b.at(cb.name_of((*map)[ca.arrow(id).index])));
    for (auto f : ca.arrows()) r.arrows.emplace(ca.name_of(f), cb.name_of((*map)[f.index]));
    return r;
}

StdCategory rename_objects(const StdCategory& c, const std::map<std::string, std::string>& objects) {
    auto rename = [&](const std::string& o) {
        auto it = objects.find(o);
        return it == objects.end() ? o : it->second;
    };
    StdCategory out;
    out.name = c.name;
    out.table = c.table;
    for (const auto& o : c.objects) out.objects.push_back(rename(o));
    for (const auto& a : c.arrows) out.arrows.push_back({a.name, rename(a.dom), rename(a.cod)});
    for (const auto& [o, id] : c.id_of) out.id_of.emplace(rename(o), id);
    canonicalize(out);
    return out;
}

}  // namespace arrowcat

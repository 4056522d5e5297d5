#include "arrowcat/category.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <utility>

namespace arrowcat {

namespace {

constexpr std::size_t dense_hom_limit = 256;

// Index of a raw table: names resolved to positions, conflicts recorded.
struct TableIndex {
    std::vector<std::string> names;
    std::unordered_map<std::string, std::uint32_t> position;
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> table;
    // before_of[b] = {(a, b.a)}, after_of[b] = {(g, g.b)}
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> before_of;
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> after_of;
    std::vector<bool> self_composable;
    std::vector<bool> identity;

    std::optional<std::uint32_t> get(std::uint32_t after, std::uint32_t before) const {
        auto it = table.find({after, before});
        if (it == table.end()) return std::nullopt;
        return it->second;
    }
};

TableIndex index_table(const ObjlessData& data, ValidationReport* report) {
    if (data.morphisms.size() > max_category_size)
        throw capacity_error("category '" + data.name + "' has " +
                             std::to_string(data.morphisms.size()) + " morphisms; the cap is " +
                             std::to_string(max_category_size));
    TableIndex ix;
    ix.names = data.morphisms;
    for (std::uint32_t i = 0; i < ix.names.size(); ++i) {
        const auto& n = ix.names[i];
        if (!is_valid_name(n)) throw error("malformed morphism name '" + n + "'");
        if (!ix.position.emplace(n, i).second) throw error("duplicate morphism name '" + n + "'");
    }
    auto pos = [&](const std::string& n) {
        auto it = ix.position.find(n);
        if (it == ix.position.end()) throw name_not_found(n);
        return it->second;
    };
    for (const auto& e : data.table) {
        auto after = pos(e.after), before = pos(e.before), result = pos(e.result);
        auto [it, inserted] = ix.table.emplace(std::pair{after, before}, result);
        if (!inserted && it->second != result && report)
            report->add(ViolationKind::functionality, {e.after, e.before},
                        e.after + " . " + e.before + " is given two results: " +
                            ix.names[it->second] + " and " + e.result);
    }
    const auto n = ix.names.size();
    ix.before_of.resize(n);
    ix.after_of.resize(n);
    ix.self_composable.assign(n, false);
    ix.identity.assign(n, false);
    for (const auto& [k, r] : ix.table) {
        ix.before_of[k.first].emplace_back(k.second, r);
        ix.after_of[k.second].emplace_back(k.first, r);
        if (k.first == k.second) ix.self_composable[k.first] = true;
    }
    for (std::uint32_t i = 0; i < n; ++i) {
        if (!ix.self_composable[i]) continue;
        bool neutral = true;
        for (auto [a, r] : ix.before_of[i]) neutral = neutral && r == a;  // i . a = a
        for (auto [g, r] : ix.after_of[i]) neutral = neutral && r == g;   // g . i = g
        ix.identity[i] = neutral;
    }
    return ix;
}

}  // namespace

bool is_valid_name(std::string_view name) noexcept {
    if (name.empty() || std::isdigit(static_cast<unsigned char>(name.front()))) return false;
    return std::all_of(name.begin(), name.end(), [](char ch) {
        return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
    });
}

ValidationReport validate_objectless(const ObjlessData& data) {
    ValidationReport report;
    const TableIndex ix = index_table(data, &report);
    const auto& names = ix.names;
    const auto n = static_cast<std::uint32_t>(names.size());

    // Identities on each side of every morphism.
    for (std::uint32_t a = 0; a < n; ++a) {
        for (int side = 0; side < 2; ++side) {
            // side 0: a . i defined (domain side); side 1: i . a defined.
            const auto& partners = side == 0 ? ix.before_of[a] : ix.after_of[a];
            std::vector<std::uint32_t> ids;
            std::optional<std::uint32_t> idempotent;
            for (auto [p, r] : partners) {
                (void)r;
                if (ix.identity[p])
                    ids.push_back(p);
                else if (ix.get(p, p) == p)
                    idempotent = p;
            }
            const char* where = side == 0 ? "domain" : "codomain";
            if (ids.empty()) {
                if (idempotent)
                    report.add(ViolationKind::identity_nonneutral, {names[a], names[*idempotent]},
                               "the only identity candidate on the " + std::string(where) +
                                   " side of " + names[a] + " is " + names[*idempotent] +
                                   ", which is not neutral");
                else
                    report.add(ViolationKind::identity_missing, {names[a]},
                               names[a] + " has no identity on its " + where + " side");
            } else if (ids.size() > 1) {
                report.add(ViolationKind::identity_nonunique, {names[a], names[ids[0]], names[ids[1]]},
                           names[a] + " composes with several identities on its " + where + " side");
            }
        }
    }

    // Associativity, first bullet: b.a and g.b defined => g(ba), (gb)a
    // defined and equal.
    for (const auto& [k, ba] : ix.table) {
        const auto [b, a] = k;
        for (auto [g, gb] : ix.after_of[b]) {
            auto left = ix.get(g, ba);
            auto right = ix.get(gb, a);
            if (left && right) {
                if (*left != *right)
                    report.add(ViolationKind::associativity_equal, {names[g], names[b], names[a]},
                               names[g] + " . (" + names[b] + " . " + names[a] + ") = " + names[*left] +
                                   " but (" + names[g] + " . " + names[b] + ") . " + names[a] + " = " +
                                   names[*right]);
            } else {
                const auto missing = left ? "(" + names[g] + " . " + names[b] + ") . " + names[a]
                                          : names[g] + " . (" + names[b] + " . " + names[a] + ")";
                report.add(ViolationKind::associativity_existence, {names[g], names[b], names[a]},
                           missing + " is undefined although " + names[b] + " . " + names[a] + " and " +
                               names[g] + " . " + names[b] + " exist");
            }
        }
    }
    // Second bullet: g(ba) defined => gb defined; (gb)a defined => ba defined.
    for (const auto& [k, ba] : ix.table) {
        const auto [b, a] = k;
        for (auto [g, r] : ix.after_of[ba]) {
            (void)r;
            if (!ix.get(g, b))
                report.add(ViolationKind::associativity_existence, {names[g], names[b], names[a]},
                           names[g] + " . (" + names[b] + " . " + names[a] + ") exists but " + names[g] +
                               " . " + names[b] + " does not");
        }
    }
    for (const auto& [k, gb] : ix.table) {
        const auto [g, b] = k;
        for (auto [a, r] : ix.before_of[gb]) {
            (void)r;
            if (!ix.get(b, a))
                report.add(ViolationKind::associativity_existence, {names[g], names[b], names[a]},
                           "(" + names[g] + " . " + names[b] + ") . " + names[a] + " exists but " +
                               names[b] + " . " + names[a] + " does not");
        }
    }
    return report;
}

std::vector<std::string> infer_identities(const ObjlessData& data) {
    const TableIndex ix = index_table(data, nullptr);
    std::vector<std::string> out;
    for (std::size_t i = 0; i < ix.names.size(); ++i)
        if (ix.identity[i]) out.push_back(ix.names[i]);
    std::sort(out.begin(), out.end());
    return out;
}

Category::Category(ObjlessData data) : data_(std::move(data)) {
    auto report = validate_objectless(data_);
    if (!report.ok())
        throw invalid_data("category '" + data_.name + "' is not a valid objectless category",
                           std::move(report));

    std::sort(data_.morphisms.begin(), data_.morphisms.end());
    std::sort(data_.table.begin(), data_.table.end());
    data_.table.erase(std::unique(data_.table.begin(), data_.table.end()), data_.table.end());

    const auto n = data_.morphisms.size();
    for (std::uint32_t i = 0; i < n; ++i) by_name_.emplace(data_.morphisms[i], Arrow{i});
    triples_.reserve(data_.table.size());
    for (const auto& e : data_.table) {
        Triple t{by_name_.at(e.after), by_name_.at(e.before), by_name_.at(e.result)};
        table_.emplace(key(t.after, t.before), t.result);
        triples_.push_back(t);
    }

    const TableIndex ix = index_table(data_, nullptr);
    identity_slot_.assign(n, -1);
    for (std::uint32_t i = 0; i < n; ++i) {
        if (ix.identity[i]) {
            identity_slot_[i] = static_cast<int>(identities_.size());
            identities_.push_back(Arrow{i});
        }
    }
    dom_.resize(n);
    cod_.resize(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        for (auto [p, r] : ix.before_of[i])
            if (ix.identity[p]) dom_[i] = Arrow{p};
        for (auto [p, r] : ix.after_of[i])
            if (ix.identity[p]) cod_[i] = Arrow{p};
    }

    const auto k = identities_.size();
    if (k <= dense_hom_limit) hom_.resize(k * k);
    for (std::uint32_t i = 0; i < n; ++i) {
        auto from = static_cast<std::size_t>(identity_slot_[dom_[i].index]);
        auto to = static_cast<std::size_t>(identity_slot_[cod_[i].index]);
        if (k <= dense_hom_limit)
            hom_[from * k + to].push_back(Arrow{i});
        else
            hom_sparse_[(std::uint64_t{from} << 32) | to].push_back(Arrow{i});
    }
}

std::optional<Arrow> Category::find(std::string_view name) const {
    auto it = by_name_.find(std::string(name));
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
}

Arrow Category::arrow(std::string_view name) const {
    if (auto a = find(name)) return *a;
    throw name_not_found(std::string(name));
}

std::vector<Arrow> Category::arrows() const {
    std::vector<Arrow> out(size());
    for (std::uint32_t i = 0; i < out.size(); ++i) out[i] = Arrow{i};
    return out;
}

std::optional<Arrow> Category::compose(Arrow after, Arrow before) const {
    auto it = table_.find(key(after, before));
    if (it == table_.end()) return std::nullopt;
    return it->second;
}

void Category::require_identity(Arrow a) const {
    if (a.index >= size()) throw error("arrow index out of range");
    if (!is_identity(a)) throw not_an_identity(name_of(a));
}

std::span<const Arrow> Category::hom(Arrow from, Arrow to) const {
    require_identity(from);
    require_identity(to);
    const auto k = identities_.size();
    const auto f = static_cast<std::size_t>(identity_slot_[from.index]);
    const auto t = static_cast<std::size_t>(identity_slot_[to.index]);
    if (k <= dense_hom_limit) return hom_[f * k + t];
    auto it = hom_sparse_.find((std::uint64_t{f} << 32) | t);
    if (it == hom_sparse_.end()) return {};
    return it->second;
}

CompositionProfile Category::profile(Arrow identity) const {
    require_identity(identity);
    CompositionProfile p;
    for (const auto& t : triples_) {
        if (t.before == identity) p.right_partners.push_back(t.after);
        if (t.after == identity) p.left_partners.push_back(t.before);
    }
    std::sort(p.right_partners.begin(), p.right_partners.end());
    std::sort(p.left_partners.begin(), p.left_partners.end());
    return p;
}

bool Category::discernible(Arrow first, Arrow second) const {
    return profile(first) != profile(second);
}

Category Category::opposite() const {
    ObjlessData op;
    const std::string suffix = "_op";
    if (name().size() > suffix.size() && name().ends_with(suffix))
        op.name = name().substr(0, name().size() - suffix.size());
    else
        op.name = name() + suffix;
    op.morphisms = data_.morphisms;
    op.table.reserve(data_.table.size());
    for (const auto& e : data_.table) op.table.push_back({e.before, e.after, e.result});
    return Category(std::move(op));
}

Category Category::full_subcategory(std::span<const Arrow> identities, std::string name) const {
    std::vector<bool> keep_id(size(), false);
    for (auto i : identities) {
        require_identity(i);
        keep_id[i.index] = true;
    }
    ObjlessData sub;
    sub.name = std::move(name);
    std::vector<bool> keep(size(), false);
    for (std::uint32_t i = 0; i < size(); ++i) {
        keep[i] = keep_id[dom_[i].index] && keep_id[cod_[i].index];
        if (keep[i]) sub.morphisms.push_back(data_.morphisms[i]);
    }
    for (const auto& t : triples_)
        if (keep[t.after.index] && keep[t.before.index])
            sub.table.push_back({name_of(t.after), name_of(t.before), name_of(t.result)});
    return Category(std::move(sub));
}

std::string dom_id(const Category& c, std::string_view morphism) {
    return c.name_of(c.dom(c.arrow(morphism)));
}

std::string cod_id(const Category& c, std::string_view morphism) {
    return c.name_of(c.cod(c.arrow(morphism)));
}

std::optional<std::string> compose(const Category& c, std::string_view after, std::string_view before) {
    auto r = c.compose(c.arrow(after), c.arrow(before));
    if (!r) return std::nullopt;
    return c.name_of(*r);
}

std::vector<std::string> hom_class(const Category& c, std::string_view from, std::string_view to) {
    return names_of(c, c.hom(c.arrow(from), c.arrow(to)));
}

std::vector<std::string> names_of(const Category& c, std::span<const Arrow> arrows) {
    std::vector<std::string> out;
    out.reserve(arrows.size());
    for (auto a : arrows) out.push_back(c.name_of(a));
    return out;
}

}  // namespace arrowcat

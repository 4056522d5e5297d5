#include "arrowcat/natural.hpp"

#include "arrowcat/equivalence.hpp"

namespace arrowcat {

NatTransf::NatTransf(std::string name, Functor from, Functor to, std::map<Arrow, Arrow> components)
    : name_(std::move(name)), from_(std::move(from)), to_(std::move(to)), components_(std::move(components)) {
    if (!(from_.source() == to_.source()) || !(from_.target() == to_.target()))
        throw wiring_error("transformation '" + name_ + "': functors " + from_.name() + " and " +
                           to_.name() + " do not share source and target");
    if (from_.variance() != to_.variance())
        throw wiring_error("transformation '" + name_ + "': functors " + from_.name() + " and " +
                           to_.name() + " differ in variance");
    for (const auto& [id, comp] : components_) {
        if (id.index >= from_.source().size() || comp.index >= from_.target().size())
            throw error("transformation '" + name_ + "' has a component out of range");
    }
}

std::optional<Arrow> NatTransf::component(Arrow identity) const {
    auto it = components_.find(identity);
    if (it == components_.end()) return std::nullopt;
    return it->second;
}

std::map<std::string, std::string> NatTransf::component_names() const {
    std::map<std::string, std::string> out;
    for (const auto& [id, comp] : components_)
        out.emplace(from_.source().name_of(id), from_.target().name_of(comp));
    return out;
}

ValidationReport validate_nat(const NatTransf& t) {
    ValidationReport report;
    const Functor F = t.from().as_covariant();
    const Functor G = t.to().as_covariant();
    const Category& src = F.source();
    const Category& tgt = F.target();

    for (auto key : t.components())
        if (!src.is_identity(key.first))
            report.add(ViolationKind::typing, {src.name_of(key.first)},
                       "component keyed by " + src.name_of(key.first) + ", which is not an identity");

    std::map<Arrow, bool> typed;
    for (auto id : src.identities()) {
        auto comp = t.component(id);
        if (!comp) {
            report.add(ViolationKind::totality, {src.name_of(id)},
                       t.name() + " has no component at " + src.name_of(id));
            continue;
        }
        if (tgt.dom(*comp) != F(id) || tgt.cod(*comp) != G(id)) {
            report.add(ViolationKind::typing, {src.name_of(id), tgt.name_of(*comp)},
                       "component at " + src.name_of(id) + " is " + tgt.name_of(*comp) +
                           " but must go from " + tgt.name_of(F(id)) + " to " + tgt.name_of(G(id)));
            continue;
        }
        typed[id] = true;
    }

    for (auto f : src.arrows()) {
        const Arrow x = src.dom(f), y = src.cod(f);
        if (!typed.count(x) || !typed.count(y)) continue;
        auto left = tgt.compose(*t.component(y), F(f));
        auto right = tgt.compose(G(f), *t.component(x));
        if (!left || !right || *left != *right)
            report.add(ViolationKind::naturality, {src.name_of(f)},
                       "naturality square at " + src.name_of(f) + " does not commute: " +
                           tgt.name_of(*t.component(y)) + " . " + tgt.name_of(F(f)) + " = " +
                           (left ? tgt.name_of(*left) : "undefined") + ", " + tgt.name_of(G(f)) + " . " +
                           tgt.name_of(*t.component(x)) + " = " + (right ? tgt.name_of(*right) : "undefined"));
    }
    return report;
}

NatTransf nat_from_names(const std::string& name, const Functor& from, const Functor& to,
                         const std::map<std::string, std::string>& components) {
    std::map<Arrow, Arrow> comps;
    for (const auto& [key, value] : components) {
        Arrow id = from.source().arrow(key);
        if (!from.source().is_identity(id)) throw not_an_identity(key);
        comps.emplace(id, from.target().arrow(value));
    }
    return NatTransf(name, from, to, std::move(comps));
}

NatTransf identity_transformation(const Functor& f) {
    std::map<Arrow, Arrow> comps;
    for (auto id : f.source().identities()) comps.emplace(id, f(id));
    return NatTransf("id_" + f.name(), f, f, std::move(comps));
}

bool is_natural_isomorphism(const NatTransf& t) {
    for (auto id : t.from().source().identities()) {
        auto comp = t.component(id);
        if (!comp || !is_isomorphism(t.from().target(), *comp)) return false;
    }
    return true;
}

}  // namespace arrowcat

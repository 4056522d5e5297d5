#include "arrowcat/workspace.hpp"

namespace arrowcat::catspec {

Workspace::Workspace(Document doc) : doc_(std::move(doc)) {}

ValidationReport Workspace::check_category(const std::string& name) const {
    auto it = doc_.categories.find(name);
    if (it == doc_.categories.end()) throw name_not_found(name);
    if (const auto* s = std::get_if<StdCategory>(&it->second)) return validate_standard(*s);
    return validate_objectless(std::get<ObjlessData>(it->second));
}

CategoryPtr Workspace::category(const std::string& name) const {
    {
        std::lock_guard lock(mutex_);
        if (auto it = cache_.find(name); it != cache_.end()) return it->second;
    }
    auto it = doc_.categories.find(name);
    if (it == doc_.categories.end()) throw name_not_found(name);
    CategoryPtr c;
    if (const auto* s = std::get_if<StdCategory>(&it->second))
        c = share(to_objectless(*s));
    else
        c = share(Category(std::get<ObjlessData>(it->second)));
    std::lock_guard lock(mutex_);
    return cache_.emplace(name, c).first->second;
}

ValidationReport Workspace::check_functor(const std::string& name) const {
    auto it = doc_.functors.find(name);
    if (it == doc_.functors.end()) throw name_not_found(name);
    const auto& d = it->second;
    return validate_functor(d.name, category(d.source), category(d.target), d.map, d.variance);
}

Functor Workspace::functor(const std::string& name) const {
    auto it = doc_.functors.find(name);
    if (it == doc_.functors.end()) throw name_not_found(name);
    const auto& d = it->second;
    return make_functor(d.name, category(d.source), category(d.target), d.map, d.variance);
}

Functor Workspace::functor(const FunctorExpr& expr) const {
    if (expr.is_identity()) return functor_identity(category(expr.identity_of));
    if (expr.chain.empty()) throw error("empty functor expression");
    Functor result = functor(expr.chain.back());
    for (auto i = expr.chain.size() - 1; i-- > 0;) {
        auto next = functor_compose(functor(expr.chain[i]), result);
        if (!next) throw wiring_error("cannot compose " + expr.chain[i] + " after " + result.name());
        result = *next;
    }
    return result;
}

NatTransf Workspace::nat(const std::string& name) const {
    auto it = doc_.nats.find(name);
    if (it == doc_.nats.end()) throw name_not_found(name);
    const auto& d = it->second;
    Functor from = functor(d.from);
    Functor to = functor(d.to);
    auto components = d.components;
    if (auto cat = doc_.categories.find(from.source().name()); cat != doc_.categories.end())
        if (const auto* s = std::get_if<StdCategory>(&cat->second)) {
            StdCategory completed = *s;
            complete_identities(completed);
            std::map<std::string, std::string> keyed;
            for (const auto& [key, value] : components) {
                auto id = completed.id_of.find(key);
                keyed[id == completed.id_of.end() ? key : id->second] = value;
            }
            components = std::move(keyed);
        }
    return nat_from_names(d.name, from, to, components);
}

ValidationReport Workspace::check_nat(const std::string& name) const { return validate_nat(nat(name)); }

}  // namespace arrowcat::catspec

#include "arrowcat/functor.hpp"

namespace arrowcat {

std::string_view to_string(Variance v) noexcept {
    return v == Variance::covariant ? "covariant" : "contravariant";
}

Functor::Functor(std::string name, CategoryPtr source, CategoryPtr target, std::vector<Arrow> map,
                 Variance variance)
    : name_(std::move(name)),
      source_(std::move(source)),
      target_(std::move(target)),
      map_(std::move(map)),
      variance_(variance) {
    if (!source_ || !target_) throw error("functor '" + name_ + "' needs a source and a target");
    if (map_.size() != source_->size())
        throw error("functor '" + name_ + "' maps " + std::to_string(map_.size()) + " of " +
                    std::to_string(source_->size()) + " source morphisms");
    for (auto a : map_)
        if (a.index >= target_->size()) throw error("functor '" + name_ + "' points outside its target");
}

std::map<std::string, std::string> Functor::assignment() const {
    std::map<std::string, std::string> out;
    for (std::uint32_t i = 0; i < map_.size(); ++i)
        out.emplace(source_->name_of(Arrow{i}), target_->name_of(map_[i]));
    return out;
}

Functor Functor::as_covariant() const {
    if (covariant()) return *this;
    // opposite() keeps morphism names, hence indices.
    return Functor(name_, share(source_->opposite()), target_, map_, Variance::covariant);
}

Functor Functor::renamed(std::string name) const {
    Functor copy = *this;
    copy.name_ = std::move(name);
    return copy;
}

bool same_functor(const Functor& a, const Functor& b) {
    return a.variance() == b.variance() && a.source() == b.source() && a.target() == b.target() &&
           a.map() == b.map();
}

ValidationReport validate_functor(const Functor& f) {
    ValidationReport report;
    const Functor cov = f.as_covariant();
    const Category& src = cov.source();
    const Category& tgt = cov.target();
    // Names reported against the caller's view of the source.
    auto nm = [&](Arrow a) { return src.name_of(a); };
    auto tn = [&](Arrow a) { return tgt.name_of(a); };

    for (auto id : src.identities())
        if (!tgt.is_identity(cov(id)))
            report.add(ViolationKind::identity_not_preserved, {nm(id), tn(cov(id))},
                       "identity " + nm(id) + " is sent to " + tn(cov(id)) + ", which is not an identity");
    for (auto a : src.arrows()) {
        if (tgt.dom(cov(a)) != cov(src.dom(a)))
            report.add(ViolationKind::identity_not_preserved, {nm(a), nm(src.dom(a))},
                       "the identity on the domain side of " + nm(a) + " is not sent to that of " +
                           tn(cov(a)));
        if (tgt.cod(cov(a)) != cov(src.cod(a)))
            report.add(ViolationKind::identity_not_preserved, {nm(a), nm(src.cod(a))},
                       "the identity on the codomain side of " + nm(a) + " is not sent to that of " +
                           tn(cov(a)));
    }
    for (const auto& t : src.compositions()) {
        auto image = tgt.compose(cov(t.after), cov(t.before));
        // In the caller's terms a contravariant functor sends after . before
        // (of the opposite) = before . after of the source.
        const auto law = f.covariant()
                             ? "F(" + nm(t.after) + " . " + nm(t.before) + ")"
                             : "F(" + nm(t.before) + " . " + nm(t.after) + ")";
        if (!image)
            report.add(ViolationKind::composition_not_preserved, {nm(t.after), nm(t.before)},
                       law + " = " + tn(cov(t.result)) + " but " + tn(cov(t.after)) + " . " +
                           tn(cov(t.before)) + " is undefined");
        else if (*image != cov(t.result))
            report.add(ViolationKind::composition_not_preserved, {nm(t.after), nm(t.before), nm(t.result)},
                       law + " = " + tn(cov(t.result)) + " but " + tn(cov(t.after)) + " . " +
                           tn(cov(t.before)) + " = " + tn(*image));
    }
    return report;
}

ValidationReport validate_functor(const std::string& name, const CategoryPtr& source,
                                  const CategoryPtr& target,
                                  const std::map<std::string, std::string>& assignment,
                                  Variance variance) {
    ValidationReport report;
    std::vector<std::optional<Arrow>> partial(source->size());
    for (const auto& [from, to] : assignment) partial[source->arrow(from).index] = target->arrow(to);
    std::vector<Arrow> map;
    for (auto a : source->arrows()) {
        if (!partial[a.index])
            report.add(ViolationKind::totality, {source->name_of(a)},
                       "functor " + name + " does not map " + source->name_of(a));
        else
            map.push_back(*partial[a.index]);
    }
    if (!report.ok()) return report;
    return validate_functor(Functor(name, source, target, std::move(map), variance));
}

Functor make_functor(const std::string& name, const CategoryPtr& source, const CategoryPtr& target,
                     const std::map<std::string, std::string>& assignment, Variance variance) {
    auto report = validate_functor(name, source, target, assignment, variance);
    if (!report.ok()) throw invalid_data("functor '" + name + "' is not valid", std::move(report));
    std::vector<Arrow> map(source->size());
    for (const auto& [from, to] : assignment) map[source->arrow(from).index] = target->arrow(to);
    return Functor(name, source, target, std::move(map), variance);
}

Functor functor_identity(const CategoryPtr& c) {
    return Functor("Id_" + c->name(), c, c, c->arrows());
}

std::optional<Functor> functor_compose(const Functor& after, const Functor& before) {
    if (!(before.target() == after.source())) return std::nullopt;
    std::vector<Arrow> map(before.map().size());
    for (std::size_t i = 0; i < map.size(); ++i) map[i] = after(before.map()[i]);
    const auto variance = after.variance() == before.variance() ? Variance::covariant : Variance::contravariant;
    return Functor(after.name() + "_o_" + before.name(), before.source_ptr(), after.target_ptr(),
                   std::move(map), variance);
}

Functor functor_dom(const Functor& f) { return functor_identity(f.source_ptr()); }

Functor functor_cod(const Functor& f) { return functor_identity(f.target_ptr()); }

}  // namespace arrowcat

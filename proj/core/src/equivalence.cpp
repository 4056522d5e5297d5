#include "arrowcat/equivalence.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "arrowcat/isomorphism_search.hpp"

namespace arrowcat {

namespace {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<std::size_t> parent_;
};

// First isomorphism from `from` to `to` in arrow order.
std::optional<Arrow> first_iso(const Category& c, Arrow from, Arrow to) {
    for (auto f : c.hom(from, to))
        if (is_isomorphism(c, f)) return f;
    return std::nullopt;
}

}  // namespace

std::optional<Arrow> is_isomorphism(const Category& c, Arrow f) {
    const Arrow x = c.dom(f), y = c.cod(f);
    std::optional<Arrow> inverse;
    for (auto g : c.hom(y, x)) {
        if (c.compose(g, f) == x && c.compose(f, g) == y) {
            if (inverse) throw std::logic_error("inverse of " + c.name_of(f) + " is not unique");
            inverse = g;
        }
    }
    return inverse;
}

std::vector<std::vector<Arrow>> iso_classes(const Category& c) {
    const auto ids = c.identities();
    DisjointSets sets(ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = i + 1; j < ids.size(); ++j)
            if (first_iso(c, ids[i], ids[j])) sets.unite(i, j);
    std::map<std::size_t, std::vector<Arrow>> blocks;
    for (std::size_t i = 0; i < ids.size(); ++i) blocks[sets.find(i)].push_back(ids[i]);
    std::vector<std::vector<Arrow>> out;
    for (auto& [root, block] : blocks) out.push_back(std::move(block));
    return out;
}

bool is_skeletal(const Category& c) {
    return iso_classes(c).size() == c.identities().size();
}

std::optional<Functor> find_category_isomorphism(const CategoryPtr& c, const CategoryPtr& d,
                                                 std::size_t cap) {
    auto map = find_isomorphism_map(*c, *d, cap);
    if (!map) return std::nullopt;
    std::vector<Arrow> inverse(d->size());
    for (std::uint32_t i = 0; i < map->size(); ++i) inverse[(*map)[i].index] = Arrow{i};
    Functor forward("iso_" + c->name() + "_" + d->name(), c, d, *map);
    Functor backward("iso_" + d->name() + "_" + c->name(), d, c, std::move(inverse));
    if (!validate_functor(forward).ok() || !validate_functor(backward).ok())
        throw std::logic_error("isomorphism search produced an invalid functor");
    auto there_and_back = functor_compose(backward, forward);
    auto back_and_there = functor_compose(forward, backward);
    if (!there_and_back || !same_functor(*there_and_back, functor_identity(c)) || !back_and_there ||
        !same_functor(*back_and_there, functor_identity(d)))
        throw std::logic_error("isomorphism search produced a non-invertible functor");
    return forward;
}

std::vector<Arrow> seeded_identity_order(const Category& c, std::uint64_t seed) {
    std::vector<Arrow> order(c.identities().begin(), c.identities().end());
    std::mt19937_64 rng(seed);
    // Fisher-Yates with a plain modulus so the order is the same everywhere.
    for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng() % i]);
    return order;
}

SkeletonResult skeleton(const CategoryPtr& c, std::uint64_t seed) {
    const auto order = seeded_identity_order(*c, seed);
    std::map<Arrow, std::size_t> rank;
    for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;

    std::map<Arrow, Arrow> rep;
    std::vector<Arrow> chosen;
    for (const auto& block : iso_classes(*c)) {
        Arrow best = *std::min_element(block.begin(), block.end(),
                                       [&](Arrow a, Arrow b) { return rank[a] < rank[b]; });
        chosen.push_back(best);
        for (auto id : block) rep[id] = best;
    }
    std::sort(chosen.begin(), chosen.end());
    auto skel = share(c->full_subcategory(chosen, c->name() + "_skeleton"));

    // theta[x]: a chosen isomorphism x -> rep(x), the identity on representatives.
    std::map<Arrow, Arrow> theta, theta_inv;
    for (auto id : c->identities()) {
        const Arrow to = rep[id];
        const Arrow iso = id == to ? id : *first_iso(*c, id, to);
        theta[id] = iso;
        theta_inv[id] = *is_isomorphism(*c, iso);
    }

    std::vector<Arrow> incl(skel->size());
    for (auto a : skel->arrows()) incl[a.index] = c->arrow(skel->name_of(a));
    std::vector<Arrow> retr(c->size());
    for (auto f : c->arrows()) {
        // theta_y . f . theta_x^-1
        const Arrow g = *c->compose(f, theta_inv[c->dom(f)]);
        const Arrow h = *c->compose(theta[c->cod(f)], g);
        retr[f.index] = skel->arrow(c->name_of(h));
    }
    Functor inclusion("incl_" + skel->name(), skel, c, std::move(incl));
    Functor retraction("retr_" + skel->name(), c, skel, std::move(retr));
    NatTransf witness("unit_" + skel->name(), functor_identity(c), *functor_compose(inclusion, retraction),
                      theta);
    return SkeletonResult{skel, std::move(inclusion), std::move(retraction), std::move(witness), std::move(rep)};
}

ValidationReport validate_equivalence(const EquivalenceWitness& w) {
    ValidationReport report;
    const Functor& F = w.forward;
    const Functor& G = w.backward;
    if (!F.covariant() || !G.covariant())
        throw wiring_error("equivalence functors must be covariant");
    report.merge(validate_functor(F));
    report.merge(validate_functor(G));
    auto gf = functor_compose(G, F);
    auto fg = functor_compose(F, G);
    if (!gf || !fg) throw wiring_error("equivalence functors do not compose both ways");
    if (!same_functor(w.unit.from(), functor_identity(F.source_ptr())) || !same_functor(w.unit.to(), *gf))
        throw wiring_error("unit must run from Id_C to G . F");
    if (!same_functor(w.counit.from(), functor_identity(F.target_ptr())) || !same_functor(w.counit.to(), *fg))
        throw wiring_error("counit must run from Id_D to F . G");
    report.merge(validate_nat(w.unit));
    report.merge(validate_nat(w.counit));
    for (const auto* t : {&w.unit, &w.counit}) {
        const Category& tgt = t->from().target();
        for (auto [id, comp] : t->components())
            if (!is_isomorphism(tgt, comp))
                report.add(ViolationKind::typing, {t->name(), tgt.name_of(id), tgt.name_of(comp)},
                           "component of " + t->name() + " at " + tgt.name_of(id) + " is not invertible");
    }
    return report;
}

std::optional<EquivalenceWitness> are_equivalent(const CategoryPtr& c, const CategoryPtr& d, std::size_t cap) {
    if (c->size() > cap || d->size() > cap)
        throw capacity_error("equivalence check is capped at " + std::to_string(cap) + " morphisms");
    SkeletonResult sc = skeleton(c, 0);
    SkeletonResult sd = skeleton(d, 0);
    auto k = find_category_isomorphism(sc.skeleton, sd.skeleton, cap);
    if (!k) return std::nullopt;
    std::vector<Arrow> inv(sd.skeleton->size());
    for (std::uint32_t i = 0; i < k->map().size(); ++i) inv[k->map()[i].index] = Arrow{i};
    Functor kinv(k->name() + "_inv", sd.skeleton, sc.skeleton, std::move(inv));

    Functor forward = functor_compose(sd.inclusion, *functor_compose(*k, sc.retraction))
                          ->renamed("F_" + c->name() + "_" + d->name());
    Functor backward = functor_compose(sc.inclusion, *functor_compose(kinv, sd.retraction))
                           ->renamed("G_" + d->name() + "_" + c->name());
    NatTransf unit("tau_" + c->name(), functor_identity(c),
                   functor_compose(backward, forward)->renamed(backward.name() + "_o_" + forward.name()),
                   sc.witness.components());
    NatTransf counit("sigma_" + d->name(), functor_identity(d),
                     functor_compose(forward, backward)->renamed(forward.name() + "_o_" + backward.name()),
                     sd.witness.components());
    EquivalenceWitness w{std::move(forward), std::move(backward), std::move(unit), std::move(counit)};
    auto report = validate_equivalence(w);
    if (!report.ok())
        throw std::logic_error("assembled equivalence witness failed validation:\n" + report.to_text());
    return w;
}

}  // namespace arrowcat

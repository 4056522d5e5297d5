// Exhaustive equivalence search straight from the definition: enumerate
// functor pairs, then search for invertible natural components. Shares no
// code with the skeleton route beyond the kernel queries.

#include <functional>
#include <string>

#include "arrowcat/equivalence.hpp"

namespace arrowcat {

namespace {

constexpr std::uint32_t unset = UINT32_MAX;

// Calls `visit` on every functor c -> d whose identity assignment passes
// `allow(x, image, partial map)`; stops as soon as `visit` returns true.
class FunctorEnumerator {
public:
    using Allow = std::function<bool(Arrow, Arrow, const std::vector<std::uint32_t>&)>;
    using Visit = std::function<bool(const std::vector<Arrow>&)>;

    FunctorEnumerator(const Category& c, const Category& d, Allow allow = {})
        : c_(c), d_(d), allow_(std::move(allow)), map_(c.size(), unset) {
        order_.assign(c.identities().begin(), c.identities().end());
        for (auto a : c.arrows())
            if (!c.is_identity(a)) order_.push_back(a);
        // Triples become checkable once their last arrow is assigned.
        std::vector<std::size_t> pos(c.size());
        for (std::size_t i = 0; i < order_.size(); ++i) pos[order_[i].index] = i;
        due_.resize(order_.size());
        for (const auto& t : c.compositions())
            due_[std::max({pos[t.after.index], pos[t.before.index], pos[t.result.index]})].push_back(t);
    }

    /// True when `visit` stopped the enumeration.
    bool run(const Visit& visit) {
        visit_ = &visit;
        return step(0);
    }

private:
    bool step(std::size_t i) {
        if (i == order_.size()) {
            std::vector<Arrow> m(map_.size());
            for (std::size_t k = 0; k < m.size(); ++k) m[k] = Arrow{map_[k]};
            return (*visit_)(m);
        }
        const Arrow a = order_[i];
        if (c_.is_identity(a)) {
            for (auto x : d_.identities())
                if ((!allow_ || allow_(a, x, map_)) && try_assign(i, a, x)) return true;
        } else {
            const Arrow from{map_[c_.dom(a).index]}, to{map_[c_.cod(a).index]};
            for (auto x : d_.hom(from, to))
                if (try_assign(i, a, x)) return true;
        }
        return false;
    }

    bool try_assign(std::size_t i, Arrow a, Arrow x) {
        map_[a.index] = x.index;
        bool ok = true;
        for (const auto& t : due_[i]) {
            auto image = d_.compose(Arrow{map_[t.after.index]}, Arrow{map_[t.before.index]});
            if (!image || image->index != map_[t.result.index]) {
                ok = false;
                break;
            }
        }
        const bool stop = ok && step(i + 1);
        map_[a.index] = unset;
        return stop;
    }

    const Category& c_;
    const Category& d_;
    Allow allow_;
    const Visit* visit_ = nullptr;
    std::vector<std::uint32_t> map_;
    std::vector<Arrow> order_;
    std::vector<std::vector<Category::Triple>> due_;
};

// iso[x][y] for identity slots: some f: x -> y has a two-sided inverse.
std::vector<std::vector<bool>> object_isos(const Category& c) {
    const auto ids = c.identities();
    std::vector<std::vector<bool>> iso(ids.size(), std::vector<bool>(ids.size(), false));
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = 0; j < ids.size(); ++j)
            for (auto f : c.hom(ids[i], ids[j]))
                for (auto g : c.hom(ids[j], ids[i]))
                    if (c.compose(g, f) == ids[i] && c.compose(f, g) == ids[j]) iso[i][j] = true;
    return iso;
}

// Invertible components tau_x : x -> H(x) natural for the endofunctor map H
// of `c`, i.e. tau_y . f = H(f) . tau_x for every f: x -> y.
std::optional<std::map<Arrow, Arrow>> natural_iso_to(const Category& c, const std::vector<Arrow>& h) {
    const auto ids = c.identities();
    std::vector<std::vector<Arrow>> candidates(ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i) {
        for (auto f : c.hom(ids[i], h[ids[i].index])) {
            // Invertibility checked directly: some g with g.f and f.g identities.
            for (auto g : c.hom(c.cod(f), c.dom(f)))
                if (c.compose(g, f) == ids[i] && c.compose(f, g) == c.cod(f)) {
                    candidates[i].push_back(f);
                    break;
                }
        }
        if (candidates[i].empty()) return std::nullopt;
    }
    std::vector<std::uint32_t> comp(c.size(), unset);
    std::vector<Arrow> arrows = c.arrows();

    auto consistent = [&](std::size_t upto) {
        for (auto f : arrows) {
            const auto x = c.dom(f), y = c.cod(f);
            const auto sx = static_cast<std::size_t>(c.identity_slot(x));
            const auto sy = static_cast<std::size_t>(c.identity_slot(y));
            if (sx > upto || sy > upto || (sx != upto && sy != upto)) continue;
            auto left = c.compose(Arrow{comp[y.index]}, f);
            auto right = c.compose(h[f.index], Arrow{comp[x.index]});
            if (!left || !right || *left != *right) return false;
        }
        return true;
    };

    std::function<bool(std::size_t)> search = [&](std::size_t i) {
        if (i == ids.size()) return true;
        for (auto cand : candidates[i]) {
            comp[ids[i].index] = cand.index;
            if (consistent(i) && search(i + 1)) return true;
        }
        comp[ids[i].index] = unset;
        return false;
    };
    if (!search(0)) return std::nullopt;
    std::map<Arrow, Arrow> out;
    for (auto id : ids) out.emplace(id, Arrow{comp[id.index]});
    return out;
}

}  // namespace

std::vector<Functor> enumerate_functors(const CategoryPtr& c, const CategoryPtr& d) {
    std::vector<Functor> out;
    FunctorEnumerator(*c, *d).run([&](const std::vector<Arrow>& m) {
        out.emplace_back("F" + std::to_string(out.size()), c, d, m);
        return false;
    });
    return out;
}

std::optional<EquivalenceWitness> brute_force_equivalence(const CategoryPtr& c, const CategoryPtr& d) {
    if (c->size() > brute_force_cap || d->size() > brute_force_cap)
        throw capacity_error("brute-force equivalence is capped at " + std::to_string(brute_force_cap) +
                             " morphisms");
    // Pruning uses only consequences of the definition: tau_x : x -> G F x
    // and sigma_y : y -> F G y are invertible, and functors keep
    // isomorphisms, so F x ~ F x' forces x ~ x'.
    const auto iso_c = object_isos(*c);
    const auto iso_d = object_isos(*d);
    auto slot_c = [&](Arrow a) { return static_cast<std::size_t>(c->identity_slot(a)); };
    auto slot_d = [&](Arrow a) { return static_cast<std::size_t>(d->identity_slot(a)); };

    auto allow_f = [&](Arrow x, Arrow y, const std::vector<std::uint32_t>& partial) {
        for (auto x2 : c->identities()) {
            if (partial[x2.index] == unset || x2 == x) continue;
            if (iso_d[slot_d(Arrow{partial[x2.index]})][slot_d(y)] && !iso_c[slot_c(x2)][slot_c(x)]) return false;
        }
        return true;
    };

    std::optional<EquivalenceWitness> found;
    FunctorEnumerator(*c, *d, allow_f).run([&](const std::vector<Arrow>& fmap) {
        // every y must be isomorphic to some F x
        for (auto y : d->identities()) {
            bool hit = false;
            for (auto x : c->identities()) hit = hit || iso_d[slot_d(fmap[x.index])][slot_d(y)];
            if (!hit) return false;
        }
        auto allow_g = [&](Arrow y, Arrow x, const std::vector<std::uint32_t>&) {
            if (!iso_d[slot_d(fmap[x.index])][slot_d(y)]) return false;
            for (auto x2 : c->identities())
                if (fmap[x2.index] == y && !iso_c[slot_c(x2)][slot_c(x)]) return false;
            return true;
        };
        return FunctorEnumerator(*d, *c, allow_g).run([&](const std::vector<Arrow>& gmap) {
            std::vector<Arrow> gf(c->size()), fg(d->size());
            for (auto a : c->arrows()) gf[a.index] = gmap[fmap[a.index].index];
            for (auto a : d->arrows()) fg[a.index] = fmap[gmap[a.index].index];
            auto tau = natural_iso_to(*c, gf);
            if (!tau) return false;
            auto sigma = natural_iso_to(*d, fg);
            if (!sigma) return false;
            Functor fwd("F_" + c->name() + "_" + d->name(), c, d, fmap);
            Functor bwd("G_" + d->name() + "_" + c->name(), d, c, gmap);
            NatTransf unit("tau_" + c->name(), functor_identity(c),
                           Functor(bwd.name() + "_o_" + fwd.name(), c, c, std::move(gf)), std::move(*tau));
            NatTransf counit("sigma_" + d->name(), functor_identity(d),
                             Functor(fwd.name() + "_o_" + bwd.name(), d, d, std::move(fg)), std::move(*sigma));
            found.emplace(EquivalenceWitness{std::move(fwd), std::move(bwd), std::move(unit), std::move(counit)});
            return true;
        });
    });
    return found;
}

}  // namespace arrowcat

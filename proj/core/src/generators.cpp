#include "arrowcat/generators.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace arrowcat {

namespace {

void require_unique(const ObjlessData& d) {
    std::set<std::string> seen;
    for (const auto& m : d.morphisms)
        if (!seen.insert(m).second) throw error("generated name '" + m + "' is not unique in " + d.name);
}

}  // namespace

std::optional<std::string> poset_arrow(const FinitePoset& p, std::size_t x, std::size_t y) {
    if (!p.leq(x, y)) return std::nullopt;
    if (x == y) return p.element(x);
    return p.element(x) + "_" + p.element(y);
}

ObjlessData gen_poset(const std::string& name, const FinitePoset& p) {
    ObjlessData d;
    d.name = name;
    const auto n = p.size();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (auto a = poset_arrow(p, x, y)) d.morphisms.push_back(*a);
    require_unique(d);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            if (!p.leq(x, y)) continue;
            for (std::size_t z = 0; z < n; ++z)
                if (p.leq(y, z)) d.table.push_back({*poset_arrow(p, y, z), *poset_arrow(p, x, y), *poset_arrow(p, x, z)});
        }
    std::sort(d.morphisms.begin(), d.morphisms.end());
    std::sort(d.table.begin(), d.table.end());
    return d;
}

ObjlessData gen_monoid(const std::string& name, const std::vector<std::string>& elements,
                       const std::vector<std::vector<std::size_t>>& table) {
    const auto n = elements.size();
    if (n == 0) throw error("a monoid needs at least one element");
    if (table.size() != n) throw error("monoid table has the wrong size");
    for (const auto& row : table) {
        if (row.size() != n) throw error("monoid table has the wrong size");
        for (auto v : row)
            if (v >= n) throw error("monoid table entry out of range");
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw error("monoid table is not associative at (" + elements[a] + ", " + elements[b] + ", " +
                                elements[c] + ")");
    bool has_unit = false;
    for (std::size_t e = 0; e < n && !has_unit; ++e) {
        has_unit = true;
        for (std::size_t a = 0; a < n; ++a)
            if (table[e][a] != a || table[a][e] != a) {
                has_unit = false;
                break;
            }
    }
    if (!has_unit) throw error("monoid table has no unit");
    ObjlessData d;
    d.name = name;
    d.morphisms = elements;
    require_unique(d);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) d.table.push_back({elements[a], elements[b], elements[table[a][b]]});
    std::sort(d.morphisms.begin(), d.morphisms.end());
    std::sort(d.table.begin(), d.table.end());
    return d;
}

StdCategory gen_finset(std::size_t max_size, const std::vector<std::size_t>& duplicates, std::string name) {
    if (max_size > 9) throw error("gen_finset supports carrier sizes up to 9");
    for (auto s : duplicates)
        if (s > max_size) throw error("duplicate size " + std::to_string(s) + " exceeds the maximum size");
    std::vector<std::pair<std::string, std::size_t>> objects;
    for (std::size_t n = 0; n <= max_size; ++n) {
        objects.emplace_back("set" + std::to_string(n), n);
        const auto copies = static_cast<std::size_t>(std::count(duplicates.begin(), duplicates.end(), n));
        if (copies > 25) throw error("too many copies of one size");
        for (std::size_t k = 0; k < copies; ++k)
            objects.emplace_back("set" + std::to_string(n) + static_cast<char>('b' + k), n);
    }
    StdCategory c;
    c.name = name.empty() ? (duplicates.empty() ? "FinSet" + std::to_string(max_size) : "FinSetDup") : std::move(name);
    for (const auto& [obj, n] : objects) {
        c.objects.push_back(obj);
        c.id_of.emplace(obj, "id_" + obj);
    }

    struct Fn {
        std::size_t dom, cod;
        std::vector<std::size_t> images;
    };
    std::vector<Fn> fns;
    std::map<std::tuple<std::size_t, std::size_t, std::vector<std::size_t>>, std::string> by_value;
    for (std::size_t s = 0; s < objects.size(); ++s)
        for (std::size_t t = 0; t < objects.size(); ++t) {
            const auto m = objects[s].second, n = objects[t].second;
            if (m > 0 && n == 0) continue;
            std::vector<std::size_t> images(m, 0);
            while (true) {
                std::string fname;
                if (s == t && std::all_of(images.begin(), images.end(),
                                          [&, i = std::size_t{0}](std::size_t v) mutable { return v == i++; })) {
                    fname = "id_" + objects[s].first;
                } else {
                    fname = "f_" + objects[s].first + "_" + objects[t].first;
                    if (m > 0) fname += "_";
                    for (auto v : images) fname += static_cast<char>('0' + v);
                }
                c.arrows.push_back({fname, objects[s].first, objects[t].first});
                by_value.emplace(std::tuple{s, t, images}, fname);
                fns.push_back({s, t, images});
                // next function in lexicographic order
                std::size_t i = m;
                while (i > 0 && images[i - 1] + 1 == n) images[--i] = 0;
                if (i == 0) break;
                ++images[i - 1];
            }
        }
    for (const auto& f : fns)
        for (const auto& g : fns) {
            if (g.dom != f.cod) continue;
            std::vector<std::size_t> gf(f.images.size());
            for (std::size_t i = 0; i < gf.size(); ++i) gf[i] = g.images[f.images[i]];
            c.table.push_back({by_value.at({g.dom, g.cod, g.images}), by_value.at({f.dom, f.cod, f.images}),
                               by_value.at({f.dom, g.cod, gf})});
        }
    canonicalize(c);
    return c;
}

ObjlessData gen_discrete(std::size_t n, std::string name) {
    ObjlessData d;
    d.name = name.empty() ? "Discrete" + std::to_string(n) : std::move(name);
    for (std::size_t i = 0; i < n; ++i) {
        d.morphisms.push_back("o" + std::to_string(i));
        d.table.push_back({d.morphisms.back(), d.morphisms.back(), d.morphisms.back()});
    }
    std::sort(d.morphisms.begin(), d.morphisms.end());
    std::sort(d.table.begin(), d.table.end());
    return d;
}

ObjlessData gen_walking_iso(std::string name) {
    ObjlessData d;
    d.name = std::move(name);
    d.morphisms = {"A", "B", "f", "g"};
    d.table = {{"A", "A", "A"}, {"B", "B", "B"}, {"f", "A", "f"}, {"B", "f", "f"},
               {"g", "B", "g"}, {"A", "g", "g"}, {"g", "f", "A"}, {"f", "g", "B"}};
    std::sort(d.table.begin(), d.table.end());
    return d;
}

ObjlessData coproduct(const std::string& name, const std::vector<ObjlessData>& parts) {
    ObjlessData d;
    d.name = name;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        const std::string prefix = "c" + std::to_string(k) + "_";
        for (const auto& m : parts[k].morphisms) d.morphisms.push_back(prefix + m);
        for (const auto& e : parts[k].table) d.table.push_back({prefix + e.after, prefix + e.before, prefix + e.result});
    }
    require_unique(d);
    std::sort(d.morphisms.begin(), d.morphisms.end());
    std::sort(d.table.begin(), d.table.end());
    return d;
}

namespace {

using Rng = std::mt19937_64;

std::size_t below(Rng& rng, std::size_t n) { return n <= 1 ? 0 : static_cast<std::size_t>(rng() % n); }

// A random preorder with at most `budget` arrows. Equal rows in the
// closure give isomorphic objects, which the skeleton tests need.
ObjlessData random_preorder(Rng& rng, std::size_t budget, const std::string& name) {
    while (true) {
        const std::size_t k = 1 + below(rng, std::min<std::size_t>(budget, 6));
        const std::size_t density = below(rng, 4);  // out of 8
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = 0; b < k; ++b)
                if (a != b && below(rng, 8) < density) pairs.emplace_back(a, b);
        std::vector<std::string> elements;
        for (std::size_t a = 0; a < k; ++a) elements.push_back("e" + std::to_string(a));
        auto p = FinitePoset::from_pairs(elements, pairs);
        std::size_t arrows = 0;
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = 0; b < k; ++b) arrows += p.leq(a, b);
        if (arrows <= budget) return gen_poset(name, p);
    }
}

// The monoid generated by up to two random self-maps of a small set.
ObjlessData random_monoid(Rng& rng, std::size_t budget, const std::string& name) {
    while (true) {
        const std::size_t n = 1 + below(rng, 3);
        const std::size_t gens = below(rng, 3);
        using Map = std::vector<std::size_t>;
        Map unit(n);
        for (std::size_t i = 0; i < n; ++i) unit[i] = i;
        std::vector<Map> elements{unit};
        std::vector<Map> generators;
        for (std::size_t g = 0; g < gens; ++g) {
            Map m(n);
            for (auto& v : m) v = below(rng, n);
            generators.push_back(m);
        }
        bool too_big = false;
        for (std::size_t i = 0; i < elements.size() && !too_big; ++i)
            for (const auto& g : generators) {
                Map h(n);
                for (std::size_t x = 0; x < n; ++x) h[x] = g[elements[i][x]];
                if (std::find(elements.begin(), elements.end(), h) == elements.end()) {
                    elements.push_back(h);
                    if (elements.size() > budget) {
                        too_big = true;
                        break;
                    }
                }
            }
        if (too_big) continue;
        const auto size = elements.size();
        std::vector<std::string> names;
        for (std::size_t i = 0; i < size; ++i) names.push_back("m" + std::to_string(i));
        std::vector<std::vector<std::size_t>> table(size, std::vector<std::size_t>(size));
        for (std::size_t a = 0; a < size; ++a)
            for (std::size_t b = 0; b < size; ++b) {
                Map ab(n);  // a after b
                for (std::size_t x = 0; x < n; ++x) ab[x] = elements[a][elements[b][x]];
                table[a][b] = static_cast<std::size_t>(std::find(elements.begin(), elements.end(), ab) - elements.begin());
            }
        return gen_monoid(name, names, table);
    }
}

ObjlessData random_piece(Rng& rng, std::size_t budget, const std::string& name) {
    return below(rng, 2) == 0 ? random_preorder(rng, budget, name) : random_monoid(rng, budget, name);
}

}  // namespace

ObjlessData gen_random(std::uint64_t seed, std::size_t max_morphisms, std::string name) {
    if (max_morphisms == 0) throw error("gen_random needs max_morphisms >= 1");
    if (name.empty()) name = "Random" + std::to_string(seed);
    Rng rng(seed);
    const auto mode = below(rng, 3);
    if (mode < 2 || max_morphisms < 2) return random_piece(rng, max_morphisms, name);
    const std::size_t count = 2 + below(rng, std::min<std::size_t>(2, max_morphisms - 1));
    std::vector<ObjlessData> parts;
    std::size_t left = max_morphisms;
    for (std::size_t k = 0; k < count; ++k) {
        const std::size_t reserve = count - k - 1;
        const std::size_t budget = 1 + below(rng, left - reserve);
        parts.push_back(random_piece(rng, budget, name));
        left -= parts.back().morphisms.size();
    }
    return coproduct(name, parts);
}

Functor monotone_functor(const std::string& name, const CategoryPtr& pc, const FinitePoset& p, const CategoryPtr& qc,
                         const FinitePoset& q, const MonotoneMap& f) {
    require_monotone(p, q, f);
    std::vector<Arrow> map(pc->size());
    for (std::size_t x = 0; x < p.size(); ++x)
        for (std::size_t y = 0; y < p.size(); ++y)
            if (auto a = poset_arrow(p, x, y)) map[pc->arrow(*a).index] = qc->arrow(*poset_arrow(q, f[x], f[y]));
    return Functor(name, pc, qc, std::move(map));
}

PosetAdjunction poset_adjunction(const FinitePoset& p, const std::string& p_name, const FinitePoset& q,
                                 const std::string& q_name, const MonotoneMap& f, const MonotoneMap& g) {
    auto pc = share(Category(gen_poset(p_name, p)));
    auto qc = share(Category(gen_poset(q_name, q)));
    auto left = monotone_functor("f", pc, p, qc, q, f);
    auto right = monotone_functor("g", qc, q, pc, p, g);
    auto gf = *functor_compose(right, left);
    auto fg = *functor_compose(left, right);
    std::map<Arrow, Arrow> unit, counit;
    for (std::size_t x = 0; x < p.size(); ++x)
        if (auto a = poset_arrow(p, x, g[f[x]])) unit.emplace(pc->arrow(p.element(x)), pc->arrow(*a));
    for (std::size_t y = 0; y < q.size(); ++y)
        if (auto a = poset_arrow(q, f[g[y]], y)) counit.emplace(qc->arrow(q.element(y)), qc->arrow(*a));
    NatTransf eta("eta", functor_identity(pc), gf, std::move(unit));
    NatTransf eps("eps", fg, functor_identity(qc), std::move(counit));
    return {pc, qc, left, right, eta, eps};
}

}  // namespace arrowcat

#include <doctest.h>

#include <random>

#include "arrowcat/equivalence.hpp"
#include "arrowcat/limits.hpp"
#include "support/support.hpp"

using namespace arrowcat;
using support::fixture;

namespace {

FinitePoset random_poset(std::mt19937_64& rng, std::size_t max_size) {
    const std::size_t n = 1 + rng() % max_size;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
    std::vector<std::pair<std::size_t, std::size_t>> below;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (rng() % 3 == 0) below.emplace_back(i, j);
    return FinitePoset::from_pairs(names, below);
}

// Greatest lower bound of a and b on the order relation alone.
bool oracle_has_meet(const FinitePoset& p, std::size_t a, std::size_t b) {
    for (std::size_t m = 0; m < p.size(); ++m) {
        if (!p.leq(m, a) || !p.leq(m, b)) continue;
        bool greatest = true;
        for (std::size_t z = 0; z < p.size(); ++z)
            if (p.leq(z, a) && p.leq(z, b) && !p.leq(z, m)) greatest = false;
        if (greatest) return true;
    }
    return false;
}

bool oracle_has_top(const FinitePoset& p) {
    for (std::size_t t = 0; t < p.size(); ++t) {
        bool top = true;
        for (std::size_t z = 0; z < p.size(); ++z) top = top && p.leq(z, t);
        if (top) return true;
    }
    return false;
}

bool isomorphic_objects(const Category& c, Arrow x, Arrow y) {
    for (const auto& block : iso_classes(c))
        if (std::find(block.begin(), block.end(), x) != block.end())
            return std::find(block.begin(), block.end(), y) != block.end();
    return false;
}

}  // namespace

TEST_CASE("terminal objects") {
    auto c = fixture("twochain.cat", "TwoChain");
    CHECK(names_of(*c, terminal_objects(*c)) == std::vector<std::string>{"i1"});
    CHECK(c->name_of(*terminal_counterexample(*c, c->arrow("i0"))) == "i1");
    CHECK_FALSE(terminal_counterexample(*c, c->arrow("i1")));

    auto fin = fixture("finset2.cat", "FinSet2");
    CHECK(names_of(*fin, terminal_objects(*fin)) == std::vector<std::string>{"id_set1"});
    CHECK(terminal_objects(Category(gen_discrete(2))).empty());
    CHECK(terminal_objects(Category(gen_discrete(1))).size() == 1);

    auto w = fixture("walking_iso_and_one.cat", "WalkingIso");
    CHECK(terminal_objects(*w).size() == 2);
    CHECK(terminal_objects(*fixture("monoids.cat", "Z2")).empty());
}

TEST_CASE("generalized elements") {
    auto fin = fixture("finset2.cat", "FinSet2");
    auto one = fin->arrow("id_set1");
    auto two = fin->arrow("id_set2");
    CHECK(generalized_elements(*fin, two, one).size() == 2);
    CHECK(generalized_elements(*fin, two, two).size() == 4);
    CHECK(generalized_elements(*fin, fin->arrow("id_set0"), one).empty());
    CHECK(generalized_elements(*fin, one, fin->arrow("id_set0")).size() == 1);
}

TEST_CASE("products") {
    auto sq = fixture("lattice.cat", "Square");
    auto meet = binary_product(*sq, sq->arrow("a"), sq->arrow("b"));
    REQUIRE(meet);
    CHECK(sq->name_of(meet->apex) == "bot");
    CHECK(names_of(*sq, meet->legs) == std::vector<std::string>{"bot_a", "bot_b"});
    CHECK(is_product(*sq, sq->arrow("a"), sq->arrow("b"), *meet));
    CHECK_FALSE(is_product(*sq, sq->arrow("top"), sq->arrow("top"),
                           LimitCone{LimitKind::product, sq->arrow("a"), {sq->arrow("a_top"), sq->arrow("a_top")}}));

    auto fin = fixture("finset2.cat", "FinSet2");
    auto one = fin->arrow("id_set1");
    auto two = fin->arrow("id_set2");
    CHECK_FALSE(binary_product(*fin, two, two));
    auto p = binary_product(*fin, one, two);
    REQUIRE(p);
    CHECK(isomorphic_objects(*fin, p->apex, two));
    CHECK(binary_product(*fin, fin->arrow("id_set0"), two).has_value());

    CHECK_FALSE(binary_product(Category(gen_discrete(2)), Arrow{0}, Arrow{1}));
}

TEST_CASE("equalizers") {
    auto fin = fixture("finset2.cat", "FinSet2");
    auto id2 = fin->arrow("id_set2");
    auto const0 = fin->arrow("f_set2_set2_00");
    auto e = equalizer(*fin, id2, const0);
    REQUIRE(e);
    CHECK(fin->name_of(e->apex) == "id_set1");
    CHECK(fin->name_of(e->legs.at(0)) == "f_set1_set2_0");
    CHECK(is_equalizer(*fin, id2, const0, *e));
    CHECK_FALSE(is_equalizer(*fin, id2, const0, LimitCone{LimitKind::equalizer, fin->arrow("id_set2"), {id2}}));

    auto swap = fin->arrow("f_set2_set2_10");
    auto none = equalizer(*fin, id2, swap);
    REQUIRE(none);
    CHECK(fin->name_of(none->apex) == "id_set0");

    auto same = equalizer(*fin, swap, swap);
    REQUIRE(same);
    CHECK(isomorphic_objects(*fin, same->apex, fin->arrow("id_set2")));
    CHECK_THROWS_AS(equalizer(*fin, id2, fin->arrow("f_set1_set2_0")), error);
}

TEST_CASE("available scope") {
    auto fin = fixture("finset2.cat", "FinSet2");
    auto s = available_scope(*fin);
    CHECK(s.terminal);
    CHECK_FALSE(s.products);
    CHECK(s.equalizers);
    auto sq = available_scope(*fixture("lattice.cat", "Square"));
    CHECK((sq.terminal && sq.products && sq.equalizers));
    auto d = available_scope(Category(gen_discrete(2)));
    CHECK_FALSE(d.terminal);
    CHECK_FALSE(d.products);
}

TEST_CASE("limit preservation") {
    auto ws = support::load("limits.cat");
    auto c = ws.category("TwoChain");
    auto id = ws.functor("Id2");
    auto r = preserves_finite_limits(id);
    CHECK(r.ok());
    CHECK(r.cones_checked > 0);

    auto k = preserves_finite_limits(ws.functor("Const0"));
    REQUIRE_FALSE(k.ok());
    CHECK(k.failures.front().kind == LimitKind::terminal);
    CHECK(k.failures.front().counterexample == "i1");

    auto fin = fixture("finset2.cat", "FinSet2");
    CHECK_THROWS_AS(preserves_finite_limits(functor_identity(fin)), inapplicable_scope);
    try {
        preserves_finite_limits(functor_identity(fin));
    } catch (const inapplicable_scope& e) {
        CHECK(e.kind() == LimitKind::product);
        CHECK(e.diagram() == std::vector<std::string>{"id_set2", "id_set2"});
    }
    CHECK(preserves_finite_limits(functor_identity(fin), available_scope(*fin)).ok());

    auto d = share(Category(gen_discrete(2)));
    CHECK_THROWS_AS(preserves_finite_limits(functor_identity(d)), inapplicable_scope);
    CHECK(preserves_finite_limits(functor_identity(d), LimitScope{false, false, true}).ok());

    auto op = share(c->opposite());
    auto contra = make_functor("T", c, op, {{"i0", "i0"}, {"i1", "i1"}, {"a", "a"}}, Variance::contravariant);
    CHECK_THROWS_AS(preserves_finite_limits(contra), wiring_error);
}

TEST_CASE("limits on random posets agree with the order oracle") {
    std::mt19937_64 rng(77);
    for (int round = 0; round < 150; ++round) {
        auto p = random_poset(rng, 6);
        auto c = share(Category(gen_poset("P" + std::to_string(round), p)));
        CAPTURE(c->name());
        CHECK(terminal_objects(*c).empty() == !oracle_has_top(p));
        for (std::size_t a = 0; a < p.size(); ++a)
            for (std::size_t b = 0; b < p.size(); ++b) {
                auto x = c->arrow(p.element(a)), y = c->arrow(p.element(b));
                auto xy = binary_product(*c, x, y);
                CHECK(xy.has_value() == oracle_has_meet(p, a, b));
                auto yx = binary_product(*c, y, x);
                CHECK(xy.has_value() == yx.has_value());
                if (xy && yx) CHECK(isomorphic_objects(*c, xy->apex, yx->apex));
            }
        // parallel arrows in a preorder coincide, so every equalizer exists
        CHECK(available_scope(*c).equalizers);
        CHECK(available_scope(*c).terminal == oracle_has_top(p));
    }
}

TEST_CASE("terminal objects are unique up to isomorphism") {
    auto cats = support::random_categories(120, 16, 300);
    for (auto& c : support::fixture_categories()) cats.push_back(c);
    for (const auto& c : cats) {
        CAPTURE(c->name());
        const auto ts = terminal_objects(*c);
        for (auto t : ts) {
            for (auto u : ts) CHECK(isomorphic_objects(*c, t, u));
            // anything isomorphic to a terminal object is terminal
            for (auto x : c->identities())
                if (isomorphic_objects(*c, t, x)) CHECK(std::find(ts.begin(), ts.end(), x) != ts.end());
            for (auto x : c->identities())
                CHECK(support::oracle_hom_size(c->data(), c->name_of(x), c->name_of(t)) == 1);
        }
        // products found are products, and the identity functor keeps every available limit
        for (auto x : c->identities())
            for (auto y : c->identities())
                if (auto p = binary_product(*c, x, y)) CHECK(is_product(*c, x, y, *p));
        CHECK(preserves_finite_limits(functor_identity(c), available_scope(*c)).ok());
    }
}

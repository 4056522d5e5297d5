#include <doctest.h>

#include "support/support.hpp"

using namespace arrowcat;
using support::fixture;

namespace {

ObjlessData two_chain() {
    return {"TwoChain", {"i0", "i1", "a"}, {{"i0", "i0", "i0"}, {"i1", "i1", "i1"}, {"a", "i0", "a"}, {"i1", "a", "a"}}};
}

ObjlessData z2() {
    return {"Z2", {"e", "s"}, {{"e", "e", "e"}, {"e", "s", "s"}, {"s", "e", "s"}, {"s", "s", "e"}}};
}

bool has_kind(const ValidationReport& r, ViolationKind k) { return r.has(k); }

}  // namespace

TEST_CASE("one-morphism category validates") {
    ObjlessData d{"One", {"e"}, {{"e", "e", "e"}}};
    CHECK(validate_objectless(d).ok());
    CHECK(infer_identities(d) == std::vector<std::string>{"e"});
    Category c(d);
    auto p = c.profile(c.arrow("e"));
    CHECK(p.right_partners.size() == 1);
    CHECK(p.left_partners.size() == 1);
}

TEST_CASE("Z2 validates with identity e") {
    auto d = z2();
    CHECK(validate_objectless(d).ok());
    CHECK(infer_identities(d) == std::vector<std::string>{"e"});
    Category c(d);
    CHECK(dom_id(c, "s") == "e");
    CHECK(cod_id(c, "s") == "e");
    CHECK(compose(c, "s", "s") == std::optional<std::string>("e"));
}

TEST_CASE("idempotent without neutral partner is identity-missing") {
    // e neutral, s idempotent, and the mixed entries removed.
    ObjlessData d{"Bad", {"e", "s"}, {{"e", "e", "e"}, {"s", "s", "e"}}};
    auto r = validate_objectless(d);
    CHECK_FALSE(r.ok());
    CHECK(has_kind(r, ViolationKind::identity_missing));
    bool cites_s = false;
    for (const auto& v : r.violations)
        if (v.kind == ViolationKind::identity_missing)
            cites_s = cites_s || std::find(v.witnesses.begin(), v.witnesses.end(), "s") != v.witnesses.end();
    CHECK(cites_s);
}

TEST_CASE("idempotent that is not neutral is identity-nonneutral") {
    // s is the only self-composable morphism but s . a = s.
    ObjlessData d{"Bad", {"s", "a"}, {{"s", "s", "s"}, {"a", "s", "a"}, {"s", "a", "s"}}};
    auto r = validate_objectless(d);
    CHECK(has_kind(r, ViolationKind::identity_nonneutral));
}

TEST_CASE("two neutral candidates are identity-nonunique") {
    ObjlessData d{"Bad", {"e", "t", "s"},
                  {{"e", "e", "e"}, {"t", "t", "t"}, {"e", "s", "s"}, {"t", "s", "s"}, {"s", "e", "s"}}};
    auto r = validate_objectless(d);
    CHECK(has_kind(r, ViolationKind::identity_nonunique));
}

TEST_CASE("Z2 with s idempotent is still valid as a monoid") {
    ObjlessData d{"Idem", {"e", "s"}, {{"e", "e", "e"}, {"e", "s", "s"}, {"s", "e", "s"}, {"s", "s", "s"}}};
    CHECK(validate_objectless(d).ok());
    CHECK(infer_identities(d) == std::vector<std::string>{"e"});
}

TEST_CASE("functionality and associativity violations are reported, not thrown") {
    SUBCASE("conflicting entries") {
        auto d = z2();
        d.table.push_back({"s", "s", "s"});
        auto r = validate_objectless(d);
        CHECK(has_kind(r, ViolationKind::functionality));
    }
    SUBCASE("associativity equality") {
        // Z3-shaped table with one wrong product.
        ObjlessData d{"Bad",
                      {"e", "r", "q"},
                      {{"e", "e", "e"}, {"e", "r", "r"}, {"e", "q", "q"}, {"r", "e", "r"}, {"q", "e", "q"},
                       {"r", "r", "q"}, {"r", "q", "e"}, {"q", "r", "e"}, {"q", "q", "q"}}};
        auto r = validate_objectless(d);
        CHECK(has_kind(r, ViolationKind::associativity_equal));
    }
    SUBCASE("associativity existence") {
        // b . a and c . b are defined but c . (b . a) is not.
        ObjlessData d{"Bad",
                      {"x", "y", "z", "w", "a", "b", "c", "ba"},
                      {{"x", "x", "x"}, {"y", "y", "y"}, {"z", "z", "z"}, {"w", "w", "w"}, {"a", "x", "a"},
                       {"y", "a", "a"}, {"b", "y", "b"}, {"z", "b", "b"}, {"c", "z", "c"}, {"w", "c", "c"},
                       {"b", "a", "ba"}, {"ba", "x", "ba"}, {"z", "ba", "ba"}}};
        auto r = validate_objectless(d);
        CHECK(has_kind(r, ViolationKind::associativity_existence));
    }
    SUBCASE("undeclared name") { CHECK_THROWS_AS(validate_objectless({"Bad", {"e"}, {{"e", "e", "f"}}}), name_not_found); }
}

TEST_CASE("violation list is capped at 100") {
    ObjlessData d{"Many", {}, {}};
    for (int i = 0; i < 300; ++i) d.morphisms.push_back("m" + std::to_string(i));
    auto r = validate_objectless(d);
    CHECK(r.violations.size() == ValidationReport::max_violations);
    CHECK(r.suppressed == 500);  // two per morphism: no domain and no codomain identity
}

TEST_CASE("TwoChain queries") {
    Category c(two_chain());
    CHECK(infer_identities(two_chain()) == std::vector<std::string>{"i0", "i1"});
    CHECK(dom_id(c, "a") == "i0");
    CHECK(cod_id(c, "a") == "i1");
    CHECK(dom_id(c, "i1") == "i1");
    CHECK(compose(c, "a", "i0") == std::optional<std::string>("a"));
    CHECK_FALSE(compose(c, "i0", "a"));
    CHECK(hom_class(c, "i0", "i1") == std::vector<std::string>{"a"});
    CHECK(hom_class(c, "i1", "i0").empty());
    CHECK_THROWS_AS(hom_class(c, "a", "i1"), not_an_identity);
    CHECK_THROWS_AS(dom_id(c, "zz"), name_not_found);
    CHECK_THROWS_AS(compose(c, "zz", "a"), name_not_found);

    auto p0 = c.profile(c.arrow("i0"));
    CHECK(names_of(c, p0.right_partners) == std::vector<std::string>{"a", "i0"});
    CHECK(names_of(c, p0.left_partners) == std::vector<std::string>{"i0"});
    auto p1 = c.profile(c.arrow("i1"));
    CHECK(names_of(c, p1.right_partners) == std::vector<std::string>{"i1"});
    CHECK(names_of(c, p1.left_partners) == std::vector<std::string>{"a", "i1"});
    CHECK(c.discernible(c.arrow("i0"), c.arrow("i1")));
    CHECK_FALSE(c.discernible(c.arrow("i0"), c.arrow("i0")));
    CHECK_THROWS_AS(c.profile(c.arrow("a")), not_an_identity);
}

TEST_CASE("opposite") {
    Category c(two_chain());
    auto op = c.opposite();
    CHECK(op.name() == "TwoChain_op");
    CHECK(op.name_of(op.dom(op.arrow("a"))) == "i1");
    CHECK(op.name_of(op.cod(op.arrow("a"))) == "i0");
    CHECK(op.opposite() == c);
    CHECK(op.opposite().name() == "TwoChain");
    Category z(z2());
    CHECK(z.opposite() == z);  // commutative monoid
}

TEST_CASE("FinSetDup size-1 identities are discernible") {
    auto c = fixture("finsetdup.cat", "FinSetDup");
    CHECK(c->discernible(c->arrow("id_set1"), c->arrow("id_set1b")));
}

TEST_CASE("constructing an invalid category throws invalid_data") {
    CHECK_THROWS_AS(Category(ObjlessData{"Bad", {"e", "s"}, {{"e", "e", "e"}, {"s", "s", "e"}}}), invalid_data);
}

TEST_CASE("capacity limit") {
    ObjlessData d = gen_discrete(max_category_size + 1);
    CHECK_THROWS_AS(Category{d}, capacity_error);
}

// Properties over random categories and fixtures, checked against the raw
// table.
TEST_CASE("kernel laws on random categories and fixtures") {
    auto cats = support::random_categories(150, 20);
    for (auto& c : support::fixture_categories()) cats.push_back(c);
    for (const auto& cp : cats) {
        const Category& c = *cp;
        CAPTURE(c.name());
        const auto raw = support::table_of(c.data());
        const auto ids = support::oracle_identities(c.data());
        std::set<std::string> got;
        for (auto i : c.identities()) got.insert(c.name_of(i));
        CHECK(got == ids);

        // exactly one identity on each side
        for (auto a : c.arrows()) {
            std::size_t right = 0, left = 0;
            for (const auto& i : ids) {
                right += raw.count({c.name_of(a), i});
                left += raw.count({i, c.name_of(a)});
            }
            CHECK(right == 1);
            CHECK(left == 1);
            CHECK(raw.at({c.name_of(a), c.name_of(c.dom(a))}) == c.name_of(a));
            CHECK(raw.at({c.name_of(c.cod(a)), c.name_of(a)}) == c.name_of(a));
        }
        // identity-identity compositions exist only on the diagonal
        for (const auto& i : ids)
            for (const auto& j : ids) CHECK(raw.count({i, j}) == (i == j ? 1u : 0u));
        // composability criterion and typing of composites
        for (auto a : c.arrows())
            for (auto b : c.arrows()) {
                auto ba = c.compose(b, a);
                CHECK(ba.has_value() == (c.cod(a) == c.dom(b)));
                CHECK(ba.has_value() == (raw.count({c.name_of(b), c.name_of(a)}) == 1));
                if (ba) {
                    CHECK(c.dom(*ba) == c.dom(a));
                    CHECK(c.cod(*ba) == c.cod(b));
                }
            }
        // hom-classes partition the morphisms
        std::size_t total = 0;
        for (auto x : c.identities())
            for (auto y : c.identities()) {
                const auto h = c.hom(x, y);
                total += h.size();
                CHECK(h.size() == support::oracle_hom_size(c.data(), c.name_of(x), c.name_of(y)));
            }
        CHECK(total == c.size());
        // distinct identities are discernible
        for (auto x : c.identities())
            for (auto y : c.identities()) CHECK(c.discernible(x, y) == (x != y));
        CHECK(c.opposite().opposite() == c);
        CHECK(validate_objectless(c.opposite().data()).ok());
    }
}

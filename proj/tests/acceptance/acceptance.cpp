#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <regex>
#include <sstream>

#include "arrowcat/adjunction.hpp"
#include "arrowcat/equivalence.hpp"
#include "support/support.hpp"

using namespace arrowcat;

namespace {

std::uint64_t power(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t r = 1;
    while (exp--) r *= base;
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Each check returns an empty string on success, otherwise the first problem.
using Check = std::function<std::string()>;

std::string kernel_laws() {
    auto cats = support::random_categories(200, 20, 10000);
    for (auto& c : support::fixture_categories()) cats.push_back(c);
    for (const auto& cp : cats) {
        const Category& c = *cp;
        const auto raw = support::table_of(c.data());
        const auto ids = support::oracle_identities(c.data());
        const std::string where = " in " + c.name();
        for (auto a : c.arrows()) {
            std::size_t right = 0, left = 0;
            for (const auto& i : ids) {
                right += raw.count({c.name_of(a), i});
                left += raw.count({i, c.name_of(a)});
            }
            if (right != 1 || left != 1) return "identities of " + c.name_of(a) + " not unique" + where;
            if (!ids.count(c.name_of(c.dom(a))) || !ids.count(c.name_of(c.cod(a))))
                return "dom/cod of " + c.name_of(a) + " is not an identity" + where;
        }
        for (const auto& i : ids)
            for (const auto& j : ids)
                if (raw.count({i, j}) != (i == j ? 1u : 0u)) return i + " . " + j + " defined wrongly" + where;
        for (auto a : c.arrows())
            for (auto b : c.arrows()) {
                const bool defined = raw.count({c.name_of(b), c.name_of(a)}) == 1;
                if (defined != (c.cod(a) == c.dom(b)))
                    return "composability of " + c.name_of(b) + " . " + c.name_of(a) + where;
                if (!defined) continue;
                auto ba = c.arrow(raw.at({c.name_of(b), c.name_of(a)}));
                if (c.dom(ba) != c.dom(a) || c.cod(ba) != c.cod(b))
                    return "typing of " + c.name_of(b) + " . " + c.name_of(a) + where;
            }
    }
    return "";
}

std::string round_trips() {
    auto cats = support::random_categories(200, 20, 20000);
    for (auto& c : support::fixture_categories()) cats.push_back(c);
    for (const auto& c : cats) {
        auto back = to_objectless(to_standard(*c));
        if (!(back == *c) || back.data() != c->data()) return "objectless round trip differs for " + c->name();
    }
    std::size_t standard = 0;
    for (const auto& file : support::fixture_files()) {
        auto ws = support::load(file);
        for (const auto& [name, decl] : ws.document().categories)
            if (const auto* s = std::get_if<StdCategory>(&decl)) {
                ++standard;
                if (!equal_up_to_renaming(*s, to_standard(to_objectless(*s))))
                    return "standard round trip differs for " + name;
            }
    }
    return standard == 0 ? "no standard fixtures" : "";
}

std::string skeleton_counts() {
    auto dup = support::fixture("finsetdup.cat", "FinSetDup");
    std::uint64_t expected = 0;
    for (std::uint64_t m = 0; m <= 2; ++m)
        for (std::uint64_t n = 0; n <= 2; ++n) expected += power(n, m);
    if (is_skeletal(*dup)) return "FinSetDup reported skeletal";
    auto sk = skeleton(dup);
    if (sk.skeleton->identities().size() != 3) return "identity count " + std::to_string(sk.skeleton->identities().size());
    if (sk.skeleton->size() != expected)
        return "morphism count " + std::to_string(sk.skeleton->size()) + ", expected " + std::to_string(expected);
    if (!is_skeletal(*sk.skeleton)) return "result is not skeletal";
    return "";
}

std::string skeleton_uniqueness() {
    auto cats = support::random_categories(20, 16, 30000);
    cats.insert(cats.begin(), support::fixture("finsetdup.cat", "FinSetDup"));
    for (const auto& c : cats) {
        std::vector<CategoryPtr> sks;
        for (std::uint64_t seed : {0, 1, 2, 3, 5, 8, 13, 21, 34, 55}) sks.push_back(skeleton(c, seed).skeleton);
        for (std::size_t i = 0; i < sks.size(); ++i)
            for (std::size_t j = i + 1; j < sks.size(); ++j)
                if (!find_category_isomorphism(sks[i], sks[j])) return "skeletons of " + c->name() + " differ";
    }
    return "";
}

std::string equivalence_separation() {
    auto w = support::fixture("walking_iso_and_one.cat", "WalkingIso");
    auto one = support::fixture("one.cat", "One");
    auto e = are_equivalent(w, one);
    if (!e) return "no equivalence found";
    auto r = validate_equivalence(*e);
    if (!r.ok()) return "witness does not validate: " + r.to_text();
    if (find_category_isomorphism(w, one)) return "an isomorphism was found";
    return "";
}

std::string oracle_agreement() {
    std::vector<CategoryPtr> pool;
    for (const auto& c : support::fixture_categories())
        if (c->size() <= brute_force_cap) pool.push_back(c);
    std::size_t pairs = 0, reflexive = 0;
    for (std::size_t i = 0; i < pool.size(); ++i)
        for (std::size_t j = i; j < pool.size(); ++j) {
            const bool fast = are_equivalent(pool[i], pool[j]).has_value();
            const bool slow = brute_force_equivalence(pool[i], pool[j]).has_value();
            if (fast != slow) return "disagreement on " + pool[i]->name() + ", " + pool[j]->name();
            ++pairs;
            if (i == j) reflexive += slow;
        }
    if (pairs < 25) return "only " + std::to_string(pairs) + " pairs";
    if (reflexive != pool.size()) return "a reflexive pair failed";
    std::printf("  pool of %zu categories, %zu pairs\n", pool.size(), pairs);
    return "";
}

std::string adjunction() {
    const auto p = FinitePoset::chain(2, "p");
    const auto q = FinitePoset::chain(3, "q");
    auto run = [&](const std::string& file, const MonotoneMap& f, const MonotoneMap& g, bool expect) -> std::string {
        auto ws = support::load(file);
        auto r = check_adjunction({ws.functor("f"), ws.functor("g"), ws.nat("eta"), ws.nat("eps")});
        auto oracle = galois_oracle(p, q, f, g);
        if (r.ok() != expect) return file + ": check_adjunction gave " + (r.ok() ? "adjoint" : "not adjoint");
        if (oracle.holds != expect) return file + ": oracle disagrees";
        // the fixture functors are the monotone maps given to the oracle
        auto pc = ws.category("P");
        auto qc = ws.category("Q");
        for (std::size_t x = 0; x < p.size(); ++x)
            if (ws.functor("f")(pc->arrow(p.element(x))) != qc->arrow(q.element(f[x]))) return file + ": f differs";
        for (std::size_t y = 0; y < q.size(); ++y)
            if (ws.functor("g")(qc->arrow(q.element(y))) != pc->arrow(p.element(g[y]))) return file + ": g differs";
        if (!expect) {
            const std::pair<std::string, std::string> cited{"p1", "q1"};
            if (std::find(r.failing_pairs.begin(), r.failing_pairs.end(), cited) == r.failing_pairs.end())
                return "failing pair x=p1, y=q1 not cited";
            const std::pair<std::size_t, std::size_t> raw{1, 1};
            if (std::find(oracle.failing.begin(), oracle.failing.end(), raw) == oracle.failing.end())
                return "oracle does not fail at (1, 1)";
        }
        return "";
    };
    if (auto m = run("galois.cat", {0, 2}, {0, 0, 1}, true); !m.empty()) return m;
    return run("galois_perturbed.cat", {0, 2}, {0, 1, 1}, false);
}

std::string left_exactness() {
    auto fin = support::fixture("finset2.cat", "FinSet2");
    if (!preserves_finite_limits(functor_identity(fin), available_scope(*fin)).ok()) return "identity on FinSet2";
    auto two = support::fixture("twochain.cat", "TwoChain");
    if (!preserves_finite_limits(functor_identity(two)).ok()) return "identity on TwoChain";
    auto ws = support::load("limits.cat");
    auto k = preserves_finite_limits(ws.functor("Const0"));
    if (k.ok()) return "constant functor passed";
    const auto& f = k.failures.front();
    if (f.kind != LimitKind::terminal || f.counterexample.empty()) return "no terminal counterexample";
    std::printf("  constant functor: %s\n", f.message.c_str());
    return "";
}

std::string discernibility() {
    std::size_t pairs = 0;
    for (const auto& c : support::fixture_categories())
        for (auto x : c->identities())
            for (auto y : c->identities())
                if (x != y) {
                    ++pairs;
                    if (!c->discernible(x, y)) return c->name_of(x) + ", " + c->name_of(y) + " in " + c->name();
                }
    return pairs == 0 ? "no pairs" : "";
}

std::string format() {
    for (const auto& file : support::fixture_files()) {
        auto doc = catspec::read_file(support::fixture_path(file));
        if (!(catspec::parse(catspec::serialize(doc), file) == doc)) return "round trip differs on " + file;
    }
    const auto negatives = support::files_in(ARROWCAT_NEGATIVE_DIR);
    if (negatives.size() < 10) return "negative corpus too small";
    static const std::regex header(R"(^# expect: ([a-z-]+) ([0-9]+))");
    for (const auto& file : negatives) {
        const auto text = slurp(support::negative_path(file));
        std::smatch m;
        if (!std::regex_search(text, m, header)) return file + ": no expectation header";
        try {
            catspec::parse(text, file);
            return file + ": parsed";
        } catch (const catspec::parse_error& e) {
            const auto& d = e.diagnostics().front();
            if (std::string(catspec::to_string(d.kind)) != m[1] || d.span.line != std::stoul(m[2]))
                return file + ": got " + d.to_text(file);
        }
    }
    return "";
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, Check>> criteria{
        {"kernel laws on 200 random categories and fixtures", kernel_laws},
        {"objectless/standard round trips", round_trips},
        {"skeleton of FinSetDup has 3 identities and 11 morphisms", skeleton_counts},
        {"skeletons are unique up to isomorphism", skeleton_uniqueness},
        {"WalkingIso is equivalent but not isomorphic to One", equivalence_separation},
        {"skeleton route agrees with brute force", oracle_agreement},
        {"Galois fixtures against the poset oracle", adjunction},
        {"identity functors are left exact, a constant functor is not", left_exactness},
        {"distinct identities are discernible", discernibility},
        {"catspec round trips and negative diagnostics", format},
    };
    const auto start = std::chrono::steady_clock::now();
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        std::string problem;
        try {
            problem = criteria[i].second();
        } catch (const std::exception& e) {
            problem = std::string("exception: ") + e.what();
        }
        if (problem.empty()) {
            std::printf("PASS %zu: %s\n", i + 1, criteria[i].first.c_str());
        } else {
            ++failed;
            std::printf("FAIL %zu: %s (%s)\n", i + 1, criteria[i].first.c_str(), problem.c_str());
        }
        std::fflush(stdout);
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%zu/%zu criteria passed in %.2f s\n", criteria.size() - failed, criteria.size(), secs);
    return failed == 0 ? 0 : 1;
}

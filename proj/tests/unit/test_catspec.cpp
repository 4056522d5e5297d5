#include <doctest.h>

#include <fstream>
#include <regex>
#include <sstream>

#include "support/support.hpp"

using namespace arrowcat;
using namespace arrowcat::catspec;

namespace {

const char* const two_chain_text = R"(# the two-element chain
objless TwoChain {
  arrows: i0, i1, a;
  compose: i0 . i0 = i0, i1 . i1 = i1;
  compose: a . i0 = a;
  compose: i1 . a = a;
}
)";

const char* const two_chain_canonical = R"(objless TwoChain {
  arrows: a, i0, i1;
  compose: a . i0 = a;
  compose: i0 . i0 = i0;
  compose: i1 . a = a;
  compose: i1 . i1 = i1;
}
)";

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Expectation {
    std::string kind;
    std::size_t line = 0;
};

Expectation expectation_of(const std::string& text) {
    static const std::regex header(R"(^# expect: ([a-z-]+) ([0-9]+))");
    std::smatch m;
    REQUIRE(std::regex_search(text, m, header));
    return {m[1], std::stoul(m[2])};
}

std::vector<Diagnostic> diagnostics_of(const std::string& text) {
    try {
        parse(text, "t.cat");
    } catch (const parse_error& e) {
        return e.diagnostics();
    }
    return {};
}

}  // namespace

TEST_CASE("parse TwoChain") {
    auto doc = parse(two_chain_text);
    REQUIRE(doc.categories.size() == 1);
    const auto& d = std::get<ObjlessData>(doc.categories.at("TwoChain"));
    CHECK(d.morphisms == std::vector<std::string>{"a", "i0", "i1"});
    CHECK(d.table.size() == 4);
    CHECK(doc.spans.at("TwoChain").line == 2);
    CHECK(serialize(doc) == two_chain_canonical);
    Category c(d);
    CHECK(c.name_of(c.dom(c.arrow("a"))) == "i0");
}

TEST_CASE("empty documents") {
    CHECK(parse("").empty());
    CHECK(parse("# nothing here\n\n   # still nothing\n").empty());
    CHECK(serialize(Document{}).empty());
}

TEST_CASE("standard blocks, functors and nats") {
    auto doc = read_file(support::fixture_path("triangle.cat"));
    const auto& tri = std::get<StdCategory>(doc.categories.at("Triangle"));
    CHECK(tri.id_of.at("A") == "one_A");
    CHECK(tri.id_of.at("B") == "id_B");
    REQUIRE(doc.functors.count("Collapse"));
    CHECK(doc.functors.at("Collapse").source == "Triangle");
    REQUIRE(doc.nats.count("Same"));

    auto g = read_file(support::fixture_path("galois.cat"));
    const auto& eta = g.nats.at("eta");
    CHECK(eta.from.is_identity());
    CHECK(eta.from.to_text() == "Id(P)");
    CHECK(eta.to.chain == std::vector<std::string>{"g", "f"});
    CHECK(eta.to.to_text() == "g . f");

    auto contra = parse(R"(objless C { arrows: o; compose: o . o = o; }
functor Op: C -> C contravariant { map o -> o; })");
    CHECK(contra.functors.at("Op").variance == Variance::contravariant);
    CHECK(parse(serialize(contra)) == contra);
}

TEST_CASE("round trips on every fixture") {
    for (const auto& file : support::fixture_files()) {
        CAPTURE(file);
        auto doc = read_file(support::fixture_path(file));
        const auto text = serialize(doc);
        auto again = parse(text, file);
        CHECK(again == doc);
        CHECK(serialize(again) == text);
        // the file itself re-reads to the same document
        CHECK(parse(slurp(support::fixture_path(file)), file) == doc);
    }
}

TEST_CASE("round trips through declare") {
    auto cats = support::random_categories(60, 16, 2000);
    for (const auto& c : cats) {
        CAPTURE(c->name());
        Document doc;
        doc.categories.emplace(c->name(), declare(*c));
        auto id = functor_identity(c);
        doc.functors.emplace(id.name(), declare(id));
        auto back = parse(serialize(doc));
        CHECK(Category(std::get<ObjlessData>(back.categories.at(c->name()))) == *c);
        CHECK(back.functors.at(id.name()).map.size() == c->size());
    }
}

TEST_CASE("negative corpus") {
    const auto files = support::files_in(ARROWCAT_NEGATIVE_DIR);
    CHECK(files.size() >= 15);
    std::set<std::string> kinds;
    for (const auto& file : files) {
        CAPTURE(file);
        const auto text = slurp(support::negative_path(file));
        const auto want = expectation_of(text);
        CHECK_THROWS_AS(parse(text, file), parse_error);
        const auto diags = diagnostics_of(text);
        REQUIRE_FALSE(diags.empty());
        CHECK(std::string(to_string(diags.front().kind)) == want.kind);
        CHECK(diags.front().span.line == want.line);
        CHECK(diags.front().span.column >= 1);
        CHECK(std::is_sorted(diags.begin(), diags.end(),
                             [](const Diagnostic& a, const Diagnostic& b) { return a.span < b.span; }));
        kinds.insert(want.kind);
    }
    CHECK(kinds.size() == 6);
}

TEST_CASE("diagnostic text and collection") {
    auto diags = diagnostics_of("objless A {\n  arrows: x;\n  compose: x . x = y;\n  compose: x . z = x;\n}\n");
    REQUIRE(diags.size() == 2);
    CHECK(diags[0].kind == DiagnosticKind::unknown_name);
    CHECK(diags[0].span.line == 3);
    CHECK(diags[1].span.line == 4);
    CHECK(diags[0].to_text("t.cat").rfind("t.cat:3:", 0) == 0);
    CHECK(diags[0].to_text("t.cat").find(": unknown-name: ") != std::string::npos);

    // nothing is returned on error, even when the first block was fine
    CHECK_THROWS_AS(parse("objless A { arrows: x; compose: x . x = x; }\nobjless B { arrows: ; }"), parse_error);
    auto missing = diagnostics_of("objless A {\n  arrows: x\n}\n");
    REQUIRE(missing.size() == 1);
    CHECK(missing[0].kind == DiagnosticKind::missing_terminator);
    CHECK(missing[0].span.line == 2);
}

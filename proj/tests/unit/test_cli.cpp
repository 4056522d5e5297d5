#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "arrowcat/cli.hpp"
#include "support/support.hpp"

using namespace arrowcat;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string fix(const std::string& file) { return support::fixture_path(file); }

std::string temp_file(const std::string& name, const std::string& text) {
    auto path = std::filesystem::temp_directory_path() / ("arrowcat_test_" + name);
    std::ofstream(path) << text;
    return path.string();
}

}  // namespace

TEST_CASE("exit codes") {
    CHECK(run({"check", fix("galois.cat")}).code == 0);
    CHECK(run({"identities", fix("twochain.cat"), "--cat", "TwoChain"}).code == 0);
    CHECK(run({"homs", fix("finset2.cat"), "--cat", "FinSet2"}).code == 0);
    CHECK(run({"equiv", fix("walking_iso_and_one.cat"), "--left", "WalkingIso", "--right", "One"}).code == 0);
    CHECK(run({"equiv", fix("walking_iso_and_one.cat"), "--left", "WalkingIso", "--right", "One", "--brute-force"})
              .code == 0);
    CHECK(run({"iso", fix("walking_iso_and_one.cat"), "--left", "WalkingIso", "--right", "One"}).code == 1);
    CHECK(run({"adjoint-check", fix("galois.cat"), "--left", "f", "--right", "g", "--unit", "eta", "--counit", "eps"})
              .code == 0);
    CHECK(run({"adjoint-check", fix("galois_perturbed.cat"), "--left", "f", "--right", "g", "--unit", "eta",
               "--counit", "eps"})
              .code == 1);
    CHECK(run({"admissible", fix("lattice.cat"), "--left", "f", "--right", "g", "--unit", "eta", "--counit", "eps"})
              .code == 1);
    CHECK(run({"limits", fix("limits.cat"), "--functor", "Const0"}).code == 1);
    CHECK(run({"limits", fix("limits.cat"), "--functor", "Id2"}).code == 0);
    CHECK(run({"limits", fix("finset2.cat"), "--cat", "FinSet2"}).code == 0);
    CHECK(run({"functor-check", fix("triangle.cat"), "--functor", "Collapse"}).code == 0);

    // usage, parse, name and capacity errors
    CHECK(run({}).code == 2);
    CHECK(run({"check"}).code == 2);
    CHECK(run({"check", "/nonexistent/file.cat"}).code == 2);
    CHECK(run({"check", support::negative_path("digit_name.cat")}).code == 2);
    CHECK(run({"functor-check", fix("galois.cat"), "--functor", "nope"}).code == 2);
    CHECK(run({"equiv", fix("finsetdup.cat"), "--left", "FinSetDup", "--right", "FinSetDup", "--brute-force"}).code ==
          2);
    CHECK(run({"adjoint-check", fix("galois.cat"), "--left", "g", "--right", "f", "--unit", "eta", "--counit", "eps"})
              .code == 2);
    CHECK(run({"limits", fix("finset2.cat"), "--functor", "nope"}).code == 2);
}

TEST_CASE("diagnostics go to stderr with positions") {
    auto r = run({"check", support::negative_path("missing_terminator.cat")});
    CHECK(r.code == 2);
    CHECK(r.err.find("missing_terminator.cat:4:") != std::string::npos);
    CHECK(r.err.find("missing-terminator") != std::string::npos);
}

TEST_CASE("json output is one record") {
    auto r = run({"--format", "json", "check", fix("galois.cat")});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["command"] == "check");
    CHECK(j["verdict"] == "holds");
    CHECK(j["exit_code"] == 0);
    CHECK(j["categories"].size() == 2);

    auto bad = run({"--format", "json", "adjoint-check", fix("galois_perturbed.cat"), "--left", "f", "--right", "g",
                    "--unit", "eta", "--counit", "eps"});
    auto jb = nlohmann::json::parse(bad.out);
    CHECK(jb["verdict"] == "fails");
    CHECK(jb["exit_code"] == 1);
    CHECK(jb["adjunction"]["failing_pairs"][0]["x"] == "p1");
    CHECK(jb["adjunction"]["failing_pairs"][0]["y"] == "q1");

    auto err = run({"--format", "json", "check", support::negative_path("digit_name.cat")});
    auto je = nlohmann::json::parse(err.out);
    CHECK(je["verdict"] == "error");
    CHECK(je["diagnostics"][0]["kind"] == "lexical");
    CHECK(je["diagnostics"][0]["line"] == 3);
}

TEST_CASE("witness output re-checks") {
    auto sk = run({"skeleton", fix("finsetdup.cat"), "--cat", "FinSetDup", "--seed", "3"});
    REQUIRE(sk.code == 0);
    auto path = temp_file("skeleton.cat", sk.out);
    CHECK(run({"check", path}).code == 0);

    auto eq = run({"equiv", fix("finsetdup.cat"), "--left", "FinSetDup", "--right", "FinSetDup"});
    REQUIRE(eq.code == 0);
    CHECK(run({"check", temp_file("equiv.cat", eq.out)}).code == 0);

    auto bf = run({"equiv", fix("walking_iso_and_one.cat"), "--left", "One", "--right", "WalkingIso", "--brute-force"});
    REQUIRE(bf.code == 0);
    CHECK(run({"check", temp_file("bf.cat", bf.out)}).code == 0);
}

TEST_CASE("convert round trip") {
    for (const auto& file : support::fixture_files()) {
        CAPTURE(file);
        auto to_std = run({"convert", fix(file), "--to", "standard"});
        REQUIRE(to_std.code == 0);
        auto std_path = temp_file("std_" + file, to_std.out);
        auto back = run({"convert", std_path, "--to", "objectless"});
        REQUIRE(back.code == 0);
        auto original = support::load(file);
        catspec::Workspace again(catspec::parse(back.out));
        for (const auto& [name, decl] : original.document().categories) {
            REQUIRE(again.has_category(name));
            CHECK(*again.category(name) == *original.category(name));
        }
    }
}

TEST_CASE("generate") {
    auto g = run({"generate", "finset", "--max-size", "2"});
    REQUIRE(g.code == 0);
    catspec::Workspace ws(catspec::parse(g.out));
    CHECK(*ws.category("FinSet2") == *support::fixture("finset2.cat", "FinSet2"));

    auto r1 = run({"generate", "random", "--seed", "9", "--max-morphisms", "12"});
    auto r2 = run({"generate", "random", "--seed", "9", "--max-morphisms", "12"});
    CHECK(r1.code == 0);
    CHECK(r1.out == r2.out);
    CHECK(run({"generate", "discrete", "--n", "3"}).code == 0);
    CHECK(run({"generate", "walking-iso"}).code == 0);
    CHECK(run({"generate", "finset", "--max-size", "2", "--dup", "1"}).out.find("set1b") != std::string::npos);
}

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "toric/cli.hpp"
#include "toric/fan_io.hpp"
#include "toric/reporting.hpp"

using namespace toric;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::vector<std::string>& args)
{
    std::ostringstream out, err;
    int code = toric::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

// Temporary fan document on disk for the path-based commands.
struct TempDoc {
    std::string path;

    explicit TempDoc(const FanDocument& doc, const std::string& name)
        : path("/tmp/toric_test_" + name + ".json")
    {
        std::ofstream f(path);
        f << to_json(doc).dump(2) << "\n";
    }
    ~TempDoc() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("builtin documents round trip through serialization")
{
    for (const auto& name : {"p1", "p2", "p3", "p1xp1", "hirzebruch:2", "wp112"}) {
        FanDocument doc = builtin_fan(name);
        Fan fan = build_fan(doc);
        FanDocument canonical = fan_to_document(fan, name);
        Fan fan2 = build_fan(canonical);
        CHECK(fan.same_combinatorics(fan2));
        // Serializing the canonical form is a fixed point.
        FanDocument again = fan_to_document(fan2, name);
        CHECK(to_json(canonical) == to_json(again));
    }
}

TEST_CASE("hirzebruch:0 builds the same fan as p1xp1")
{
    Fan a = build_fan(builtin_fan("hirzebruch:0"));
    Fan b = build_fan(builtin_fan("p1xp1"));
    CHECK(a.same_combinatorics(b));
}

TEST_CASE("unknown builtin names are rejected")
{
    CHECK_THROWS_AS(builtin_fan("p4"), UnknownBuiltin);
    CHECK_THROWS_AS(builtin_fan("hirzebruch:"), UnknownBuiltin);
    CHECK_THROWS_AS(builtin_fan("hirzebruch:x"), UnknownBuiltin);
}

TEST_CASE("document parsing rejects malformed input")
{
    CHECK_THROWS_AS(parse_fan_document_text("not json"), ParseError);
    CHECK_THROWS_AS(parse_fan_document_text("{}"), ParseError);
    // Duplicate rays (after normalization (2,0) == (1,0)).
    CHECK_THROWS_AS(parse_fan_document_text(
                        R"({"rank":2,"rays":[[1,0],[2,0]],"max_cones":[[0,1]]})"),
                    ParseError);
    // Zero ray.
    CHECK_THROWS_AS(parse_fan_document_text(
                        R"({"rank":2,"rays":[[0,0],[1,0]],"max_cones":[[0,1]]})"),
                    ParseError);
    // Bad index.
    CHECK_THROWS_AS(parse_fan_document_text(
                        R"({"rank":2,"rays":[[1,0],[0,1]],"max_cones":[[0,7]]})"),
                    ParseError);
    // Unused ray.
    CHECK_THROWS_AS(parse_fan_document_text(
                        R"({"rank":2,"rays":[[1,0],[0,1],[-1,-1]],"max_cones":[[0,1]]})"),
                    ParseError);
    // Unknown key (user-supplied face lists are rejected).
    CHECK_THROWS_AS(parse_fan_document_text(
                        R"({"rank":1,"rays":[[1],[-1]],"max_cones":[[0],[1]],"faces":[]})"),
                    ParseError);
}

TEST_CASE("cli validate reports completeness and exits accordingly")
{
    TempDoc p2(builtin_fan("p2"), "p2");
    CliResult ok = run_cli({"validate", p2.path});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("complete: yes") != std::string::npos);

    FanDocument a2;
    a2.rank = 2;
    a2.rays = {{1, 0}, {0, 1}};
    a2.max_cones = {{0, 1}};
    TempDoc affine(a2, "a2");
    CliResult bad = run_cli({"validate", affine.path});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("complete: no") != std::string::npos);
    CHECK(bad.out.find("wall") != std::string::npos);
}

TEST_CASE("cli pipeline commands reject incomplete fans")
{
    FanDocument a2;
    a2.rank = 2;
    a2.rays = {{1, 0}, {0, 1}};
    a2.max_cones = {{0, 1}};
    TempDoc affine(a2, "a2b");
    CliResult r = run_cli({"betti", affine.path});
    CHECK(r.code == 1);
    CHECK(r.err.find("violation") != std::string::npos);
}

TEST_CASE("cli betti json matches the contract")
{
    TempDoc doc(builtin_fan("p1xp1"), "p1xp1");
    CliResult r = run_cli({"betti", doc.path, "--format", "json"});
    REQUIRE(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["betti"] == Json(std::vector<long long>{1, 0, 2, 0, 1}));
    CHECK(j["euler"] == 4);
}

TEST_CASE("cli morphic csv carries the expected table")
{
    TempDoc doc(builtin_fan("p2"), "p2m");
    CliResult r = run_cli({"morphic", doc.path, "--qmax", "2", "--format", "csv"});
    REQUIRE(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "q,0,1,2,3,4");
    std::getline(lines, line);
    CHECK(line == "0,1,0,0,0,0");
    std::getline(lines, line);
    CHECK(line == "1,1,0,1,0,0");
    std::getline(lines, line);
    CHECK(line == "2,1,0,1,0,1");
}

TEST_CASE("cli text json and csv renderings agree on the numbers")
{
    TempDoc doc(builtin_fan("wp112"), "wp112");
    CliResult json = run_cli({"betti", doc.path, "--format", "json"});
    CliResult text = run_cli({"betti", doc.path, "--format", "text"});
    CliResult csv = run_cli({"betti", doc.path, "--format", "csv"});
    REQUIRE(json.code == 0);
    CHECK(text.out.find("1 0 1 0 1") != std::string::npos);
    CHECK(csv.out.find("1,0,1,0,1,3") != std::string::npos);
    Json j = Json::parse(json.out);
    CHECK(j["euler"] == 3);
}

TEST_CASE("cli output is deterministic")
{
    TempDoc doc(builtin_fan("p3"), "p3");
    for (const std::string& cmd : {"cech", "e1", "e2", "morphic", "betti", "oracle", "flags"}) {
        CliResult a = run_cli({cmd, doc.path, "--format", "json"});
        CliResult b = run_cli({cmd, doc.path, "--format", "json"});
        REQUIRE(a.code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("cli builtin emits a parseable document")
{
    CliResult r = run_cli({"builtin", "hirzebruch:2"});
    REQUIRE(r.code == 0);
    FanDocument doc = parse_fan_document_text(r.out);
    CHECK(doc.rank == 2);
    CHECK(doc.rays.size() == 4);
    CliResult bad = run_cli({"builtin", "nope"});
    CHECK(bad.code == 1);
}

TEST_CASE("cli cech and e2 succeed on scrambled orientations")
{
    TempDoc doc(builtin_fan("p2"), "p2s");
    CliResult a = run_cli({"cech", doc.path, "--scramble-orientations", "7", "--format", "json"});
    REQUIRE(a.code == 0);
    Json j = Json::parse(a.out);
    CHECK(j["homology"][0]["rank"] == 1);
    CliResult b = run_cli({"e2", doc.path, "--scramble-orientations", "7", "--format", "csv"});
    CHECK(b.code == 0);
}

TEST_CASE("cli mode flag labels the pages")
{
    TempDoc doc(builtin_fan("p2"), "p2mode");
    CliResult morphic = run_cli({"e2", doc.path, "--format", "json"});
    CliResult singular = run_cli({"e2", doc.path, "--mode", "singular", "--format", "json"});
    REQUIRE(morphic.code == 0);
    REQUIRE(singular.code == 0);
    Json jm = Json::parse(morphic.out), js = Json::parse(singular.out);
    CHECK(jm["mode"] == "morphic");
    CHECK(js["mode"] == "singular");
    // The groups themselves agree between the modes.
    CHECK(jm["groups"] == js["groups"]);
}

TEST_CASE("cli oracle passes on builtins")
{
    TempDoc doc(builtin_fan("p1xp1"), "p1xp1o");
    CliResult r = run_cli({"oracle", doc.path});
    CHECK(r.code == 0);
    CHECK(r.out.find("all checks passed") != std::string::npos);
}

TEST_CASE("cli writes to a file with --out")
{
    TempDoc doc(builtin_fan("p1"), "p1");
    const std::string out_path = "/tmp/toric_test_out.json";
    CliResult r = run_cli({"betti", doc.path, "--format", "json", "--out", out_path});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(out_path);
    REQUIRE(f.good());
    Json j = Json::parse(f);
    CHECK(j["betti"] == Json(std::vector<long long>{1, 0, 1}));
    std::remove(out_path.c_str());
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hfsurg/cli.hpp"
#include "hfsurg/report.hpp"

using namespace hfsurg;

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "hfsurg");
    std::ostringstream out, err;
    Run r;
    r.code = run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

}  // namespace

TEST_CASE("slope ranges") {
    CHECK(parse_slope_range("-2..2") == std::vector<int>{-2, -1, 1, 2});
    CHECK(parse_slope_range("5") == std::vector<int>{5});
    CHECK_THROWS_AS(parse_slope_range("3..1"), InputError);
    CHECK_THROWS_AS(parse_slope_range("a..b"), InputError);
}

TEST_CASE("compute hat as JSON") {
    const auto r = run({"compute", "--knot", "torus:2,5", "--slope", "2", "--format", "json"});
    REQUIRE(r.code == kExitOk);
    const auto j = Json::parse(r.out);
    CHECK(j["schema"] == kSchemaVersion);
    CHECK(j["command"] == "compute");
    CHECK(j["genus"] == 2);
    CHECK(j["results"][0]["classes"]["0"] == 1);
    CHECK(j["results"][0]["classes"]["1"] == 3);
}

TEST_CASE("compute plus with both engines") {
    const auto r = run({"compute", "--knot", "torus:2,11", "--slopes", "-9..-8", "--flavor", "plus", "--engine", "both",
                        "--format", "json"});
    REQUIRE(r.code == kExitOk);
    const auto j = Json::parse(r.out);
    REQUIRE(j["results"].size() == 2);
    CHECK(j["results"][0]["slope"] == -9);
    CHECK(j["results"][0]["classes"]["0"]["tower_bottom"] == 0);
    CHECK(j["results"][0]["classes"]["0"]["torsion"][0]["top"] == -1);

    const auto d = run({"compute", "--knot", "torus:2,3", "--slope", "1", "--flavor", "plus", "--format", "json"});
    CHECK(Json::parse(d.out)["results"][0]["classes"]["0"]["d"] == "-2");
}

TEST_CASE("compute on a model complex") {
    const auto r = run({"compute", "--knot", "cfk:" + fixture("fig8.json"), "--slope", "2", "--format", "json"});
    REQUIRE(r.code == kExitOk);
    CHECK(Json::parse(r.out)["results"][0]["classes"]["0"] == 3);
    const auto p = run({"compute", "--knot", "cfk:" + fixture("fig8.json"), "--slope", "2", "--flavor", "plus"});
    CHECK(p.code == kExitInput);
}

TEST_CASE("input errors exit with code 2") {
    const auto zero = run({"compute", "--knot", "torus:2,3", "--slope", "0"});
    CHECK(zero.code == kExitInput);
    CHECK(zero.err.find("p = 0 unsupported") != std::string::npos);
    CHECK(run({"compute", "--knot", "cfk:" + fixture("broken_d2.json"), "--slope", "2"}).code == kExitInput);
    CHECK(run({"compute", "--knot", "alex:t - 1 +", "--slope", "2"}).code == kExitInput);
    CHECK(run({"compute", "--knot", "alex:-t + 3 - t^-1", "--slope", "2", "--flavor", "plus"}).code == kExitInput);
    CHECK(run({"compute", "--knot", "torus:2,3", "--slope", "2", "--format", "xml"}).code == kExitInput);
    CHECK(run({"frobnicate"}).code == kExitInput);
    CHECK(run({"obstruct", "--knot", "alex:1", "--slope", "2"}).code == kExitInput);
}

TEST_CASE("obstruct") {
    const auto r = run({"obstruct", "--knot", "torus:2,11", "--all-slopes", "--format", "json"});
    REQUIRE(r.code == kExitOk);
    const auto j = Json::parse(r.out);
    REQUIRE(j["results"].size() == 16);
    int open = 0;
    for (const auto& e : j["results"]) {
        if (e["verdict"] != "OBSTRUCTED") {
            ++open;
            CHECK(e["slope"] == 9);
        }
        for (const auto& o : e["orders"]) CHECK(o["lens_order"].get<int>() * o["r"].get<int>() == std::abs(e["slope"].get<int>()));
    }
    CHECK(open == 1);

    const auto text = run({"obstruct", "--knot", "torus:2,11", "--slope", "3"});
    CHECK(text.out.find("OBSTRUCTED") != std::string::npos);
    CHECK(text.out.find("coker U at gr_bot") != std::string::npos);
}

TEST_CASE("verify and scan") {
    const auto v = run({"verify", "--family", "torus2", "--max-q", "15", "--format", "json"});
    CHECK(v.code == kExitOk);
    CHECK(Json::parse(v.out)["status"] == "pass");
    CHECK(run({"verify", "--knot", "torus:3,5", "--all-slopes", "--serial"}).code == kExitOk);

    const auto s = run({"scan", "--family", "standard", "--format", "json"});
    REQUIRE(s.code == kExitOk);
    const auto j = Json::parse(s.out);
    for (const auto& k : j["knots"]) CHECK(k["not_obstructed"].size() <= 1);
}

TEST_CASE("output is deterministic and can go to a file") {
    const std::vector<std::string> args{"obstruct", "--knot", "torus:3,5", "--all-slopes", "--format", "json"};
    CHECK(run(args).out == run(args).out);

    const auto path = std::filesystem::temp_directory_path() / "hfsurg_cli_test.json";
    auto with_out = args;
    with_out.push_back("--out");
    with_out.push_back(path.string());
    const auto r = run(with_out);
    CHECK(r.code == kExitOk);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == run(args).out);
    std::filesystem::remove(path);
}

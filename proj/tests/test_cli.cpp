#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "acampo/cli.hpp"
#include "test_util.hpp"

using nlohmann::json;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = acampo::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string gl4_germ() { return fixture_path("gl4.germ.json"); }
std::string gl4_divide() { return fixture_path("gl4.divide.json"); }

}  // namespace

TEST_CASE("invariants subcommand") {
    CliResult r = run({"invariants", "--germ", gl4_germ()});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["r"] == 4);
    CHECK(j["delta"] == 6);
    CHECK(j["mu"] == 9);

    CliResult t = run({"invariants", "--germ", gl4_germ(), "--format", "text"});
    CHECK(t.code == 0);
    CHECK(t.out.find("mu = 9") != std::string::npos);
}

TEST_CASE("divide-check passes on the fixture and fails on a tampered one") {
    CliResult ok = run({"divide-check", "--germ", gl4_germ(), "--divide", gl4_divide()});
    CHECK(ok.code == 0);
    CHECK(json::parse(ok.out)["pass"] == true);

    // tamper: drop a double point
    json dj = json::parse(std::ifstream(gl4_divide()));
    dj["double_points"].erase(5);
    std::string tmp = "/tmp/acampo_tampered_divide.json";
    std::ofstream(tmp) << dj.dump();
    CliResult bad = run({"divide-check", "--germ", gl4_germ(), "--divide", tmp});
    CHECK(bad.code == 1);
    json bj = json::parse(bad.out);
    CHECK(bj["pass"] == false);
    CHECK(bj["issues"].size() >= 1);
}

TEST_CASE("dynkin formats") {
    CliResult dot = run({"dynkin", "--divide", gl4_divide(), "--format", "dot"});
    REQUIRE(dot.code == 0);
    CHECK(dot.out.find("graph dynkin {") == 0);
    CliResult js = run({"dynkin", "--divide", gl4_divide(), "--format", "json"});
    REQUIRE(js.code == 0);
    CHECK(json::parse(js.out)["vertices"].size() == 9);
    CHECK(json::parse(js.out)["edges"].size() == 12);
}

TEST_CASE("classes, strata, decompose, limit, monodromy run clean on gl4") {
    CHECK(run({"classes", "--germ", gl4_germ(), "--divide", gl4_divide()}).code == 0);
    CHECK(run({"strata", "--germ", gl4_germ(), "--divide", gl4_divide(), "--n", "3"}).code == 0);
    CHECK(run({"decompose", "--germ", gl4_germ(), "--divide", gl4_divide(), "--n", "2"}).code == 0);
    CHECK(run({"limit", "--germ", gl4_germ(), "--divide", gl4_divide()}).code == 0);
    CHECK(run({"monodromy", "--divide", gl4_divide(), "--primes", "3,5"}).code == 0);
    CliResult txt = run({"decompose", "--germ", gl4_germ(), "--divide", gl4_divide(), "--n", "2",
                         "--format", "text"});
    CHECK(txt.code == 0);
    CHECK(txt.out.find("consistency: pass") != std::string::npos);
}

TEST_CASE("generate subcommand") {
    CliResult lines = run({"generate", "--kind", "lines", "--params", "d=4"});
    REQUIRE(lines.code == 0);
    json j = json::parse(lines.out);
    CHECK(j["divide"]["double_points"].size() == 6);
    CHECK(j["germ"]["branches"].size() == 4);

    CliResult grid = run({"generate", "--kind", "grid", "--params", "p=2,q=3"});
    REQUIRE(grid.code == 0);
    CHECK(json::parse(grid.out)["divide"]["double_points"].size() == 1);
}

TEST_CASE("exit codes: parse errors are 2, budget errors are 3") {
    CHECK(run({"invariants", "--germ", "/nonexistent.json"}).code == 2);
    CHECK(run({"generate", "--kind", "grid", "--params", "p=4,q=6"}).code == 2);
    CHECK(run({"generate", "--kind", "grid", "--params", "p=1,q=3"}).code == 2);

    std::string tmp = "/tmp/acampo_bad.json";
    std::ofstream(tmp) << "{ not json";
    CHECK(run({"invariants", "--germ", tmp}).code == 2);

    // a d=6 arrangement has quotient rank 20: projective spinning refuses
    CliResult gen = run({"generate", "--kind", "lines", "--params", "d=6"});
    REQUIRE(gen.code == 0);
    json j = json::parse(gen.out);
    std::string dpath = "/tmp/acampo_d6_divide.json";
    std::ofstream(dpath) << j["divide"].dump();
    CliResult ev = run({"monodromy", "--divide", dpath, "--primes", "3"});
    CHECK(ev.code == 3);
}

TEST_CASE("every reporting subcommand is byte-deterministic") {
    std::vector<std::vector<std::string>> cmds = {
        {"invariants", "--germ", gl4_germ()},
        {"divide-check", "--germ", gl4_germ(), "--divide", gl4_divide()},
        {"dynkin", "--divide", gl4_divide(), "--format", "dot"},
        {"dynkin", "--divide", gl4_divide(), "--format", "json"},
        {"monodromy", "--divide", gl4_divide(), "--primes", "3,5"},
        {"classes", "--germ", gl4_germ(), "--divide", gl4_divide()},
        {"strata", "--germ", gl4_germ(), "--divide", gl4_divide(), "--n", "4"},
        {"decompose", "--germ", gl4_germ(), "--divide", gl4_divide(), "--n", "2"},
        {"limit", "--germ", gl4_germ(), "--divide", gl4_divide()},
        {"generate", "--kind", "lines", "--params", "d=5"},
        {"generate", "--kind", "grid", "--params", "p=3,q=4"},
    };
    for (const auto& cmd : cmds) {
        CliResult a = run(cmd);
        CliResult b = run(cmd);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("the seedless flag never changes output") {
    CliResult plain = run({"decompose", "--germ", gl4_germ(), "--divide", gl4_divide(), "--n", "2"});
    CliResult flagged =
        run({"--seedless", "decompose", "--germ", gl4_germ(), "--divide", gl4_divide(), "--n", "2"});
    CHECK(plain.code == flagged.code);
    CHECK(plain.out == flagged.out);
}

TEST_CASE("structurally wrong json is reported as a parse error") {
    std::string tmp = "/tmp/acampo_misshaped_germ.json";
    std::ofstream(tmp) << R"({"branches": [{"id": 1, "characteristic": [1], "parametrization": {"x": []}}]})";
    CliResult r = run({"invariants", "--germ", tmp});
    CHECK(r.code == 2);
    CHECK(r.err.find("malformed germ object") != std::string::npos);
}

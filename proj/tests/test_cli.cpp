#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ringline/cli.hpp"

using namespace ringline;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("ring info", "[cli]") {
    RunResult r = cli({"ring", "info", "zmod(6)"});
    CHECK(r.code == 0);
    CHECK(r.out.find("local: false") != std::string::npos);
    CHECK(r.out.find("radical: {0}") != std::string::npos);
    CHECK(r.out.find("size: 6") != std::string::npos);

    RunResult r2 = cli({"ring", "info", "dual(gf(2))"});
    CHECK(r2.code == 0);
    CHECK(r2.out.find("local: true") != std::string::npos);
    CHECK(r2.out.find("nil exponent: 2") != std::string::npos);
}

TEST_CASE("projline commands", "[cli]") {
    RunResult r = cli({"projline", "enumerate", "dual(gf(2))"});
    CHECK(r.code == 0);
    CHECK(r.out.find("points: 6") != std::string::npos);

    RunResult dot = cli({"projline", "graph", "dual(gf(2))", "--format", "dot"});
    CHECK(dot.code == 0);
    CHECK(std::count(dot.out.begin(), dot.out.end(), '[') == 6);   // one label per vertex
    std::size_t edges = 0;
    for (std::size_t pos = dot.out.find("--"); pos != std::string::npos;
         pos = dot.out.find("--", pos + 2))
        ++edges;
    CHECK(edges == 12);

    RunResult js = cli({"projline", "graph", "dual(gf(2))", "--format", "json"});
    CHECK(js.code == 0);
    nlohmann::json j = nlohmann::json::parse(js.out);
    CHECK(j["schema"] == 1);
    CHECK(j["points"].size() == 6);
    CHECK(j["edges"].size() == 12);

    RunResult bad = cli({"projline", "graph", "dual(gf(2))", "--format", "xml"});
    CHECK(bad.code == 2);
}

TEST_CASE("parallelism command", "[cli]") {
    RunResult r = cli({"parallelism", "dual(gf(2))"});
    CHECK(r.code == 0);
    CHECK(r.out.find("classes: 3 of size 2") != std::string::npos);
    CHECK(r.out.find("local ring: yes") != std::string::npos);

    RunResult r6 = cli({"parallelism", "zmod(6)"});
    CHECK(r6.code == 0);
    CHECK(r6.out.find("local ring: no") != std::string::npos);
    CHECK(r6.out.find("witness (non-distant, non-parallel):") != std::string::npos);

    RunResult js = cli({"parallelism", "upper2(gf(3))", "--json"});
    CHECK(js.code == 0);
    nlohmann::json j = nlohmann::json::parse(js.out);
    CHECK(j["schema"] == 1);
    CHECK(j["class_count"] == 16);
    CHECK(j["class_size"] == 3);
    CHECK(j["local"] == false);
    CHECK(j.contains("witness"));
}

TEST_CASE("trafo apply", "[cli]") {
    RunResult r = cli({"trafo", "apply", "dual(gf(3))@gf(3)", "--matrix", "1,0,1,1", "--z", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("gamma'(1) = 2") != std::string::npos);  // translation by 1

    // outside the domain of the inversion matrix
    RunResult od = cli({"trafo", "apply", "dual(gf(3))@gf(3)", "--matrix", "0,1,1,0", "--z", "e"});
    CHECK(od.code == 1);
    CHECK(od.err.find("outside the domain") != std::string::npos);

    RunResult bad = cli({"trafo", "apply", "dual(gf(3))@gf(3)", "--matrix", "1,0,1", "--z", "1"});
    CHECK(bad.code == 2);
}

TEST_CASE("groups command", "[cli]") {
    RunResult r = cli({"groups", "dual(gf(3))@gf(3)"});
    CHECK(r.code == 0);
    CHECK(r.out.find("|B| = 3  |T| = 9  |N| = 9") != std::string::npos);
    CHECK(r.out.find("N commutes with B: yes") != std::string::npos);
}

TEST_CASE("model lines command", "[cli]") {
    RunResult r = cli({"model", "lines", "--example", "dual", "--field", "gf(3)", "--t", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("lines: 12") != std::string::npos);

    RunResult js = cli({"model", "lines", "--example", "dual", "--field", "gf(3)", "--t", "2",
                        "--json"});
    CHECK(js.code == 0);
    nlohmann::json j = nlohmann::json::parse(js.out);
    CHECK(j["schema"] == 1);
    CHECK(j["lines"].size() == 12);

    RunResult gf2 = cli({"model", "lines", "--example", "dual", "--field", "gf(2)", "--t", "1"});
    CHECK(gf2.code == 1);  // the two-element field is excluded

    RunResult badex = cli({"model", "lines", "--example", "circle", "--field", "gf(3)"});
    CHECK(badex.code == 2);
}

TEST_CASE("model figures command", "[cli]") {
    std::string path = "cli_figure_test.csv";
    RunResult r = cli({"model", "figures", "--example", "ternion", "--t", "1.5", "--range",
                       "0:1:0.5", "--out", path});
    CHECK(r.code == 0);
    std::ifstream f(path);
    REQUIRE(f.good());
    std::string header;
    std::getline(f, header);
    CHECK(header == "curve_id,param,x,y,z");
    f.close();
    std::remove(path.c_str());

    RunResult bad = cli({"model", "figures", "--example", "dual", "--t", "1", "--range", "0:1:-1",
                         "--out", path});
    CHECK(bad.code == 2);
}

TEST_CASE("verify subcommands", "[cli]") {
    RunResult r = cli({"verify", "ring", "zmod(6)"});
    CHECK(r.code == 0);
    CHECK(r.out.find("[ring] zmod(6)") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.rfind("OK") != std::string::npos);

    RunResult par = cli({"verify", "parallelism", "upper2(gf(3))"});
    CHECK(par.code == 0);

    RunResult tr = cli({"verify", "trafo", "dual(gf(3))@gf(3)"});
    CHECK(tr.code == 0);

    RunResult mo = cli({"verify", "models", "upper2(gf(3))@gf(3)"});
    CHECK(mo.code == 0);

    RunResult js = cli({"verify", "projline", "zmod(4)", "--json"});
    CHECK(js.code == 0);
    nlohmann::json j = nlohmann::json::parse(js.out);
    REQUIRE(j.is_array());
    CHECK(j[0]["schema"] == 1);
    CHECK(j[0]["pass"] == true);
    CHECK_FALSE(j[0].contains("elapsed_ms"));  // timings only on request
}

TEST_CASE("verify all over a small catalog", "[cli]") {
    RunResult r = cli({"verify", "all", "--max-size", "9"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.rfind("OK:") != std::string::npos);

    // parallel execution produces the same bytes in the same order
    RunResult r2 = cli({"verify", "all", "--max-size", "9", "--jobs", "4"});
    CHECK(r2.code == 0);
    CHECK(r2.out == r.out);
}

TEST_CASE("identical invocations produce identical bytes", "[cli]") {
    for (auto args : {std::vector<std::string>{"verify", "trafo", "dual(gf(3))@gf(3)"},
                      std::vector<std::string>{"projline", "graph", "zmod(4)", "--format", "json"},
                      std::vector<std::string>{"parallelism", "mat2(gf(2))", "--json"}}) {
        RunResult a = cli(args);
        RunResult b = cli(args);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("the sampling seed can be overridden from the environment", "[cli]") {
    setenv("RINGLINE_SEED", "12345", 1);
    CHECK(env_seed() == 12345);
    RunResult r = cli({"verify", "trafo", "trunc(gf(3),3)@gf(3)"});
    CHECK(r.code == 0);
    setenv("RINGLINE_SEED", "not-a-number", 1);
    CHECK(cli({"verify", "trafo", "dual(gf(3))@gf(3)"}).code == 1);
    unsetenv("RINGLINE_SEED");
    CHECK(env_seed() == kDefaultSweepSeed);
}

TEST_CASE("exit codes", "[cli]") {
    CHECK(cli({"ring", "info", "nonsense(5)"}).code == 2);
    CHECK(cli({"ring", "info", "zmod(99999)"}).code == 2);
    CHECK(cli({"no-such-command"}).code == 2);
    CHECK(cli({}).code == 2);
    CHECK(cli({"--help"}).code == 0);
    CHECK(cli({"verify", "trafo", "zmod(9)"}).code == 1);  // no algebra on zmod(9)
}

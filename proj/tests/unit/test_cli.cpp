#include <doctest.h>

#include <filesystem>
#include <json.hpp>
#include <sstream>
#include <unistd.h>

#include "prodham/cli.hpp"
#include "prodham/cycle.hpp"
#include "prodham/fixtures.hpp"
#include "prodham/ham_builder.hpp"
#include "prodham/io.hpp"
#include "prodham/product.hpp"

using namespace prodham;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;

    nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "prodham");
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / ("prodham-cli-" + std::to_string(::getpid()))) {
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name, const std::string& text = {}) const {
        auto p = (path / name).string();
        if (!text.empty())
            write_text_file(p, text);
        return p;
    }
};

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("product") {
    TempDir tmp;
    auto p2 = tmp.file("p2.txt", "2 1\n1 2\n");
    auto r = run({"product", "--n", "2", "--graph", p2});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "4 4\n1 2\n1 3\n2 4\n3 4\n");

    auto p3 = tmp.file("p3.txt", "3 2\n1 2\n2 3\n");
    auto j = run({"product", "--n", "10", "--graph", p3, "--json"}).json();
    CHECK(j["order"] == 30);
    CHECK(j["size"] == 47);

    auto out = tmp.file("t1.txt");
    auto dot = tmp.file("t1.dot");
    CHECK(run({"product", "--n", "4", "--graph", "fixture:T1", "--out", out, "--dot", dot}).code == kExitOk);
    CHECK(read_graph_file(out).order() == 32);
    CHECK(read_text_file(dot).find("\"4_8\"") != std::string::npos);
}

TEST_CASE("hamcycle") {
    TempDir tmp;
    auto k4 = tmp.file("k4.txt", emit_graph(Graph::complete(4)));
    auto r = run({"hamcycle", "--n", "3", "--graph", k4, "--json"});
    CHECK(r.code == kExitOk);
    auto j = r.json();
    CHECK(j["status"] == "ok");
    CHECK(j["mode"] == "matching");
    CHECK(j["cycle"].size() == 12);

    auto cyc = tmp.file("fig4.cycle");
    auto dot = tmp.file("fig4.dot");
    r = run({"hamcycle", "--n", "10", "--graph", "fixture:fig4", "--mode", "pathfactor", "--out", cyc, "--dot", dot});
    CHECK(r.code == kExitOk);
    auto c = parse_cycle(read_text_file(cyc));
    CHECK(c.vertices.size() == 60);
    CHECK(verify_cycle(path_product(10, fixtures().fig4).graph, c));
    CHECK(read_text_file(dot).find("penwidth") != std::string::npos);
    CHECK(run({"verify", "--graph", "fixture:fig4", "--cycle", cyc}).out == "valid: true\n");

    auto k13 = tmp.file("k13.txt", emit_graph(Graph::star(3)));
    r = run({"hamcycle", "--n", "4", "--graph", k13, "--json"});
    CHECK(r.code == kExitNoFactor);
    j = r.json();
    CHECK(j["error"] == "NoFactor");
    CHECK(j["certificate"]["S"] == nlohmann::json::array({1}));
    CHECK(j["certificate"]["isolated"] == 3);

    r = run({"hamcycle", "--n", "4", "--graph", k13});
    CHECK(r.code == kExitNoFactor);
    CHECK(r.err.find("S = {1}; i(G-S) = 3; 2|S| = 2") != std::string::npos);

    r = run({"hamcycle", "--n", "8", "--graph", "fixture:fig4", "--mode", "pathfactor", "--json"});
    CHECK(r.code == kExitPrecondition);
    CHECK(r.json()["required_n"] == 10);

    auto split = tmp.file("split.txt", "4 2\n1 2\n3 4\n");
    r = run({"hamcycle", "--n", "4", "--graph", split, "--json"});
    CHECK(r.code == kExitPrecondition);
    CHECK(r.json()["error"] == "Disconnected");
}

TEST_CASE("pathfactor") {
    TempDir tmp;
    auto r = run({"pathfactor", "--graph", "fixture:T1"});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "(1,2,6) (3,7) (5,4,8)\n");
    auto j = run({"pathfactor", "--graph", "fixture:T1", "--json"}).json();
    CHECK(j["components"].size() == 3);

    auto p3 = tmp.file("p3.txt", "3 2\n1 2\n2 3\n");
    r = run({"pathfactor", "--graph", p3, "--kind", "pm"});
    CHECK(r.code == kExitNoFactor);
    CHECK(r.err.find("odd order") != std::string::npos);

    auto k13 = tmp.file("k13.txt", emit_graph(Graph::star(3)));
    r = run({"pathfactor", "--graph", k13, "--json"});
    CHECK(r.code == kExitNoFactor);
    CHECK(r.json()["certificate"]["isolated"] == 3);
}

TEST_CASE("toughness") {
    TempDir tmp;
    auto p3 = tmp.file("p3.txt", "3 2\n1 2\n2 3\n");
    CHECK(run({"toughness", "--graph", p3}).out.starts_with("toughness: 1/2\n"));
    auto k4 = tmp.file("k4.txt", emit_graph(Graph::complete(4)));
    CHECK(run({"toughness", "--graph", k4}).out == "toughness: Infinite\n");
    auto j = run({"toughness", "--graph", "fixture:fig1", "--json"}).json();
    CHECK(j["toughness"] == "1");
    CHECK(j["witness"]["S"] == nlohmann::json::array({1, 6}));

    auto prod = tmp.file("p4t1.txt", emit_graph(path_product(4, fixtures().t1).graph));
    auto r = run({"toughness", "--graph", prod, "--one-tough", "--budget-seconds", "0.000001", "--json"});
    CHECK(r.code == kExitOk);
    CHECK(r.json()["status"] == "unknown");
    r = run({"toughness", "--graph", prod, "--json"});
    CHECK(r.code == kExitOk);
    CHECK(r.json()["toughness"] == "Unknown");
}

TEST_CASE("check and verify") {
    TempDir tmp;
    auto r = run({"check", "--graph", "fixture:T1", "--n", "4", "--json"});
    CHECK(r.code == kExitOk);
    CHECK(r.json()["hamiltonian"] == "none");

    auto cyc = tmp.file("p5fig4.cycle");
    r = run({"check", "--graph", "fixture:fig4", "--n", "5", "--out", cyc});
    CHECK(r.code == kExitOk);
    CHECK(run({"verify", "--graph", "fixture:fig4", "--cycle", cyc}).out == "valid: true\n");

    r = run({"check", "--graph", "fixture:T1", "--n", "4", "--budget-seconds", "0.000000000001"});
    CHECK(r.code == kExitBudget);

    auto p3 = tmp.file("p3.txt", "3 2\n1 2\n2 3\n");
    auto fig2 = tmp.file("fig2.cycle",
                         "10 3\n1_1 2_1 2_2 3_2 3_1 4_1 5_1 6_1 6_2 7_2 7_1 8_1 9_1 10_1 10_2 10_3 9_3 8_3 8_2 "
                         "9_2 9_3\n");
    CHECK(run({"verify", "--graph", p3, "--cycle", fig2}).out == "valid: false\n");
    auto standard = tmp.file("p10p3.cycle", emit_cycle(standard_cycle_p3(10)));
    CHECK(run({"verify", "--graph", p3, "--cycle", standard, "--n", "10"}).out == "valid: true\n");

    HamCycle good = parse_cycle(read_text_file(cyc));
    auto product = tmp.file("p5fig4.txt", emit_graph(path_product(5, fixtures().fig4).graph));
    CHECK(run({"verify", "--graph", product, "--cycle", cyc, "--json"}).json()["valid"] == true);
    std::swap(good.vertices[0], good.vertices[7]);
    auto bad = tmp.file("bad.cycle", emit_cycle(good));
    r = run({"verify", "--graph", "fixture:fig4", "--cycle", bad});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "valid: false\n");
}

TEST_CASE("scan") {
    TempDir tmp;
    auto report = tmp.file("scan2.log");
    auto r = run({"scan", "2", "--max-h", "6", "--max-n", "9", "--out", report, "--json"});
    CHECK(r.code == kExitOk);
    auto j = r.json();
    CHECK(j["status"] == "complete");
    CHECK(j["instances"][0]["reference"] == true);
    CHECK(j["instances"][0]["n"] == 5);
    CHECK(j["instances"][0]["verdict"] == "found");
    CHECK(fs::exists(report));
    CHECK(fs::exists(report + ".json"));
    CHECK(r.out == run({"scan", "2", "--max-h", "6", "--max-n", "9", "--json"}).out);

    auto one = tmp.file("scan1.log");
    r = run({"scan", "1", "--k", "3", "--max-order", "6", "--budget-seconds", "2", "--out", one});
    CHECK(r.code == kExitOk);
    CHECK(read_text_file(one).find("# examined") != std::string::npos);

    CHECK(run({"scan", "1", "--k", "2"}).code == kExitUsage);
    CHECK(run({"scan", "3"}).code == kExitUsage);
}

TEST_CASE("usage and parse errors") {
    TempDir tmp;
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    CHECK(run({"product", "--graph", "fixture:T1"}).code == kExitUsage);
    CHECK(run({"hamcycle", "--n", "4", "--graph", "fixture:T1", "--mode", "sideways"}).code == kExitUsage);
    CHECK(run({"--help"}).code == kExitOk);
    CHECK(run({"product", "--n", "2", "--graph", tmp.file("missing.txt")}).code == kExitParse);
    auto bad = tmp.file("bad.txt", "3 2\n1 2\n");
    auto r = run({"product", "--n", "2", "--graph", bad, "--json"});
    CHECK(r.code == kExitParse);
    CHECK(r.json()["error"] == "Malformed");
    CHECK(run({"product", "--n", "2", "--graph", "fixture:nope"}).code == kExitParse);
}

TEST_CASE("json output is stable") {
    auto a = run({"hamcycle", "--n", "10", "--graph", "fixture:T1", "--json"});
    auto b = run({"hamcycle", "--n", "10", "--graph", "fixture:T1", "--json"});
    CHECK(a.code == kExitOk);
    CHECK(a.out == b.out);
    CHECK(a.json()["mode"] == "pathfactor");
}

}

#include "altind/cli.hpp"

#include "altind/indpoly.hpp"
#include "doctest.h"
#include "oracles.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace altind;
using namespace altind::testing;

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args, const std::string& input = "") {
    args.insert(args.begin(), "altind");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::istringstream in(input);
    std::ostringstream out, err;
    Run r;
    r.code = run_cli(static_cast<int>(argv.size()), argv.data(), in, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

}  // namespace

TEST_CASE("analyze a triangle") {
    auto r = cli({"analyze"}, "Bw\n");
    REQUIRE(r.code == 0);
    auto ls = lines(r.out);
    REQUIRE(ls.size() == 1);
    auto j = nlohmann::json::parse(ls[0]);
    CHECK(j["alternating"] == -2);
    CHECK(j["phi"] == 1);
    CHECK(j["phi3"] == 1);
    CHECK(j["nu"] == 1);
    CHECK(j["ternary"] == false);
    CHECK(j["independent_sets"] == 4);
    CHECK(j["q"] == 1);
    CHECK(j["middle_bound"] == 2);
    CHECK(j["polynomial"] == std::vector<int>{1, 3});
}

TEST_CASE("analyze a single vertex") {
    auto r = cli({"analyze"}, "@\n");
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(lines(r.out).at(0));
    CHECK(j["alternating"] == 0);
    CHECK(j["phi"] == 0);
    CHECK(j["phi3"] == 0);
    CHECK(j["nu"] == 0);
    CHECK(j["ternary"] == true);
}

TEST_CASE("analyze empty input") {
    auto r = cli({"analyze"}, "");
    CHECK(r.code == 0);
    CHECK(r.out.empty());
}

TEST_CASE("analyze agrees with brute force") {
    std::mt19937_64 rng(103);
    std::string input;
    std::vector<Graph> graphs;
    for (int i = 0; i < 40; ++i) {
        graphs.push_back(random_graph(rng, static_cast<int>(rng() % 10)));
        input += to_graph6(graphs.back()) + "\n";
    }
    auto r = cli({"analyze", "--jobs", "3"}, input);
    REQUIRE(r.code == 0);
    auto ls = lines(r.out);
    REQUIRE(ls.size() == graphs.size());
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        auto j = nlohmann::json::parse(ls[i]);
        CHECK(j["index"] == i);
        CHECK(j["alternating"] == brute_alternating(graphs[i]));
        CHECK(j["independent_sets"] == brute_count(graphs[i]));
        CHECK(j["ternary"] == brute_ternary(graphs[i]));
    }
}

TEST_CASE("analyze csv") {
    auto r = cli({"--format", "csv", "analyze"}, "Bw\n");
    REQUIRE(r.code == 0);
    CHECK(lines(r.out).size() == 2);
}

TEST_CASE("verify reports a tight triangle") {
    auto r = cli({"verify"}, "Bw\n");
    CHECK(r.code == 0);
    auto ls = lines(r.out);
    REQUIRE(ls.size() == 2);
    auto summary = nlohmann::json::parse(ls[1])["summary"];
    CHECK(summary["graphs"] == 1);
    CHECK(summary["checks"]["chain_middle"]["tight"] == 1);
    CHECK(summary["violations"].empty());
}

TEST_CASE("verify rejects a malformed line with its number") {
    auto r = cli({"verify"}, "Bw\nnot graph6!\n");
    CHECK(r.code == 2);
    CHECK(r.out.find("\"line\":2") != std::string::npos);
}

TEST_CASE("verify on the n <= 5 corpus passes and is deterministic across job counts") {
    std::string corpus;
    for (int n = 0; n <= 5; ++n)
        for (auto& l : lines(cli({"enumerate", std::to_string(n)}).out)) corpus += l + "\n";
    auto one = cli({"--jobs", "1", "verify"}, corpus);
    auto eight = cli({"--jobs", "8", "verify"}, corpus);
    CHECK(one.code == 0);
    CHECK(one.out == eight.out);
    auto summary = nlohmann::json::parse(lines(one.out).back())["summary"];
    CHECK(summary["graphs"] == 1100);
    CHECK(summary["violations"].empty());
}

TEST_CASE("strict turns unevaluated checks into exit 3") {
    auto loose = cli({"--subset-cap", "1", "verify"}, "D~{\n");
    CHECK(loose.code == 0);
    auto strict = cli({"--subset-cap", "1", "--strict", "verify"}, "D~{\n");
    CHECK(strict.code == 3);
}

TEST_CASE("input file option") {
    const auto path = std::filesystem::temp_directory_path() / "altind_cli_input.g6";
    {
        std::ofstream f(path);
        f << "Bw\n@\n";
    }
    auto r = cli({"--input", path.string(), "analyze"});
    CHECK(r.code == 0);
    CHECK(lines(r.out).size() == 2);
    std::filesystem::remove(path);
    CHECK(cli({"--input", path.string(), "analyze"}).code == 2);
}

TEST_CASE("generate every target for k = 1") {
    auto r = cli({"generate", "-k", "1", "--all"});
    REQUIRE(r.code == 0);
    auto ls = lines(r.out);
    REQUIRE(ls.size() == 5);
    for (std::size_t i = 0; i < ls.size(); ++i) {
        auto j = nlohmann::json::parse(ls[i]);
        CHECK(j["q"] == static_cast<int>(i) - 2);
        Graph g = parse_graph6(j["graph6"].get<std::string>());
        CHECK(is_connected(g));
        CHECK(brute_alternating(g) == static_cast<int>(i) - 2);
        CHECK(min_ternary_decycling(g).size == 1);
    }
    auto bare = cli({"generate", "-k", "1", "--all", "--graph6"});
    CHECK(lines(bare.out).size() == 5);
}

TEST_CASE("generate k = 2, q = 4") {
    auto r = cli({"generate", "-k", "2", "-q", "4"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(lines(r.out).at(0));
    Graph g = parse_graph6(j["graph6"].get<std::string>());
    CHECK(alternating_number(g) == 4);
    CHECK(min_ternary_decycling(g).size == 2);
    // the doubler chain on a triangle with one sign flip reaches the same target
    Graph chain = sign_flip_extend(doubler_attach(cycle(3), 0), 0);
    CHECK(alternating_number(chain) == 4);
    CHECK(min_ternary_decycling(chain).size == 2);
}

TEST_CASE("generate rejects |q| > 2^k") {
    auto r = cli({"generate", "-k", "1", "-q", "3"});
    CHECK(r.code == 2);
    CHECK_FALSE(r.err.empty());
}

TEST_CASE("generate writes recipe sidecars") {
    const auto dir = std::filesystem::temp_directory_path() / "altind_recipes";
    std::filesystem::remove_all(dir);
    auto r = cli({"generate", "-k", "1", "--all", "--recipe-dir", dir.string()});
    REQUIRE(r.code == 0);
    std::ifstream f(dir / "k1_q-2.json");
    REQUIRE(f.good());
    auto recipe = GadgetRecipe::from_json(nlohmann::ordered_json::parse(f));
    CHECK(alternating_number(recipe.build()) == -2);
    std::filesystem::remove_all(dir);
}

TEST_CASE("enumerate line counts") {
    CHECK(lines(cli({"enumerate", "2"}).out) == std::vector<std::string>{"A?", "A_"});
    CHECK(lines(cli({"enumerate", "3"}).out).size() == 8);
    auto six = lines(cli({"enumerate", "6"}).out);
    CHECK(six.size() == 32768);
    CHECK(six.front() == "E???");
    CHECK(six.back() == "E~~w");
    CHECK(cli({"enumerate", "7"}).code == 2);
}

TEST_CASE("oracle subcommand") {
    auto r = cli({"oracle"}, "Bw\nCl\n");
    CHECK(r.code == 0);
    CHECK(lines(r.out).size() == 2);
    std::string big = to_graph6(Graph(30)) + "\n";
    CHECK(cli({"oracle"}, big).code == 2);
}

TEST_CASE("usage errors exit 2") {
    CHECK(cli({}).code == 2);
    CHECK(cli({"frobnicate"}).code == 2);
    CHECK(cli({"--format", "xml", "analyze"}).code == 2);
    CHECK(cli({"--help"}).code == 0);
}

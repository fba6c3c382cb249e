#include "altind/constructions.hpp"

#include "altind/indpoly.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace altind;
using namespace altind::testing;

namespace {

int phi3(const Graph& g) { return min_ternary_decycling(g).size; }
int phi(const Graph& g) { return min_decycling(g).size; }

void check_realization(int k, std::int64_t q, const Realization& r) {
    CAPTURE(k);
    CAPTURE(q);
    CHECK(is_connected(r.graph));
    CHECK(alternating_number(r.graph) == q);
    CHECK(phi3(r.graph) == k);
    CHECK(r.alternating == q);
    CHECK(r.phi3 == k);
    CHECK(r.recipe.build() == r.graph);
    CHECK(r.recipe.target_k == k);
    CHECK(r.recipe.target_q == q);
    if (r.graph.order() <= 20) CHECK(brute_alternating(r.graph) == q);
}

}  // namespace

TEST_CASE("sign flip examples") {
    Graph c3 = cycle(3);
    for (int v = 0; v < 3; ++v) CHECK(brute_alternating(sign_flip_extend(c3, v)) == 2);
    CHECK(brute_alternating(sign_flip_extend(sign_flip_extend(c3, 0), 0)) == -2);
    Graph p4 = sign_flip_extend(Graph(1), 0);
    CHECK(p4 == path(4));
    CHECK(brute_alternating(p4) == 0);
}

TEST_CASE("sign flip negates, keeps decycling numbers and connectivity") {
    std::mt19937_64 rng(89);
    int checked = 0;
    while (checked < 100) {
        Graph g = random_graph(rng, 1 + static_cast<int>(rng() % 8));
        if (!is_connected(g)) continue;
        ++checked;
        const int v = static_cast<int>(rng() % static_cast<std::uint64_t>(g.order()));
        Graph once = sign_flip_extend(g, v);
        Graph twice = sign_flip_extend(once, v);
        const long long base = brute_alternating(g);
        CHECK(brute_alternating(once) == -base);
        CHECK(brute_alternating(twice) == base);
        CHECK(is_connected(once));
        CHECK(phi(once) == phi(g));
        CHECK(phi3(once) == phi3(g));
    }
}

TEST_CASE("doubler examples") {
    Graph d = doubler_attach(cycle(3), 0);
    CHECK(d.order() == 10);
    CHECK(brute_alternating(d) == -4);
    CHECK(phi3(d) == 2);

    Graph k1 = doubler_attach(Graph(1), 0);
    CHECK(brute_alternating(k1) == 0);
    CHECK(phi3(k1) == 1);

    Graph dd = doubler_attach(d, 0);
    CHECK(brute_alternating(dd) == -8);
    CHECK(phi3(dd) == 3);
}

TEST_CASE("doubler gadget splits to zero at its contact") {
    // H: triangle 0 1 2 with pendant path 0 3 4 5, contact 4
    Graph h(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {4, 5}});
    CHECK(brute_alternating(h) == 2);
    Graph without_contact = delete_vertices(h, VertexSet{4});
    CHECK(components(without_contact).size() == 2);
    CHECK(brute_alternating(without_contact) == 0);
}

TEST_CASE("doubler doubles and adds one to both decycling numbers") {
    std::mt19937_64 rng(97);
    int checked = 0;
    while (checked < 60) {
        Graph g = random_graph(rng, 1 + static_cast<int>(rng() % 7));
        if (!is_connected(g)) continue;
        ++checked;
        const int v = static_cast<int>(rng() % static_cast<std::uint64_t>(g.order()));
        Graph d = doubler_attach(g, v);
        CHECK(brute_alternating(d) == 2 * brute_alternating(g));
        CHECK(phi3(d) == phi3(g) + 1);
        CHECK(phi(d) == phi(g) + 1);
        CHECK(is_connected(d));
        CHECK(chordless_cycles(d).chordless_cycles.size() == chordless_cycles(g).chordless_cycles.size() + 1);
    }
}

TEST_CASE("glue triangle examples") {
    Graph c3 = glue_triangle(Graph(1), 0);
    CHECK(c3 == cycle(3));
    CHECK(brute_alternating(c3) == -2);

    Graph k2(2, {{0, 1}});
    CHECK(brute_alternating(glue_triangle(k2, 0)) == -1);
    for (int v = 0; v < 3; ++v) CHECK(brute_alternating(glue_triangle(cycle(3), v)) == 0);
}

TEST_CASE("glue triangle identity") {
    std::mt19937_64 rng(101);
    for (int i = 0; i < 100; ++i) {
        Graph g = random_graph(rng, 1 + static_cast<int>(rng() % 9));
        const int v = static_cast<int>(rng() % static_cast<std::uint64_t>(g.order()));
        CHECK(brute_alternating(glue_triangle(g, v)) ==
              brute_alternating(g) - 2 * brute_alternating(delete_vertices(g, VertexSet{v})));
    }
}

TEST_CASE("pure doubler chain on a triangle is tight") {
    Graph g = cycle(3);
    for (int k = 1; k <= 3; ++k) {
        CHECK(abs(alternating_number(g)) == BigInt(1) << k);
        CHECK(phi3(g) == k);
        g = doubler_attach(g, 0);
    }
}

TEST_CASE("realize examples") {
    auto c3 = realize(1, -2);
    check_realization(1, -2, c3);
    CHECK(c3.graph == cycle(3));

    check_realization(1, 0, realize(1, 0));
    check_realization(2, 3, realize(2, 3));
    check_realization(2, 4, realize(2, 4));
}

TEST_CASE("realize covers every target with k <= 2") {
    for (int k = 1; k <= 2; ++k)
        for (std::int64_t q = -(1 << k); q <= (1 << k); ++q) check_realization(k, q, realize(k, q));
}

TEST_CASE("realize preconditions") {
    CHECK_THROWS_AS(realize(0, 0), PreconditionError);
    CHECK_THROWS_AS(realize(1, 3), PreconditionError);
    CHECK_THROWS_AS(realize(4, 0), PreconditionError);
    RealizeOptions wider;
    wider.density_cap = 4;
    check_realization(4, 11, realize(4, 11, wider));
}

TEST_CASE("recipes replay deterministically and survive JSON") {
    for (auto [k, q] : std::vector<std::pair<int, int>>{{1, 1}, {2, -3}, {3, 7}, {3, -8}}) {
        auto r = realize(k, q);
        CHECK(r.recipe.build() == r.recipe.build());
        auto back = GadgetRecipe::from_json(nlohmann::ordered_json::parse(r.recipe.to_json().dump()));
        CHECK(back.steps == r.recipe.steps);
        CHECK(back.target_k == k);
        CHECK(back.target_q == q);
        CHECK(back.build() == r.graph);
        CHECK(realize(k, q).graph == r.graph);
    }
    CHECK_THROWS(GadgetRecipe::from_json(nlohmann::ordered_json::parse(R"({"steps":[{"op":"spin"}]})")));
}

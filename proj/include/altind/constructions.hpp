#pragma once

#include "altind/decycling.hpp"
#include "altind/graph.hpp"
#include "altind/polynomial.hpp"

#include "json.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace altind {

inline constexpr int kDefaultDensityCap = 3;

enum class Seed { K1, C3, C6, Path };

/// Graph hung off the contact vertex by a two-edge bridge v - m - contact.
struct Gadget {
    enum class Kind {
        Doubler,       // triangle w1 w2 w3, path w1 p1 p2 p3, contact p2
        TriangleTail,  // triangle w1 w2 w3, path w1 t1 .. t_tail, contact t_tail (w1 when tail = 0)
    };
    Kind kind = Kind::Doubler;
    int tail = 0;

    friend bool operator==(const Gadget&, const Gadget&) = default;
};

struct RecipeStep {
    enum class Op { Base, PendantPath, Bridge, GlueTriangle };
    Op op = Op::Base;
    Seed seed = Seed::K1;  // Base
    int length = 0;        // Base with Seed::Path, or PendantPath
    int at = 0;            // attachment vertex for every op but Base
    Gadget gadget;         // Bridge

    friend bool operator==(const RecipeStep&, const RecipeStep&) = default;
};

/// Deterministic build script for a witness graph.
struct GadgetRecipe {
    std::vector<RecipeStep> steps;
    int target_k = 0;
    std::int64_t target_q = 0;

    /// Replays the steps; new vertices always take the next free indices.
    Graph build() const;
    nlohmann::ordered_json to_json() const;
    static GadgetRecipe from_json(const nlohmann::ordered_json& j);
};

Graph seed_graph(Seed seed, int length = 0);
Graph attach_pendant_path(const Graph& g, int v, int length);
/// Pendant path of three new vertices at v; negates I(G;-1).
Graph sign_flip_extend(const Graph& g, int v);
Graph bridge_gadget(const Graph& g, int v, Gadget gadget);
/// Bridges the doubler gadget at v; doubles I(G;-1) and raises phi3 by one.
Graph doubler_attach(const Graph& g, int v);
/// New vertices a, b with edges va, vb, ab.
Graph glue_triangle(const Graph& g, int v);

class RealizationError : public Error {
  public:
    using Error::Error;
};

struct RealizeOptions {
    int density_cap = kDefaultDensityCap;
    /// Longest recipe (base included) explored by the gadget-algebra search.
    int max_steps = 10;
    /// Longest recipe tried by the exhaustive fallback that builds every graph.
    int fallback_steps = 4;
    DecyclingOptions decycling;
};

struct Realization {
    Graph graph;
    GadgetRecipe recipe;
    BigInt alternating;
    int phi3 = 0;
    int phi = 0;
};

/// A connected graph with phi3 = k and I(G;-1) = q. The gadget algebra only
/// proposes recipes; every returned graph has been re-checked with the exact
/// alternating-number and ternary-decycling solvers.
Realization realize(int k, std::int64_t q, const RealizeOptions& opts = {});

}  // namespace altind

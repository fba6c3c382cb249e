#include "altind/constructions.hpp"

#include "altind/indpoly.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <set>
#include <tuple>

namespace altind {
namespace {

Graph grown(const Graph& g, int extra) {
    Graph h(g.order() + extra);
    for (auto [u, v] : g.edges()) h.add_edge(u, v);
    return h;
}

void check_attach(const Graph& g, int v) {
    if (v < 0 || v >= g.order())
        throw RangeError("attachment vertex " + std::to_string(v) + " not in graph of order " + std::to_string(g.order()));
}

int gadget_order(Gadget gd) { return gd.kind == Gadget::Kind::Doubler ? 6 : 3 + gd.tail; }

std::string seed_name(Seed s) {
    switch (s) {
        case Seed::K1: return "K1";
        case Seed::C3: return "C3";
        case Seed::C6: return "C6";
        case Seed::Path: return "P";
    }
    return "?";
}

}  // namespace

Graph seed_graph(Seed seed, int length) {
    switch (seed) {
        case Seed::K1: return Graph(1);
        case Seed::C3: return Graph(3, {{0, 1}, {1, 2}, {0, 2}});
        case Seed::C6: return Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
        case Seed::Path: {
            if (length < 1) throw PreconditionError("path seed needs at least one vertex");
            Graph g(length);
            for (int i = 0; i + 1 < length; ++i) g.add_edge(i, i + 1);
            return g;
        }
    }
    throw PreconditionError("unknown seed");
}

Graph attach_pendant_path(const Graph& g, int v, int length) {
    check_attach(g, v);
    if (length < 1) throw PreconditionError("pendant path length must be positive");
    const int n = g.order();
    Graph h = grown(g, length);
    int prev = v;
    for (int i = 0; i < length; ++i) {
        h.add_edge(prev, n + i);
        prev = n + i;
    }
    return h;
}

Graph sign_flip_extend(const Graph& g, int v) { return attach_pendant_path(g, v, 3); }

// Bridging H at contact u through a new vertex m (v - m - u) and pivoting on m gives
//   I(G') = I(G) I(H) - I(G - v) I(H - u).
// For the doubler, H - p2 = (triangle with pendant p1) + isolated p3, whose
// value is 0, so the bridge multiplies by I(H) = 2. Unit tests re-check this.
Graph bridge_gadget(const Graph& g, int v, Gadget gadget) {
    check_attach(g, v);
    if (gadget.kind == Gadget::Kind::TriangleTail && gadget.tail < 0)
        throw PreconditionError("triangle tail length must be non-negative");
    const int n = g.order();
    const int order = gadget_order(gadget);
    Graph h = grown(g, order + 1);
    const int w1 = n, w2 = n + 1, w3 = n + 2;
    h.add_edge(w1, w2);
    h.add_edge(w2, w3);
    h.add_edge(w1, w3);
    int contact = w1;
    if (gadget.kind == Gadget::Kind::Doubler) {
        const int p1 = n + 3, p2 = n + 4, p3 = n + 5;
        h.add_edge(w1, p1);
        h.add_edge(p1, p2);
        h.add_edge(p2, p3);
        contact = p2;
    } else {
        for (int i = 0; i < gadget.tail; ++i) {
            h.add_edge(contact, n + 3 + i);
            contact = n + 3 + i;
        }
    }
    const int m = n + order;
    h.add_edge(v, m);
    h.add_edge(m, contact);
    return h;
}

Graph doubler_attach(const Graph& g, int v) { return bridge_gadget(g, v, {Gadget::Kind::Doubler, 0}); }

Graph glue_triangle(const Graph& g, int v) {
    check_attach(g, v);
    const int n = g.order();
    Graph h = grown(g, 2);
    h.add_edge(v, n);
    h.add_edge(v, n + 1);
    h.add_edge(n, n + 1);
    return h;
}

Graph GadgetRecipe::build() const {
    if (steps.empty() || steps.front().op != RecipeStep::Op::Base)
        throw PreconditionError("recipe must start with a base step");
    Graph g;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const auto& s = steps[i];
        switch (s.op) {
            case RecipeStep::Op::Base:
                if (i != 0) throw PreconditionError("base step only allowed first");
                g = seed_graph(s.seed, s.length);
                break;
            case RecipeStep::Op::PendantPath: g = attach_pendant_path(g, s.at, s.length); break;
            case RecipeStep::Op::Bridge: g = bridge_gadget(g, s.at, s.gadget); break;
            case RecipeStep::Op::GlueTriangle: g = glue_triangle(g, s.at); break;
        }
    }
    return g;
}

nlohmann::ordered_json GadgetRecipe::to_json() const {
    using nlohmann::ordered_json;
    ordered_json js = ordered_json::array();
    for (const auto& s : steps) {
        ordered_json j;
        switch (s.op) {
            case RecipeStep::Op::Base:
                j["op"] = "base";
                j["graph"] = seed_name(s.seed);
                if (s.seed == Seed::Path) j["length"] = s.length;
                break;
            case RecipeStep::Op::PendantPath:
                j["op"] = "attach_pendant_path";
                j["at"] = s.at;
                j["length"] = s.length;
                break;
            case RecipeStep::Op::Bridge:
                j["op"] = "bridge_gadget";
                j["at"] = s.at;
                j["kind"] = s.gadget.kind == Gadget::Kind::Doubler ? "doubler" : "triangle_tail";
                if (s.gadget.kind == Gadget::Kind::TriangleTail) j["tail"] = s.gadget.tail;
                break;
            case RecipeStep::Op::GlueTriangle:
                j["op"] = "glue_triangle";
                j["at"] = s.at;
                break;
        }
        js.push_back(std::move(j));
    }
    return {{"target", {{"k", target_k}, {"q", target_q}}}, {"steps", std::move(js)}};
}

GadgetRecipe GadgetRecipe::from_json(const nlohmann::ordered_json& j) {
    GadgetRecipe r;
    r.target_k = j.at("target").at("k").get<int>();
    r.target_q = j.at("target").at("q").get<std::int64_t>();
    for (const auto& sj : j.at("steps")) {
        RecipeStep s;
        const auto op = sj.at("op").get<std::string>();
        if (op == "base") {
            s.op = RecipeStep::Op::Base;
            const auto name = sj.at("graph").get<std::string>();
            if (name == "K1") s.seed = Seed::K1;
            else if (name == "C3") s.seed = Seed::C3;
            else if (name == "C6") s.seed = Seed::C6;
            else if (name == "P") {
                s.seed = Seed::Path;
                s.length = sj.at("length").get<int>();
            } else throw PreconditionError("unknown seed graph " + name);
        } else if (op == "attach_pendant_path") {
            s.op = RecipeStep::Op::PendantPath;
            s.at = sj.at("at").get<int>();
            s.length = sj.at("length").get<int>();
        } else if (op == "bridge_gadget") {
            s.op = RecipeStep::Op::Bridge;
            s.at = sj.at("at").get<int>();
            const auto kind = sj.at("kind").get<std::string>();
            if (kind == "doubler") s.gadget = {Gadget::Kind::Doubler, 0};
            else if (kind == "triangle_tail") s.gadget = {Gadget::Kind::TriangleTail, sj.at("tail").get<int>()};
            else throw PreconditionError("unknown gadget kind " + kind);
        } else if (op == "glue_triangle") {
            s.op = RecipeStep::Op::GlueTriangle;
            s.at = sj.at("at").get<int>();
        } else {
            throw PreconditionError("unknown recipe op " + op);
        }
        r.steps.push_back(s);
    }
    return r;
}

namespace {

// Predicted effect of each step on the pair (A, B) = (I(G;-1), I(G - c;-1))
// for the current contact vertex c. These identities are conjectures for the
// search only; realize() re-verifies every graph it returns.
struct AlgebraState {
    std::int64_t a = 0;
    std::int64_t b = 0;
    bool contact_on_cycle = false;
    int k = 0;  // vertex-disjoint triangles so far
    int contact = 0;
    int order = 0;

    auto key() const { return std::tuple(a, b, contact_on_cycle, k); }
};

struct Move {
    RecipeStep::Op op;
    int length = 0;
    Gadget gadget;
};

const std::vector<Move>& moves() {
    static const std::vector<Move> all = [] {
        std::vector<Move> m;
        for (int len = 1; len <= 3; ++len) m.push_back({RecipeStep::Op::PendantPath, len, {}});
        m.push_back({RecipeStep::Op::GlueTriangle, 0, {}});
        m.push_back({RecipeStep::Op::Bridge, 0, {Gadget::Kind::Doubler, 0}});
        for (int t = 0; t <= 5; ++t) m.push_back({RecipeStep::Op::Bridge, 0, {Gadget::Kind::TriangleTail, t}});
        return m;
    }();
    return all;
}

// (I(H;-1), I(H - u;-1)) for a gadget with contact u.
std::pair<std::int64_t, std::int64_t> gadget_pair(Gadget gd) {
    if (gd.kind == Gadget::Kind::Doubler) return {2, 0};
    std::int64_t a = -2, b = -1;  // triangle, contact on it
    for (int i = 0; i < gd.tail; ++i) std::tie(a, b) = std::pair(a - b, a);
    return {a, b};
}

std::optional<AlgebraState> apply(const AlgebraState& s, const Move& mv) {
    AlgebraState t = s;
    switch (mv.op) {
        case RecipeStep::Op::PendantPath:
            // Pivoting on the new leaf: (A, B) -> (A - B, A), contact moves to the leaf.
            for (int i = 0; i < mv.length; ++i) std::tie(t.a, t.b) = std::pair(t.a - t.b, t.a);
            t.contact = s.order + mv.length - 1;
            t.contact_on_cycle = false;
            t.order = s.order + mv.length;
            return t;
        case RecipeStep::Op::GlueTriangle:
            if (s.contact_on_cycle) return std::nullopt;  // triangles must stay vertex-disjoint
            t.a = s.a - 2 * s.b;
            t.b = -s.b;
            t.contact_on_cycle = true;
            t.k = s.k + 1;
            t.order = s.order + 2;
            return t;
        case RecipeStep::Op::Bridge: {
            auto [ha, hb] = gadget_pair(mv.gadget);
            t.a = s.a * ha - s.b * hb;
            t.b = s.b * (ha - hb);
            t.k = s.k + 1;
            t.order = s.order + gadget_order(mv.gadget) + 1;
            return t;
        }
        case RecipeStep::Op::Base: break;
    }
    return std::nullopt;
}

RecipeStep to_step(const Move& mv, int at) {
    RecipeStep s;
    s.op = mv.op;
    s.length = mv.length;
    s.gadget = mv.gadget;
    s.at = at;
    return s;
}

struct Seeded {
    RecipeStep step;
    AlgebraState state;
};

std::vector<Seeded> seeds() {
    RecipeStep base;
    base.op = RecipeStep::Op::Base;
    std::vector<Seeded> out;
    base.seed = Seed::K1;
    out.push_back({base, {0, 1, false, 0, 0, 1}});
    base.seed = Seed::C3;
    out.push_back({base, {-2, -1, true, 1, 0, 3}});
    base.seed = Seed::C6;
    out.push_back({base, {2, 1, true, 1, 0, 6}});
    return out;
}

struct Node {
    AlgebraState state;
    RecipeStep step;
    int parent = -1;
    int depth = 1;
};

GadgetRecipe recipe_of(const std::vector<Node>& nodes, int i, int k, std::int64_t q) {
    GadgetRecipe r;
    r.target_k = k;
    r.target_q = q;
    for (; i >= 0; i = nodes[static_cast<std::size_t>(i)].parent) r.steps.push_back(nodes[static_cast<std::size_t>(i)].step);
    std::reverse(r.steps.begin(), r.steps.end());
    return r;
}

// Breadth-first over algebra states, moves in fixed order, so the first
// recipe reaching a state is the shortest and lexicographically first.
std::vector<GadgetRecipe> algebraic_candidates(int k, std::int64_t q, const RealizeOptions& opts) {
    std::vector<Node> nodes;
    std::set<decltype(AlgebraState{}.key())> seen;
    for (const auto& s : seeds()) {
        if (s.state.k > k || !seen.insert(s.state.key()).second) continue;
        nodes.push_back({s.state, s.step, -1, 1});
    }
    std::vector<GadgetRecipe> found;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const Node cur = nodes[i];
        if (cur.state.k == k && cur.state.a == q) found.push_back(recipe_of(nodes, static_cast<int>(i), k, q));
        if (cur.depth >= opts.max_steps) continue;
        for (const auto& mv : moves()) {
            auto next = apply(cur.state, mv);
            if (!next || next->k > k || next->order > kGraph6DefaultCap) continue;
            if (!seen.insert(next->key()).second) continue;
            nodes.push_back({*next, to_step(mv, cur.state.contact), static_cast<int>(i), cur.depth + 1});
        }
    }
    return found;
}

std::optional<Realization> check(const GadgetRecipe& recipe, int k, std::int64_t q, const RealizeOptions& opts) {
    Graph g = recipe.build();
    if (g.order() > kGraph6DefaultCap || !is_connected(g)) return std::nullopt;
    BigInt alt = alternating_number(g, opts.decycling.indpoly);
    if (alt != q) return std::nullopt;
    auto phi3 = min_ternary_decycling(g, opts.decycling);
    if (phi3.size != k) return std::nullopt;
    auto phi = min_decycling(g, opts.decycling);
    return Realization{std::move(g), recipe, std::move(alt), phi3.size, phi.size};
}

// Exhaustive fallback: every recipe up to `fallback_steps`, attaching at any
// vertex, each built and measured by the exact solvers.
std::optional<Realization> exhaustive(int k, std::int64_t q, const RealizeOptions& opts) {
    std::vector<GadgetRecipe> frontier;
    for (const auto& s : seeds()) frontier.push_back({{s.step}, k, q});
    for (int depth = 1; depth <= opts.fallback_steps && !frontier.empty(); ++depth) {
        std::vector<GadgetRecipe> next;
        for (const auto& r : frontier) {
            if (auto hit = check(r, k, q, opts)) return hit;
            if (depth == opts.fallback_steps) continue;
            const int order = r.build().order();
            for (int v = 0; v < order; ++v) {
                for (const auto& mv : moves()) {
                    GadgetRecipe ext = r;
                    ext.steps.push_back(to_step(mv, v));
                    next.push_back(std::move(ext));
                }
            }
        }
        frontier = std::move(next);
    }
    return std::nullopt;
}

}  // namespace

Realization realize(int k, std::int64_t q, const RealizeOptions& opts) {
    if (k < 1) throw PreconditionError("k must be positive");
    if (k > opts.density_cap)
        throw PreconditionError("k = " + std::to_string(k) + " exceeds density cap " + std::to_string(opts.density_cap));
    if (k >= 62 || std::llabs(q) > (std::int64_t{1} << k))
        throw PreconditionError("|q| = " + std::to_string(std::llabs(q)) + " exceeds 2^k for k = " + std::to_string(k));

    for (const auto& recipe : algebraic_candidates(k, q, opts))
        if (auto hit = check(recipe, k, q, opts)) return std::move(*hit);
    if (auto hit = exhaustive(k, q, opts)) return std::move(*hit);
    throw RealizationError("no verified witness found for k = " + std::to_string(k) + ", q = " + std::to_string(q));
}

}  // namespace altind

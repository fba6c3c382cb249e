#include "altind/indpoly.hpp"

#include <array>
#include <bit>
#include <limits>
#include <unordered_map>

namespace altind {
namespace {

struct Overflow {};

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
}

std::int64_t checked_neg(std::int64_t a) {
    if (a == std::numeric_limits<std::int64_t>::min()) throw Overflow{};
    return -a;
}

// Each algebra fixes what "x" is: a formal variable, -1, or 1.

struct PolynomialAlgebra {
    using Value = Polynomial;
    static Value one() { return Polynomial::one(); }
    static Value edgeless(int m) { return Polynomial::one_plus_x_pow(m); }
    static Value add(const Value& a, const Value& b) { return a + b; }
    static Value mul(const Value& a, const Value& b) { return a * b; }
    static Value times_x(const Value& a) { return a.shifted(); }
};

template <class T>
struct AtMinusOne {
    using Value = T;
    static Value one() { return 1; }
    // (1 + x)^m at x = -1
    static Value edgeless(int m) { return m == 0 ? 1 : 0; }
    static Value add(const Value& a, const Value& b) {
        if constexpr (std::is_same_v<T, std::int64_t>) return checked_add(a, b);
        else return a + b;
    }
    static Value mul(const Value& a, const Value& b) {
        if constexpr (std::is_same_v<T, std::int64_t>) return checked_mul(a, b);
        else return a * b;
    }
    static Value times_x(const Value& a) {
        if constexpr (std::is_same_v<T, std::int64_t>) return checked_neg(a);
        else return -a;
    }
};

template <class T>
struct AtOne {
    using Value = T;
    static Value one() { return 1; }
    static Value edgeless(int m) {
        if constexpr (std::is_same_v<T, std::int64_t>) {
            if (m >= 63) throw Overflow{};
            return std::int64_t{1} << m;
        } else {
            return BigInt(1) << m;
        }
    }
    static Value add(const Value& a, const Value& b) {
        if constexpr (std::is_same_v<T, std::int64_t>) return checked_add(a, b);
        else return a + b;
    }
    static Value mul(const Value& a, const Value& b) {
        if constexpr (std::is_same_v<T, std::int64_t>) return checked_mul(a, b);
        else return a * b;
    }
    static Value times_x(const Value& a) { return a; }
};

template <class Algebra>
class Engine {
  public:
    using Value = typename Algebra::Value;

    Engine(const Graph& g, const IndPolyOptions& opts) : g_(g), opts_(opts) {}

    Value solve(Mask mask) {
        if (mask == 0) return Algebra::one();
        if (edge_count(g_, mask) == 0) return Algebra::edgeless(std::popcount(mask));
        auto parts = component_masks(g_, mask);
        if (parts.size() == 1) return solve_connected(mask);
        Value acc = Algebra::one();
        for (Mask c : parts) acc = Algebra::mul(acc, solve_connected(c));
        return acc;
    }

  private:
    Value solve_connected(Mask c) {
        const int order = std::popcount(c);
        if (order == 1) return Algebra::edgeless(1);
        if (auto it = memo_.find(c); it != memo_.end()) return it->second;
        if (++expansions_ > opts_.max_expansions)
            throw BudgetExceeded("instance too large: node-expansion budget of " + std::to_string(opts_.max_expansions) +
                                 " exhausted");

        Value result;
        if (edge_count(g_, c) == order - 1) {
            result = tree(c);
        } else {
            const int v = pivot(c);
            Value without = solve(c & ~bit(v));
            Value with = solve(c & ~(g_.row(v) | bit(v)));
            result = Algebra::add(without, Algebra::times_x(with));
        }
        memo_.emplace(c, result);
        return result;
    }

    // Highest degree among vertices on a cycle, lowest index on ties.
    int pivot(Mask c) const {
        const Mask candidates = cycle_vertices(g_, c);
        int best = -1;
        int best_degree = -1;
        for (int v : VertexSet(candidates)) {
            int d = std::popcount(g_.row(v) & c);
            if (d > best_degree) {
                best = v;
                best_degree = d;
            }
        }
        return best;
    }

    // Connected tree on `c`: excluded/included values per vertex, leaves up.
    Value tree(Mask c) const {
        std::array<int, kMaxVertices> order{};
        std::array<int, kMaxVertices> parent{};
        const int root = std::countr_zero(c);
        int head = 0, tail = 0;
        order[static_cast<std::size_t>(tail++)] = root;
        parent[static_cast<std::size_t>(root)] = -1;
        Mask seen = bit(root);
        while (head < tail) {
            int v = order[static_cast<std::size_t>(head++)];
            for (int u : VertexSet(g_.row(v) & c & ~seen)) {
                seen |= bit(u);
                parent[static_cast<std::size_t>(u)] = v;
                order[static_cast<std::size_t>(tail++)] = u;
            }
        }

        std::array<Value, kMaxVertices> out;
        std::array<Value, kMaxVertices> in;
        for (int i = 0; i < tail; ++i) {
            auto v = static_cast<std::size_t>(order[static_cast<std::size_t>(i)]);
            out[v] = Algebra::one();
            in[v] = Algebra::one();
        }
        for (int i = tail - 1; i >= 0; --i) {
            auto v = static_cast<std::size_t>(order[static_cast<std::size_t>(i)]);
            in[v] = Algebra::times_x(in[v]);
            if (i == 0) break;
            auto p = static_cast<std::size_t>(parent[v]);
            out[p] = Algebra::mul(out[p], Algebra::add(in[v], out[v]));
            in[p] = Algebra::mul(in[p], out[v]);
        }
        auto r = static_cast<std::size_t>(root);
        return Algebra::add(in[r], out[r]);
    }

    const Graph& g_;
    IndPolyOptions opts_;
    std::unordered_map<Mask, Value> memo_;
    std::uint64_t expansions_ = 0;
};

template <template <class> class Algebra>
BigInt evaluate_scalar(const Graph& g, const IndPolyOptions& opts) {
    const Mask all = g.vertices().mask();
    try {
        Engine<Algebra<std::int64_t>> fast(g, opts);
        return fast.solve(all);
    } catch (const Overflow&) {
        Engine<Algebra<BigInt>> exact(g, opts);
        return exact.solve(all);
    }
}

}  // namespace

IndependencePolynomial independence_polynomial(const Graph& g, const IndPolyOptions& opts) {
    Engine<PolynomialAlgebra> engine(g, opts);
    return engine.solve(g.vertices().mask());
}

BigInt alternating_number(const Graph& g, const IndPolyOptions& opts) { return evaluate_scalar<AtMinusOne>(g, opts); }

BigInt independent_set_count(const Graph& g, const IndPolyOptions& opts) { return evaluate_scalar<AtOne>(g, opts); }

int independence_number(const Graph& g, const IndPolyOptions& opts) { return independence_polynomial(g, opts).degree(); }

IndependencePolynomial oracle_polynomial(const Graph& g, int cap) {
    const int n = g.order();
    if (n > cap || n >= 63)
        throw PreconditionError("oracle refuses graph of order " + std::to_string(n) + " (cap " + std::to_string(cap) + ")");
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(n) + 1);
    const Mask limit = Mask{1} << n;
    for (Mask s = 0; s < limit; ++s) {
        bool independent = true;
        for (int v = 0; v < n && independent; ++v)
            if (((s >> v) & 1) && (g.row(v) & s)) independent = false;
        if (independent) ++counts[static_cast<std::size_t>(std::popcount(s))];
    }
    return Polynomial(std::vector<BigInt>(counts.begin(), counts.end()));
}

}  // namespace altind

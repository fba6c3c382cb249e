#pragma once

// Brute-force reference implementations used only by the tests. None of them
// call into the solvers they are checking.

#include "altind/graph.hpp"
#include "altind/polynomial.hpp"

#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace altind::testing {

inline Graph cycle(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

inline Graph path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.order() + b.order());
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    for (auto [u, v] : b.edges()) g.add_edge(a.order() + u, a.order() + v);
    return g;
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

/// Edge-density drawn per graph so sparse and dense cases both appear.
inline Graph random_graph(std::mt19937_64& rng, int n) {
    std::uniform_real_distribution<double> density(0.1, 0.8);
    return random_graph(rng, n, density(rng));
}

inline bool subset_independent(const Graph& g, Mask s) {
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (((s >> u) & 1) && ((s >> v) & 1) && g.adjacent(u, v)) return false;
    return true;
}

/// Coefficients i_0..i_n by checking every vertex pair of every subset.
inline std::vector<long long> brute_coefficients(const Graph& g) {
    std::vector<long long> c(static_cast<std::size_t>(g.order()) + 1, 0);
    for (Mask s = 0; s < (Mask{1} << g.order()); ++s)
        if (subset_independent(g, s)) ++c[static_cast<std::size_t>(std::popcount(s))];
    while (c.size() > 1 && c.back() == 0) c.pop_back();
    return c;
}

inline long long brute_alternating(const Graph& g) {
    long long even = 0, odd = 0;
    for (Mask s = 0; s < (Mask{1} << g.order()); ++s)
        if (subset_independent(g, s)) (std::popcount(s) % 2 ? odd : even) += 1;
    return even - odd;
}

inline long long brute_count(const Graph& g) {
    long long total = 0;
    for (Mask s = 0; s < (Mask{1} << g.order()); ++s) total += subset_independent(g, s);
    return total;
}

/// Union-find forest test.
inline bool brute_acyclic(const Graph& g, Mask deleted = 0) {
    std::vector<int> parent(static_cast<std::size_t>(g.order()));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
        return x;
    };
    for (auto [u, v] : g.edges()) {
        if (((deleted >> u) & 1) || ((deleted >> v) & 1)) continue;
        int a = find(u), b = find(v);
        if (a == b) return false;
        parent[static_cast<std::size_t>(a)] = b;
    }
    return true;
}

/// Subsets S with g[S] connected and 2-regular, i.e. vertex sets of chordless cycles.
inline std::vector<Mask> brute_chordless_census(const Graph& g) {
    std::vector<Mask> out;
    for (Mask s = 1; s < (Mask{1} << g.order()); ++s) {
        if (std::popcount(s) < 3) continue;
        bool two_regular = true;
        for (int v : VertexSet(s))
            if (std::popcount(g.row(v) & s) != 2) two_regular = false;
        if (!two_regular) continue;
        // connected: flood from the lowest vertex
        Mask seen = s & (~s + 1), frontier = seen;
        while (frontier) {
            Mask next = 0;
            for (int v : VertexSet(frontier)) next |= g.row(v) & s;
            frontier = next & ~seen;
            seen |= next;
        }
        if (seen == s) out.push_back(s);
    }
    return out;
}

inline bool brute_ternary(const Graph& g, Mask deleted = 0) {
    for (Mask c : brute_chordless_census(g))
        if ((c & deleted) == 0 && std::popcount(c) % 3 == 0) return false;
    return true;
}

/// Lengths L for which some simple cycle of length L exists (Held-Karp over subsets).
inline std::vector<bool> brute_cycle_lengths(const Graph& g) {
    const int n = g.order();
    std::vector<bool> lengths(static_cast<std::size_t>(n) + 1, false);
    // reach[mask][v]: a path from lowest(mask) through exactly `mask`, ending at v
    const Mask full = Mask{1} << n;
    std::vector<Mask> ends(full, 0);
    for (int v = 0; v < n; ++v) ends[bit(v)] = bit(v);
    for (Mask m = 1; m < full; ++m) {
        if (!ends[m]) continue;
        const int start = std::countr_zero(m);
        for (int v : VertexSet(ends[m])) {
            if (std::popcount(m) >= 3 && g.adjacent(v, start)) lengths[static_cast<std::size_t>(std::popcount(m))] = true;
            for (int w : VertexSet(g.row(v) & ~m)) {
                if (w < start) continue;
                ends[m | bit(w)] |= bit(w);
            }
        }
    }
    return lengths;
}

/// Smallest deletion set by plain subset enumeration, increasing size then lexicographic.
template <class Feasible>
std::pair<int, Mask> brute_min_deletion(const Graph& g, Feasible feasible) {
    for (int k = 0; k <= g.order(); ++k) {
        std::vector<Mask> of_size;
        for (Mask s = 0; s < (Mask{1} << g.order()); ++s)
            if (std::popcount(s) == k && feasible(s)) of_size.push_back(s);
        if (of_size.empty()) continue;
        Mask best = of_size.front();
        for (Mask s : of_size)
            if (size_lex_less(VertexSet(s), VertexSet(best))) best = s;
        return {k, best};
    }
    return {-1, 0};
}

/// f(n) = f(n-1) - f(n-2), f(0) = 1, f(1) = 0: the leaf-pivot recurrence for I(P_n;-1).
inline long long path_alternating(int n) {
    long long prev = 1, cur = 0;
    if (n == 0) return prev;
    for (int i = 2; i <= n; ++i) {
        long long next = cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

}  // namespace altind::testing

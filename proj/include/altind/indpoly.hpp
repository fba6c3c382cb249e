#pragma once

#include "altind/graph.hpp"
#include "altind/polynomial.hpp"

#include <cstdint>

namespace altind {

inline constexpr std::uint64_t kDefaultExpansionBudget = 100'000'000;
inline constexpr int kOracleCap = 25;

struct IndPolyOptions {
    /// Connected subproblems solved without a memo hit before giving up.
    std::uint64_t max_expansions = kDefaultExpansionBudget;
};

/// I(G;x): coefficient k counts the independent sets of size k.
using IndependencePolynomial = Polynomial;

/// Exact I(G;x) via I(G) = I(G-v) + x I(G-N[v]), factoring over connected
/// components, memoized on the surviving vertex mask of each component.
/// Forest components are finished with a tree DP.
IndependencePolynomial independence_polynomial(const Graph& g, const IndPolyOptions& opts = {});

/// I(G;-1), the number of even independent sets minus the number of odd ones.
/// Evaluated directly with the signed recurrence rather than through the polynomial.
BigInt alternating_number(const Graph& g, const IndPolyOptions& opts = {});

/// I(G;1), the total number of independent sets (the empty set included).
BigInt independent_set_count(const Graph& g, const IndPolyOptions& opts = {});

/// alpha(G), the degree of I(G;x).
int independence_number(const Graph& g, const IndPolyOptions& opts = {});

/// Definition-level reference: tests every one of the 2^n vertex subsets.
/// Refuses graphs with more than `cap` vertices.
IndependencePolynomial oracle_polynomial(const Graph& g, int cap = kOracleCap);

}  // namespace altind

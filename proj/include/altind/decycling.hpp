#pragma once

#include "altind/cycles.hpp"
#include "altind/graph.hpp"
#include "altind/indpoly.hpp"
#include "altind/polynomial.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace altind {

inline constexpr std::uint64_t kDefaultSubsetCap = 100'000'000;
inline constexpr std::size_t kDefaultMinimalSetCap = 1'000'000;

struct DecyclingOptions {
    CycleOptions cycles;
    IndPolyOptions indpoly;
    /// Candidate subsets (or search nodes) examined before BudgetExceeded.
    std::uint64_t subset_cap = kDefaultSubsetCap;
    /// Inclusion-minimal ternary decycling sets listed before truncation.
    std::size_t minimal_set_cap = kDefaultMinimalSetCap;
};

/// Optimum of a vertex-deletion problem. The witness is the lexicographically
/// smallest optimal set, in vertex indices of the graph passed in.
struct DeletionSolution {
    int size = 0;
    VertexSet witness;
};

struct MinimalSets {
    /// Ordered by size, then lexicographically.
    std::vector<VertexSet> sets;
    bool truncated = false;
};

struct MiddleBound {
    /// min |Ind(G[D])| over ternary decycling sets D.
    BigInt value;
    VertexSet witness;
};

struct DecyclingResult {
    DeletionSolution phi;
    DeletionSolution phi3;
    int nu = 0;
    MiddleBound middle;
};

/// e(G) - n(G) + q(G)
int cyclomatic_number(const Graph& g);

/// Smallest S with G - S acyclic.
DeletionSolution min_decycling(const Graph& g, const DecyclingOptions& opts = {});

/// Smallest D with G - D ternary.
DeletionSolution min_ternary_decycling(const Graph& g, const DecyclingOptions& opts = {});

/// Every inclusion-minimal D with G - D ternary, up to `opts.minimal_set_cap`.
MinimalSets minimal_ternary_decycling_sets(const Graph& g, const DecyclingOptions& opts = {});

/// Minimum of |Ind(G[D])| over all ternary decycling sets D. Adding vertices
/// to D never shrinks Ind(G[D]), so only inclusion-minimal sets are scanned.
MiddleBound middle_bound(const Graph& g, const DecyclingOptions& opts = {});

DecyclingResult analyze_decycling(const Graph& g, const DecyclingOptions& opts = {});

}  // namespace altind

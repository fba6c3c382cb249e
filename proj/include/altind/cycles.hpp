#pragma once

#include "altind/graph.hpp"
#include "altind/indpoly.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace altind {

inline constexpr std::size_t kDefaultCycleCap = 1'000'000;

struct CycleOptions {
    /// Maximum number of cycles a listing returns before it reports truncation.
    std::size_t cycle_cap = kDefaultCycleCap;
    /// DFS nodes visited before a search gives up with BudgetExceeded.
    std::uint64_t max_expansions = kDefaultExpansionBudget;
};

/// Census of the chordless cycles of a graph.
struct CycleReport {
    /// Each cycle in input labels, starting at its smallest label and heading
    /// toward the smaller of that vertex's two cycle neighbours.
    std::vector<std::vector<int>> chordless_cycles;
    /// Some listed cycle has length divisible by 3.
    bool has_induced_3tilde = false;
    /// Some cycle (chords allowed) has length not divisible by 3; empty when
    /// the search ran out of budget.
    std::optional<bool> has_cycle_len_not_div3;
    bool truncated = false;
};

/// Called with each chordless cycle as a vertex sequence (graph indices);
/// return false to stop the enumeration.
using CycleVisitor = std::function<bool(std::span<const int>)>;

/// Visits every chordless cycle of g[within] once, in canonical orientation.
/// Returns false if the visitor stopped early.
bool for_each_chordless_cycle(const Graph& g, Mask within, const CycleVisitor& visit,
                              std::uint64_t max_expansions = kDefaultExpansionBudget);

CycleReport chordless_cycles(const Graph& g, const CycleOptions& opts = {});

/// No chordless cycle has length divisible by 3.
bool is_ternary(const Graph& g, const CycleOptions& opts = {});

/// Some simple cycle (not necessarily induced) has length not divisible by 3.
bool has_cycle_length_not_div3(const Graph& g, const CycleOptions& opts = {});

/// Vertex masks of the chordless cycles of g, optionally only those whose
/// length is divisible by 3. Throws BudgetExceeded past `opts.cycle_cap`.
std::vector<Mask> chordless_cycle_masks(const Graph& g, bool only_div3, const CycleOptions& opts = {});

}  // namespace altind

#pragma once

#include "altind/bounds.hpp"
#include "altind/constructions.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace altind {

inline constexpr int kMaxEnumerateOrder = 6;

struct RunConfig {
    std::string subcommand;
    std::string input = "-";
    OutputFormat format = OutputFormat::JsonLines;
    std::uint64_t budget_expansions = kDefaultExpansionBudget;
    std::size_t cycle_cap = kDefaultCycleCap;
    std::uint64_t subset_cap = kDefaultSubsetCap;
    int density_k = kDefaultDensityCap;
    bool strict = false;
    bool fail_fast = false;
    unsigned jobs = 1;

    // generate
    int k = 0;
    std::optional<std::int64_t> q;
    bool all = false;
    bool graph6_only = false;
    std::string recipe_dir;

    // enumerate
    int n = 0;

    DecyclingOptions decycling_options() const;
};

/// All labeled graphs on n vertices ordered by edge mask; bit i of the mask
/// is the i-th vertex pair in graph6 order (0,1), (0,2), (1,2), (0,3), ...
Graph graph_from_edge_mask(int n, std::uint64_t mask);

int cmd_analyze(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err);
int cmd_generate(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_enumerate(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_oracle(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches; `in` stands in for standard input.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace altind

#pragma once

#include "altind/decycling.hpp"
#include "altind/graph.hpp"
#include "altind/polynomial.hpp"

#include "json.hpp"

#include <array>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace altind {

/// The inequalities checked for every graph, in report order.
enum class Bound {
    TernaryUnit,        // ternary G: |I(G;-1)| <= 1
    Decycling,          // |I(G;-1)| <= 2^phi
    Cyclomatic,         // some cycle length not divisible by 3: |I(G;-1)| <= 2^nu - nu
    ChainMiddle,        // |I(G;-1)| <= min_D |Ind(G[D])|
    ChainUpper,         // min_D |Ind(G[D])| <= 2^phi3
    TernaryDecycling,   // |I(G;-1)| <= 2^phi3
};

inline constexpr std::array<Bound, 6> kAllBounds = {Bound::TernaryUnit,      Bound::Decycling,
                                                    Bound::Cyclomatic,       Bound::ChainMiddle,
                                                    Bound::ChainUpper,       Bound::TernaryDecycling};

std::string_view bound_name(Bound b);

enum class CheckState { NotApplicable, Satisfied, Violated, NotEvaluated };

std::string_view state_name(CheckState s);

struct CheckRecord {
    Bound bound_id = Bound::TernaryUnit;
    CheckState state = CheckState::NotEvaluated;
    BigInt lhs;
    BigInt bound;
    /// bound - lhs; meaningful only when evaluated and applicable.
    BigInt slack;
    /// Why the check was not evaluated or not applicable.
    std::string reason;

    bool applicable() const { return state == CheckState::Satisfied || state == CheckState::Violated; }
    bool tight() const { return state == CheckState::Satisfied && slack == 0; }
};

struct BoundsReport {
    std::size_t index = 0;  // position in the stream, 0-based
    std::size_t line = 0;   // source line, 1-based; 0 when not read from a stream
    std::string graph6;
    int n = 0;
    int e = 0;

    std::optional<BigInt> alternating;
    std::optional<bool> ternary;
    std::optional<bool> cycle_len_not_div3;
    std::optional<int> nu;
    std::optional<DeletionSolution> phi;
    std::optional<DeletionSolution> phi3;
    std::optional<MiddleBound> middle;

    std::array<CheckRecord, kAllBounds.size()> checks;

    const CheckRecord& check(Bound b) const { return checks[static_cast<std::size_t>(b)]; }
    bool has_violation() const;
    bool has_unevaluated() const;
};

struct VerifyOptions {
    DecyclingOptions decycling;
};

BoundsReport verify_graph(const Graph& g, const VerifyOptions& opts = {});

enum class OutputFormat { JsonLines, Csv };

struct CorpusOptions {
    VerifyOptions verify;
    OutputFormat format = OutputFormat::JsonLines;
    unsigned jobs = 1;
    bool fail_fast = false;
    bool strict = false;
    int graph6_cap = kGraph6DefaultCap;
};

struct CheckTally {
    std::size_t satisfied = 0;
    std::size_t violated = 0;
    std::size_t tight = 0;
    std::size_t not_applicable = 0;
    std::size_t not_evaluated = 0;

    std::size_t applicable() const { return satisfied + violated; }
};

struct CorpusSummary {
    std::size_t graphs = 0;
    std::size_t parse_errors = 0;
    /// Witness re-verification failures and similar bugs; these fail like violations.
    std::size_t internal_errors = 0;
    std::array<CheckTally, kAllBounds.size()> tallies{};
    /// One entry per violated check: "line L graph6 G: name lhs > bound".
    std::vector<std::string> violations;
    std::vector<std::string> errors;

    const CheckTally& tally(Bound b) const { return tallies[static_cast<std::size_t>(b)]; }
    void add(const BoundsReport& r);
    std::size_t not_evaluated() const;
};

/// 0 all satisfied, 1 violation, 2 input error, 3 unevaluated check under --strict.
int exit_code(const CorpusSummary& s, bool strict);

/// Reads graph6 lines, verifies each graph (in parallel when jobs > 1) and
/// writes one record per graph in input order, followed by the summary.
CorpusSummary verify_corpus(std::istream& in, std::ostream& out, const CorpusOptions& opts = {});

/// Exact integers as JSON numbers when they fit 64 bits, decimal strings otherwise.
nlohmann::ordered_json json_integer(const BigInt& v);
nlohmann::ordered_json report_to_json(const BoundsReport& r);
nlohmann::ordered_json summary_to_json(const CorpusSummary& s);
std::string csv_header();
std::string report_to_csv(const BoundsReport& r);

}  // namespace altind

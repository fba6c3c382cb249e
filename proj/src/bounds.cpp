#include "altind/bounds.hpp"

#include "altind/cycles.hpp"
#include "altind/indpoly.hpp"
#include "altind/parallel.hpp"

#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace altind {

std::string_view bound_name(Bound b) {
    switch (b) {
        case Bound::TernaryUnit: return "ternary_unit";
        case Bound::Decycling: return "decycling";
        case Bound::Cyclomatic: return "cyclomatic";
        case Bound::ChainMiddle: return "chain_middle";
        case Bound::ChainUpper: return "chain_upper";
        case Bound::TernaryDecycling: return "ternary_decycling";
    }
    return "?";
}

std::string_view state_name(CheckState s) {
    switch (s) {
        case CheckState::NotApplicable: return "not_applicable";
        case CheckState::Satisfied: return "satisfied";
        case CheckState::Violated: return "violated";
        case CheckState::NotEvaluated: return "not_evaluated";
    }
    return "?";
}

bool BoundsReport::has_violation() const {
    for (const auto& c : checks)
        if (c.state == CheckState::Violated) return true;
    return false;
}

bool BoundsReport::has_unevaluated() const {
    for (const auto& c : checks)
        if (c.state == CheckState::NotEvaluated) return true;
    return false;
}

namespace {

BigInt pow2(int k) { return BigInt(1) << k; }

CheckRecord compare(Bound id, const BigInt& lhs, const BigInt& bound) {
    CheckRecord c;
    c.bound_id = id;
    c.lhs = lhs;
    c.bound = bound;
    c.slack = bound - lhs;
    c.state = lhs <= bound ? CheckState::Satisfied : CheckState::Violated;
    return c;
}

CheckRecord skipped(Bound id, CheckState state, std::string reason) {
    CheckRecord c;
    c.bound_id = id;
    c.state = state;
    c.reason = std::move(reason);
    return c;
}

template <class F>
auto attempt(F&& f, std::string& error) -> std::optional<decltype(f())> {
    try {
        return f();
    } catch (const BudgetExceeded& ex) {
        error = ex.what();
        return std::nullopt;
    }
}

}  // namespace

BoundsReport verify_graph(const Graph& g, const VerifyOptions& opts) {
    const auto& dopts = opts.decycling;
    BoundsReport r;
    r.graph6 = g.order() <= kGraph6DefaultCap ? to_graph6(g) : std::string();
    r.n = g.order();
    r.e = g.size();
    r.nu = cyclomatic_number(g);

    std::string alt_err, ternary_err, cyc_err, phi_err, phi3_err, middle_err;
    r.alternating = attempt([&] { return alternating_number(g, dopts.indpoly); }, alt_err);
    r.ternary = attempt([&] { return is_ternary(g, dopts.cycles); }, ternary_err);
    r.cycle_len_not_div3 = attempt([&] { return has_cycle_length_not_div3(g, dopts.cycles); }, cyc_err);
    r.phi = attempt([&] { return min_decycling(g, dopts); }, phi_err);
    r.phi3 = attempt([&] { return min_ternary_decycling(g, dopts); }, phi3_err);
    r.middle = attempt([&] { return middle_bound(g, dopts); }, middle_err);

    // Report witnesses in input labels.
    if (r.phi) r.phi->witness = g.to_labels(r.phi->witness);
    if (r.phi3) r.phi3->witness = g.to_labels(r.phi3->witness);
    if (r.middle) r.middle->witness = g.to_labels(r.middle->witness);

    auto set = [&](Bound b, CheckRecord c) { r.checks[static_cast<std::size_t>(b)] = std::move(c); };

    // Link 2 of the chain does not involve I(G;-1).
    if (r.middle && r.phi3) set(Bound::ChainUpper, compare(Bound::ChainUpper, r.middle->value, pow2(r.phi3->size)));
    else set(Bound::ChainUpper, skipped(Bound::ChainUpper, CheckState::NotEvaluated, middle_err.empty() ? phi3_err : middle_err));

    if (!r.alternating) {
        for (Bound b : kAllBounds)
            if (b != Bound::ChainUpper) set(b, skipped(b, CheckState::NotEvaluated, alt_err));
        return r;
    }
    const BigInt magnitude = abs(*r.alternating);

    if (!r.ternary) set(Bound::TernaryUnit, skipped(Bound::TernaryUnit, CheckState::NotEvaluated, ternary_err));
    else if (!*r.ternary) set(Bound::TernaryUnit, skipped(Bound::TernaryUnit, CheckState::NotApplicable, "graph has an induced cycle of length divisible by 3"));
    else set(Bound::TernaryUnit, compare(Bound::TernaryUnit, magnitude, 1));

    if (r.phi) set(Bound::Decycling, compare(Bound::Decycling, magnitude, pow2(r.phi->size)));
    else set(Bound::Decycling, skipped(Bound::Decycling, CheckState::NotEvaluated, phi_err));

    if (!r.cycle_len_not_div3) set(Bound::Cyclomatic, skipped(Bound::Cyclomatic, CheckState::NotEvaluated, cyc_err));
    else if (!*r.cycle_len_not_div3) set(Bound::Cyclomatic, skipped(Bound::Cyclomatic, CheckState::NotApplicable, "no cycle has length not divisible by 3"));
    else set(Bound::Cyclomatic, compare(Bound::Cyclomatic, magnitude, pow2(*r.nu) - *r.nu));

    if (r.middle) set(Bound::ChainMiddle, compare(Bound::ChainMiddle, magnitude, r.middle->value));
    else set(Bound::ChainMiddle, skipped(Bound::ChainMiddle, CheckState::NotEvaluated, middle_err));

    if (r.phi3) set(Bound::TernaryDecycling, compare(Bound::TernaryDecycling, magnitude, pow2(r.phi3->size)));
    else set(Bound::TernaryDecycling, skipped(Bound::TernaryDecycling, CheckState::NotEvaluated, phi3_err));

    return r;
}

void CorpusSummary::add(const BoundsReport& r) {
    ++graphs;
    for (const auto& c : r.checks) {
        auto& t = tallies[static_cast<std::size_t>(c.bound_id)];
        switch (c.state) {
            case CheckState::Satisfied:
                ++t.satisfied;
                if (c.tight()) ++t.tight;
                break;
            case CheckState::Violated:
                ++t.violated;
                violations.push_back("line " + std::to_string(r.line) + " graph6 " + r.graph6 + ": " +
                                     std::string(bound_name(c.bound_id)) + " " + c.lhs.str() + " > " + c.bound.str());
                break;
            case CheckState::NotApplicable: ++t.not_applicable; break;
            case CheckState::NotEvaluated: ++t.not_evaluated; break;
        }
    }
}

std::size_t CorpusSummary::not_evaluated() const {
    std::size_t total = 0;
    for (const auto& t : tallies) total += t.not_evaluated;
    return total;
}

int exit_code(const CorpusSummary& s, bool strict) {
    if (s.parse_errors > 0) return 2;
    if (!s.violations.empty() || s.internal_errors > 0) return 1;
    if (strict && s.not_evaluated() > 0) return 3;
    return 0;
}

nlohmann::ordered_json json_integer(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

namespace {

nlohmann::ordered_json labels_json(VertexSet s) { return s.members(); }

}  // namespace

nlohmann::ordered_json report_to_json(const BoundsReport& r) {
    using nlohmann::ordered_json;
    ordered_json j;
    j["index"] = r.index;
    j["line"] = r.line;
    j["graph6"] = r.graph6;
    j["n"] = r.n;
    j["e"] = r.e;
    j["alternating"] = r.alternating ? json_integer(*r.alternating) : ordered_json();
    j["ternary"] = r.ternary ? ordered_json(*r.ternary) : ordered_json();
    j["cycle_len_not_div3"] = r.cycle_len_not_div3 ? ordered_json(*r.cycle_len_not_div3) : ordered_json();
    j["nu"] = r.nu ? ordered_json(*r.nu) : ordered_json();
    j["phi"] = r.phi ? ordered_json(r.phi->size) : ordered_json();
    j["phi_witness"] = r.phi ? labels_json(r.phi->witness) : ordered_json();
    j["phi3"] = r.phi3 ? ordered_json(r.phi3->size) : ordered_json();
    j["phi3_witness"] = r.phi3 ? labels_json(r.phi3->witness) : ordered_json();
    j["middle_bound"] = r.middle ? json_integer(r.middle->value) : ordered_json();
    j["middle_witness"] = r.middle ? labels_json(r.middle->witness) : ordered_json();
    ordered_json checks = ordered_json::object();
    for (const auto& c : r.checks) {
        ordered_json cj;
        cj["status"] = state_name(c.state);
        if (c.applicable()) {
            cj["lhs"] = json_integer(c.lhs);
            cj["bound"] = json_integer(c.bound);
            cj["slack"] = json_integer(c.slack);
        } else if (!c.reason.empty()) {
            cj["reason"] = c.reason;
        }
        checks[std::string(bound_name(c.bound_id))] = std::move(cj);
    }
    j["checks"] = std::move(checks);
    return j;
}

nlohmann::ordered_json summary_to_json(const CorpusSummary& s) {
    using nlohmann::ordered_json;
    ordered_json j;
    j["graphs"] = s.graphs;
    j["parse_errors"] = s.parse_errors;
    j["internal_errors"] = s.internal_errors;
    ordered_json checks = ordered_json::object();
    for (Bound b : kAllBounds) {
        const auto& t = s.tally(b);
        checks[std::string(bound_name(b))] = {{"applicable", t.applicable()},    {"satisfied", t.satisfied},
                                              {"violated", t.violated},          {"tight", t.tight},
                                              {"not_applicable", t.not_applicable}, {"not_evaluated", t.not_evaluated}};
    }
    j["checks"] = std::move(checks);
    j["violations"] = s.violations;
    j["errors"] = s.errors;
    return {{"summary", std::move(j)}};
}

std::string csv_header() {
    std::string h = "index,line,graph6,n,e,alternating,ternary,cycle_len_not_div3,nu,phi,phi3,middle_bound";
    for (Bound b : kAllBounds) {
        auto name = std::string(bound_name(b));
        h += "," + name + "_status," + name + "_slack";
    }
    return h;
}

std::string report_to_csv(const BoundsReport& r) {
    std::ostringstream row;
    auto opt_bool = [](const std::optional<bool>& b) { return b ? (*b ? "true" : "false") : ""; };
    row << r.index << ',' << r.line << ',' << r.graph6 << ',' << r.n << ',' << r.e << ','
        << (r.alternating ? r.alternating->str() : "") << ',' << opt_bool(r.ternary) << ','
        << opt_bool(r.cycle_len_not_div3) << ',' << (r.nu ? std::to_string(*r.nu) : "") << ','
        << (r.phi ? std::to_string(r.phi->size) : "") << ',' << (r.phi3 ? std::to_string(r.phi3->size) : "") << ','
        << (r.middle ? r.middle->value.str() : "");
    for (const auto& c : r.checks) row << ',' << state_name(c.state) << ',' << (c.applicable() ? c.slack.str() : "");
    return row.str();
}

namespace {

constexpr std::size_t kBatchSize = 1024;

struct Item {
    std::size_t line = 0;
    std::optional<Graph> graph;
    std::string error;
    bool internal = false;
    BoundsReport report;
};

void run_batch(std::vector<Item>& batch, const VerifyOptions& opts, unsigned jobs) {
    parallel_for(batch.size(), jobs, [&](std::size_t i) {
        if (!batch[i].graph) return;
        try {
            batch[i].report = verify_graph(*batch[i].graph, opts);
        } catch (const std::exception& ex) {
            batch[i].error = std::string("internal error: ") + ex.what();
            batch[i].internal = true;
        }
    });
}

std::string csv_escape(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

CorpusSummary verify_corpus(std::istream& in, std::ostream& out, const CorpusOptions& opts) {
    CorpusSummary summary;
    const bool csv = opts.format == OutputFormat::Csv;
    if (csv) out << csv_header() << '\n';

    std::size_t line_no = 0;
    std::size_t index = 0;
    bool stop = false;
    std::string text;
    while (!stop) {
        std::vector<Item> batch;
        while (batch.size() < kBatchSize && std::getline(in, text)) {
            ++line_no;
            if (!text.empty() && text.back() == '\r') text.pop_back();
            if (text.empty()) continue;
            Item item;
            item.line = line_no;
            try {
                item.graph = parse_graph6(text, opts.graph6_cap);
            } catch (const Error& ex) {
                item.error = ex.what();
            }
            batch.push_back(std::move(item));
        }
        if (batch.empty()) break;
        run_batch(batch, opts.verify, opts.jobs);

        for (auto& item : batch) {
            if (!item.graph || item.internal) {
                if (item.internal) ++summary.internal_errors;
                else ++summary.parse_errors;
                std::string msg = "line " + std::to_string(item.line) + ": " + item.error;
                summary.errors.push_back(msg);
                if (csv) out << "# error," << csv_escape(msg) << '\n';
                else out << nlohmann::ordered_json{{"line", item.line}, {"error", item.error}}.dump() << '\n';
                if (opts.fail_fast) {
                    stop = true;
                    break;
                }
                continue;
            }
            item.report.index = index++;
            item.report.line = item.line;
            summary.add(item.report);
            if (csv) out << report_to_csv(item.report) << '\n';
            else out << report_to_json(item.report).dump() << '\n';
            if (opts.fail_fast && item.report.has_violation()) {
                stop = true;
                break;
            }
        }
    }

    if (csv) {
        out << "# graphs," << summary.graphs << '\n' << "# parse_errors," << summary.parse_errors << '\n'
            << "# internal_errors," << summary.internal_errors << '\n';
        for (Bound b : kAllBounds) {
            const auto& t = summary.tally(b);
            out << "# " << bound_name(b) << ",applicable=" << t.applicable() << ",satisfied=" << t.satisfied
                << ",violated=" << t.violated << ",tight=" << t.tight << ",not_applicable=" << t.not_applicable
                << ",not_evaluated=" << t.not_evaluated << '\n';
        }
        for (const auto& v : summary.violations) out << "# violation," << csv_escape(v) << '\n';
    } else {
        out << summary_to_json(summary).dump() << '\n';
    }
    return summary;
}

}  // namespace altind

#include "altind/cli.hpp"

#include "altind/cycles.hpp"
#include "altind/decycling.hpp"
#include "altind/indpoly.hpp"
#include "altind/parallel.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace altind {

DecyclingOptions RunConfig::decycling_options() const {
    DecyclingOptions o;
    o.indpoly.max_expansions = budget_expansions;
    o.cycles.max_expansions = budget_expansions;
    o.cycles.cycle_cap = cycle_cap;
    o.subset_cap = subset_cap;
    return o;
}

Graph graph_from_edge_mask(int n, std::uint64_t mask) {
    Graph g(n);
    int bit_index = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit_index)
            if ((mask >> bit_index) & 1) g.add_edge(u, v);
    return g;
}

namespace {

constexpr std::size_t kBatchSize = 1024;

std::string join(const std::vector<int>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(xs[i]);
    }
    return s;
}

nlohmann::ordered_json poly_json(const Polynomial& p) {
    auto j = nlohmann::ordered_json::array();
    for (const auto& c : p.coefficients()) j.push_back(json_integer(c));
    return j;
}

struct StreamItem {
    std::size_t line = 0;
    std::optional<Graph> graph;
    std::string parse_error;
};

/// Reads graph6 lines in batches; `handle` gets each parsed batch and emits
/// its records in order. Returns the number of parse errors.
template <class Handle>
std::size_t for_each_batch(std::istream& in, Handle&& handle) {
    std::size_t line_no = 0;
    std::size_t errors = 0;
    std::string text;
    while (true) {
        std::vector<StreamItem> batch;
        while (batch.size() < kBatchSize && std::getline(in, text)) {
            ++line_no;
            if (!text.empty() && text.back() == '\r') text.pop_back();
            if (text.empty()) continue;
            StreamItem item;
            item.line = line_no;
            try {
                item.graph = parse_graph6(text);
            } catch (const Error& ex) {
                item.parse_error = ex.what();
                ++errors;
            }
            batch.push_back(std::move(item));
        }
        if (batch.empty()) break;
        if (!handle(batch)) break;
    }
    return errors;
}

void write_error(std::ostream& out, OutputFormat fmt, std::size_t line, const std::string& msg) {
    if (fmt == OutputFormat::Csv) out << "# error,line " << line << ": " << msg << '\n';
    else out << nlohmann::ordered_json{{"line", line}, {"error", msg}}.dump() << '\n';
}

struct AnalyzeRecord {
    nlohmann::ordered_json json;
    std::vector<std::string> csv;
    bool unevaluated = false;
};

AnalyzeRecord analyze_one(const Graph& g, std::size_t index, std::size_t line, const RunConfig& cfg) {
    using nlohmann::ordered_json;
    const auto opts = cfg.decycling_options();
    AnalyzeRecord rec;
    std::vector<std::string> errors;
    auto guard = [&](auto&& f) -> std::optional<decltype(f())> {
        try {
            return f();
        } catch (const BudgetExceeded& ex) {
            errors.emplace_back(ex.what());
            rec.unevaluated = true;
            return std::nullopt;
        }
    };
    auto poly = guard([&] { return independence_polynomial(g, opts.indpoly); });
    auto alt = guard([&] { return alternating_number(g, opts.indpoly); });
    auto count = guard([&] { return independent_set_count(g, opts.indpoly); });
    auto ternary = guard([&] { return is_ternary(g, opts.cycles); });
    auto phi = guard([&] { return min_decycling(g, opts); });
    auto phi3 = guard([&] { return min_ternary_decycling(g, opts); });
    auto middle = guard([&] { return middle_bound(g, opts); });

    auto big = [](const std::optional<BigInt>& v) { return v ? json_integer(*v) : ordered_json(); };
    auto witness = [&](VertexSet s) { return g.to_labels(s).members(); };

    auto& j = rec.json;
    j["index"] = index;
    j["line"] = line;
    j["graph6"] = to_graph6(g);
    j["n"] = g.order();
    j["e"] = g.size();
    j["q"] = components(g).size();
    j["nu"] = cyclomatic_number(g);
    j["phi"] = phi ? ordered_json(phi->size) : ordered_json();
    j["phi_witness"] = phi ? ordered_json(witness(phi->witness)) : ordered_json();
    j["phi3"] = phi3 ? ordered_json(phi3->size) : ordered_json();
    j["phi3_witness"] = phi3 ? ordered_json(witness(phi3->witness)) : ordered_json();
    j["alternating"] = big(alt);
    j["independent_sets"] = big(count);
    j["polynomial"] = poly ? poly_json(*poly) : ordered_json();
    j["ternary"] = ternary ? ordered_json(*ternary) : ordered_json();
    j["middle_bound"] = middle ? json_integer(middle->value) : ordered_json();
    j["middle_witness"] = middle ? ordered_json(witness(middle->witness)) : ordered_json();
    if (!errors.empty()) j["errors"] = errors;

    auto str = [](const auto& opt, auto&& f) { return opt ? f(*opt) : std::string(); };
    rec.csv = {std::to_string(index),
               std::to_string(line),
               to_graph6(g),
               std::to_string(g.order()),
               std::to_string(g.size()),
               std::to_string(components(g).size()),
               std::to_string(cyclomatic_number(g)),
               str(phi, [](const DeletionSolution& s) { return std::to_string(s.size); }),
               str(phi, [&](const DeletionSolution& s) { return join(witness(s.witness)); }),
               str(phi3, [](const DeletionSolution& s) { return std::to_string(s.size); }),
               str(phi3, [&](const DeletionSolution& s) { return join(witness(s.witness)); }),
               str(alt, [](const BigInt& v) { return v.str(); }),
               str(count, [](const BigInt& v) { return v.str(); }),
               str(ternary, [](bool t) { return std::string(t ? "true" : "false"); }),
               str(middle, [](const MiddleBound& m) { return m.value.str(); }),
               str(middle, [&](const MiddleBound& m) { return join(witness(m.witness)); })};
    return rec;
}

constexpr const char* kAnalyzeCsvHeader =
    "index,line,graph6,n,e,q,nu,phi,phi_witness,phi3,phi3_witness,alternating,independent_sets,ternary,middle_bound,"
    "middle_witness";

struct InputStream {
    std::ifstream file;
    std::istream* stream = nullptr;
};

bool open_input(const RunConfig& cfg, std::istream& stdin_stream, InputStream& holder, std::ostream& err) {
    if (cfg.input.empty() || cfg.input == "-") {
        holder.stream = &stdin_stream;
        return true;
    }
    holder.file.open(cfg.input);
    if (!holder.file) {
        err << "altind: cannot open input " << cfg.input << '\n';
        return false;
    }
    holder.stream = &holder.file;
    return true;
}

}  // namespace

int cmd_analyze(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
    const bool csv = cfg.format == OutputFormat::Csv;
    if (csv) out << kAnalyzeCsvHeader << '\n';
    std::size_t index = 0;
    bool unevaluated = false;
    bool failed = false;
    const std::size_t parse_errors = for_each_batch(in, [&](std::vector<StreamItem>& batch) {
        std::vector<AnalyzeRecord> records(batch.size());
        std::vector<std::size_t> indices(batch.size());
        for (std::size_t i = 0; i < batch.size(); ++i)
            if (batch[i].graph) indices[i] = index++;
        parallel_for(batch.size(), cfg.jobs, [&](std::size_t i) {
            if (batch[i].graph) records[i] = analyze_one(*batch[i].graph, indices[i], batch[i].line, cfg);
        });
        for (std::size_t i = 0; i < batch.size(); ++i) {
            if (!batch[i].graph) {
                write_error(out, cfg.format, batch[i].line, batch[i].parse_error);
                err << "altind: line " << batch[i].line << ": " << batch[i].parse_error << '\n';
                if (cfg.fail_fast) {
                    failed = true;
                    return false;
                }
                continue;
            }
            unevaluated = unevaluated || records[i].unevaluated;
            if (csv) {
                std::string row;
                for (std::size_t c = 0; c < records[i].csv.size(); ++c) row += (c ? "," : "") + records[i].csv[c];
                out << row << '\n';
            } else {
                out << records[i].json.dump() << '\n';
            }
        }
        return true;
    });
    if (parse_errors > 0 || failed) return 2;
    if (cfg.strict && unevaluated) return 3;
    return 0;
}

int cmd_verify(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
    CorpusOptions opts;
    opts.verify.decycling = cfg.decycling_options();
    opts.format = cfg.format;
    opts.jobs = cfg.jobs;
    opts.fail_fast = cfg.fail_fast;
    opts.strict = cfg.strict;
    const auto summary = verify_corpus(in, out, opts);
    for (const auto& e : summary.errors) err << "altind: " << e << '\n';
    for (const auto& v : summary.violations) err << "altind: VIOLATION " << v << '\n';
    return exit_code(summary, cfg.strict);
}

int cmd_generate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    RealizeOptions ropts;
    ropts.density_cap = cfg.density_k;
    ropts.decycling = cfg.decycling_options();

    if (cfg.k < 1) {
        err << "altind: generate needs k >= 1\n";
        return 2;
    }
    if (cfg.k > cfg.density_k) {
        err << "altind: k = " << cfg.k << " exceeds --density-k " << cfg.density_k << '\n';
        return 2;
    }
    const std::int64_t limit = std::int64_t{1} << cfg.k;
    std::vector<std::int64_t> targets;
    if (cfg.all) {
        for (std::int64_t q = -limit; q <= limit; ++q) targets.push_back(q);
    } else if (cfg.q) {
        if (*cfg.q < -limit || *cfg.q > limit) {
            err << "altind: |q| = " << (*cfg.q < 0 ? -*cfg.q : *cfg.q) << " exceeds 2^k = " << limit << '\n';
            return 2;
        }
        targets.push_back(*cfg.q);
    } else {
        err << "altind: generate needs --q or --all\n";
        return 2;
    }

    std::vector<std::optional<Realization>> results(targets.size());
    std::vector<std::string> failures(targets.size());
    parallel_for(targets.size(), cfg.jobs, [&](std::size_t i) {
        try {
            results[i] = realize(cfg.k, targets[i], ropts);
        } catch (const Error& ex) {
            failures[i] = ex.what();
        }
    });

    if (!cfg.recipe_dir.empty()) std::filesystem::create_directories(cfg.recipe_dir);
    int status = 0;
    if (cfg.format == OutputFormat::Csv && !cfg.graph6_only) out << "k,q,graph6,n,e,alternating,phi3,phi\n";
    for (std::size_t i = 0; i < targets.size(); ++i) {
        if (!results[i]) {
            err << "altind: realization failed for k = " << cfg.k << ", q = " << targets[i] << ": " << failures[i] << '\n';
            status = 1;
            continue;
        }
        const auto& r = *results[i];
        const auto g6 = to_graph6(r.graph);
        nlohmann::ordered_json j;
        j["k"] = cfg.k;
        j["q"] = targets[i];
        j["graph6"] = g6;
        j["n"] = r.graph.order();
        j["e"] = r.graph.size();
        j["alternating"] = json_integer(r.alternating);
        j["phi3"] = r.phi3;
        j["phi"] = r.phi;
        j["recipe"] = r.recipe.to_json();
        if (!cfg.recipe_dir.empty()) {
            std::ofstream side(std::filesystem::path(cfg.recipe_dir) /
                               ("k" + std::to_string(cfg.k) + "_q" + std::to_string(targets[i]) + ".json"));
            auto recipe = r.recipe.to_json();
            recipe["graph6"] = g6;
            side << recipe.dump(2) << '\n';
        }
        if (cfg.graph6_only) out << g6 << '\n';
        else if (cfg.format == OutputFormat::Csv)
            out << cfg.k << ',' << targets[i] << ',' << g6 << ',' << r.graph.order() << ',' << r.graph.size() << ','
                << r.alternating.str() << ',' << r.phi3 << ',' << r.phi << '\n';
        else out << j.dump() << '\n';
    }
    return status;
}

int cmd_enumerate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.n < 0 || cfg.n > kMaxEnumerateOrder) {
        err << "altind: enumerate supports 0 <= n <= " << kMaxEnumerateOrder << " (2^(n(n-1)/2) graphs)\n";
        return 2;
    }
    const int pairs = cfg.n * (cfg.n - 1) / 2;
    const std::uint64_t count = std::uint64_t{1} << pairs;
    for (std::uint64_t mask = 0; mask < count; ++mask) out << to_graph6(graph_from_edge_mask(cfg.n, mask)) << '\n';
    return 0;
}

int cmd_oracle(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
    const bool csv = cfg.format == OutputFormat::Csv;
    if (csv) out << "index,line,graph6,n,agree,polynomial,oracle\n";
    std::size_t index = 0;
    bool mismatch = false;
    bool refused = false;
    IndPolyOptions iopts;
    iopts.max_expansions = cfg.budget_expansions;
    const std::size_t parse_errors = for_each_batch(in, [&](std::vector<StreamItem>& batch) {
        struct Row {
            std::optional<Polynomial> engine, oracle;
            std::string error;
        };
        std::vector<Row> rows(batch.size());
        parallel_for(batch.size(), cfg.jobs, [&](std::size_t i) {
            if (!batch[i].graph) return;
            try {
                rows[i].oracle = oracle_polynomial(*batch[i].graph);
                rows[i].engine = independence_polynomial(*batch[i].graph, iopts);
            } catch (const Error& ex) {
                rows[i].error = ex.what();
            }
        });
        for (std::size_t i = 0; i < batch.size(); ++i) {
            if (!batch[i].graph || !rows[i].error.empty()) {
                const auto& msg = batch[i].graph ? rows[i].error : batch[i].parse_error;
                if (batch[i].graph) refused = true;
                write_error(out, cfg.format, batch[i].line, msg);
                err << "altind: line " << batch[i].line << ": " << msg << '\n';
                continue;
            }
            const auto& g = *batch[i].graph;
            const bool agree = *rows[i].engine == *rows[i].oracle;
            mismatch = mismatch || !agree;
            if (!agree) err << "altind: MISMATCH line " << batch[i].line << ' ' << to_graph6(g) << '\n';
            if (csv) {
                out << index << ',' << batch[i].line << ',' << to_graph6(g) << ',' << g.order() << ','
                    << (agree ? "true" : "false") << ",\"" << rows[i].engine->to_string() << "\",\""
                    << rows[i].oracle->to_string() << "\"\n";
            } else {
                nlohmann::ordered_json j;
                j["index"] = index;
                j["line"] = batch[i].line;
                j["graph6"] = to_graph6(g);
                j["n"] = g.order();
                j["agree"] = agree;
                j["polynomial"] = poly_json(*rows[i].engine);
                j["oracle"] = poly_json(*rows[i].oracle);
                out << j.dump() << '\n';
            }
            ++index;
        }
        return true;
    });
    if (parse_errors > 0 || refused) return 2;
    return mismatch ? 1 : 0;
}

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    const unsigned hw = std::thread::hardware_concurrency();
    cfg.jobs = hw == 0 ? 1 : hw;
    std::string format = "json";

    CLI::App app{"Independence polynomial, alternating number and decycling bounds for small graphs"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--input", cfg.input, "graph6 input file, '-' for stdin")->capture_default_str();
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    app.add_option("--budget-expansions", cfg.budget_expansions, "search nodes per solver before giving up")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--cycle-cap", cfg.cycle_cap, "chordless cycles listed before giving up")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--subset-cap", cfg.subset_cap, "candidate deletion sets examined before giving up")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--density-k", cfg.density_k, "largest k accepted by generate")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_flag("--strict", cfg.strict, "exit 3 when any check could not be evaluated");
    app.add_flag("--fail-fast", cfg.fail_fast, "stop at the first violation or input error");
    app.add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();

    auto* analyze = app.add_subcommand("analyze", "per-graph invariants");
    auto* verify = app.add_subcommand("verify", "check every bound on a graph6 corpus");
    auto* generate = app.add_subcommand("generate", "connected witnesses with phi3 = k and I(G;-1) = q");
    generate->add_option("-k,--k", cfg.k, "ternary decycling number")->required();
    auto* q_opt = generate->add_option("-q,--q", cfg.q, "target alternating number");
    auto* all_opt = generate->add_flag("--all", cfg.all, "every q with |q| <= 2^k");
    q_opt->excludes(all_opt);
    generate->add_flag("--graph6", cfg.graph6_only, "print bare graph6 lines");
    generate->add_option("--recipe-dir", cfg.recipe_dir, "write one JSON recipe per target into this directory");
    auto* enumerate = app.add_subcommand("enumerate", "all labeled graphs on n vertices");
    enumerate->add_option("n", cfg.n, "number of vertices")->required();
    auto* oracle = app.add_subcommand("oracle", "compare the recurrence against subset enumeration");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "altind: " << e.what() << '\n';
        return 2;
    }
    cfg.format = format == "csv" ? OutputFormat::Csv : OutputFormat::JsonLines;

    try {
        if (*generate) return cmd_generate(cfg, out, err);
        if (*enumerate) return cmd_enumerate(cfg, out, err);

        InputStream input;
        if (!open_input(cfg, in, input, err)) return 2;
        if (*analyze) return cmd_analyze(cfg, *input.stream, out, err);
        if (*verify) return cmd_verify(cfg, *input.stream, out, err);
        if (*oracle) return cmd_oracle(cfg, *input.stream, out, err);
    } catch (const BudgetExceeded& ex) {
        err << "altind: " << ex.what() << '\n';
        return 3;
    } catch (const Error& ex) {
        err << "altind: " << ex.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace altind

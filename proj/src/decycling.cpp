#include "altind/decycling.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace altind {
namespace {

// A set hits every chordless cycle of a family iff deleting it destroys all of
// them, and any cycle of G - D would contain a chordless one. So both deletion
// problems reduce to hitting sets over chordless-cycle vertex masks.
bool hits_all(Mask d, const std::vector<Mask>& cycles) {
    return std::all_of(cycles.begin(), cycles.end(), [d](Mask c) { return (c & d) != 0; });
}

Mask union_of(const std::vector<Mask>& cycles) {
    Mask u = 0;
    for (Mask c : cycles) u |= c;
    return u;
}

// Increasing size, lexicographic within a size: the first hit is the
// lexicographically smallest optimum.
DeletionSolution min_hitting_set(const std::vector<Mask>& cycles, std::uint64_t subset_cap) {
    if (cycles.empty()) return {};
    const std::vector<int> cand = VertexSet(union_of(cycles)).members();
    const int m = static_cast<int>(cand.size());
    std::uint64_t examined = 0;
    std::vector<int> idx;
    for (int k = 1; k <= m; ++k) {
        idx.resize(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
        while (true) {
            if (++examined > subset_cap)
                throw BudgetExceeded("subset enumeration exceeded " + std::to_string(subset_cap) + " candidates");
            Mask d = 0;
            for (int i : idx) d |= bit(cand[static_cast<std::size_t>(i)]);
            if (hits_all(d, cycles)) return {k, VertexSet(d)};
            int i = k - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - k + i) --i;
            if (i < 0) break;
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j) - 1] + 1;
        }
    }
    throw std::logic_error("no hitting set among cycle vertices");
}

// Enumerates minimal transversals by branching on the first unhit cycle: the
// i-th branch takes its i-th free vertex and forbids the earlier ones, so the
// branches partition the search and each minimal set is reached once.
class MinimalTransversals {
  public:
    MinimalTransversals(const std::vector<Mask>& cycles, std::uint64_t node_cap, std::size_t set_cap)
        : cycles_(cycles), node_cap_(node_cap), set_cap_(set_cap) {}

    MinimalSets run() {
        branch(0, 0);
        std::sort(out_.sets.begin(), out_.sets.end(), size_lex_less);
        return std::move(out_);
    }

  private:
    bool every_member_private(Mask chosen) const {
        Mask with_private = 0;
        for (Mask c : cycles_) {
            Mask hit = c & chosen;
            if (std::has_single_bit(hit)) with_private |= hit;
        }
        return with_private == chosen;
    }

    void branch(Mask chosen, Mask forbidden) {
        if (out_.truncated) return;
        if (++nodes_ > node_cap_)
            throw BudgetExceeded("minimal decycling-set search exceeded " + std::to_string(node_cap_) + " nodes");
        if (!every_member_private(chosen)) return;
        auto unhit = std::find_if(cycles_.begin(), cycles_.end(), [chosen](Mask c) { return (c & chosen) == 0; });
        if (unhit == cycles_.end()) {
            if (out_.sets.size() >= set_cap_) {
                out_.truncated = true;
                return;
            }
            out_.sets.emplace_back(chosen);
            return;
        }
        Mask excluded = forbidden;
        for (int v : VertexSet(*unhit & ~forbidden)) {
            branch(chosen | bit(v), excluded);
            excluded |= bit(v);
        }
    }

    const std::vector<Mask>& cycles_;
    std::uint64_t node_cap_;
    std::size_t set_cap_;
    std::uint64_t nodes_ = 0;
    MinimalSets out_;
};

void check_witness(bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("witness failed re-verification: ") + what);
}

DeletionSolution solve_phi(const Graph& g, const std::vector<Mask>& all_cycles, const DecyclingOptions& opts) {
    auto sol = min_hitting_set(all_cycles, opts.subset_cap);
    check_witness(is_acyclic(delete_vertices(g, sol.witness)), "graph minus decycling set is not a forest");
    return sol;
}

DeletionSolution solve_phi3(const Graph& g, const std::vector<Mask>& div3_cycles, const DecyclingOptions& opts) {
    auto sol = min_hitting_set(div3_cycles, opts.subset_cap);
    check_witness(is_ternary(delete_vertices(g, sol.witness), opts.cycles),
                  "graph minus ternary decycling set is not ternary");
    return sol;
}

MinimalSets solve_minimal(const Graph& g, const std::vector<Mask>& div3_cycles, const DecyclingOptions& opts) {
    MinimalTransversals search(div3_cycles, opts.subset_cap, opts.minimal_set_cap);
    auto result = search.run();
    for (VertexSet d : result.sets)
        check_witness(is_ternary(delete_vertices(g, d), opts.cycles), "listed minimal set is not ternary decycling");
    return result;
}

MiddleBound solve_middle(const Graph& g, const MinimalSets& minimal, const DecyclingOptions& opts) {
    if (minimal.truncated)
        throw BudgetExceeded("minimal ternary decycling sets truncated at " + std::to_string(opts.minimal_set_cap) +
                             "; middle bound undetermined");
    MiddleBound best;
    bool first = true;
    for (VertexSet d : minimal.sets) {
        BigInt count = independent_set_count(induced_subgraph(g, d), opts.indpoly);
        if (first || count < best.value) {
            best = {std::move(count), d};
            first = false;
        }
    }
    if (first) throw std::logic_error("no minimal ternary decycling set");
    return best;
}

}  // namespace

int cyclomatic_number(const Graph& g) {
    return g.size() - g.order() + static_cast<int>(components(g).size());
}

DeletionSolution min_decycling(const Graph& g, const DecyclingOptions& opts) {
    return solve_phi(g, chordless_cycle_masks(g, false, opts.cycles), opts);
}

DeletionSolution min_ternary_decycling(const Graph& g, const DecyclingOptions& opts) {
    return solve_phi3(g, chordless_cycle_masks(g, true, opts.cycles), opts);
}

MinimalSets minimal_ternary_decycling_sets(const Graph& g, const DecyclingOptions& opts) {
    return solve_minimal(g, chordless_cycle_masks(g, true, opts.cycles), opts);
}

MiddleBound middle_bound(const Graph& g, const DecyclingOptions& opts) {
    return solve_middle(g, minimal_ternary_decycling_sets(g, opts), opts);
}

DecyclingResult analyze_decycling(const Graph& g, const DecyclingOptions& opts) {
    const auto all_cycles = chordless_cycle_masks(g, false, opts.cycles);
    std::vector<Mask> div3;
    std::copy_if(all_cycles.begin(), all_cycles.end(), std::back_inserter(div3),
                 [](Mask c) { return std::popcount(c) % 3 == 0; });

    DecyclingResult r;
    r.nu = cyclomatic_number(g);
    r.phi = solve_phi(g, all_cycles, opts);
    r.phi3 = solve_phi3(g, div3, opts);
    r.middle = solve_middle(g, solve_minimal(g, div3, opts), opts);
    return r;
}

}  // namespace altind

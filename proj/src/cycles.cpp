#include "altind/cycles.hpp"

#include <array>
#include <bit>

namespace altind {
namespace {

class ChordlessSearch {
  public:
    ChordlessSearch(const Graph& g, const CycleVisitor& visit, std::uint64_t budget)
        : g_(g), visit_(visit), budget_(budget) {}

    bool run(Mask within) {
        for (int s : VertexSet(within)) {
            const Mask above = within & ~low_mask(s + 1);
            path_[0] = s;
            for (int first : VertexSet(g_.row(s) & above)) {
                path_[1] = first;
                // Everything outside g[within] above s, plus the path itself, is off limits.
                const Mask blocked = ~above | bit(first);
                if (!extend(s, 2, blocked)) return false;
            }
        }
        return true;
    }

  private:
    // path_[0..len) is an induced path starting at s. `blocked` holds the path,
    // every neighbour of an interior vertex, and everything outside the search range.
    bool extend(int s, int len, Mask blocked) {
        if (++expansions_ > budget_)
            throw BudgetExceeded("chordless-cycle search exceeded " + std::to_string(budget_) + " expansions");
        const int last = path_[static_cast<std::size_t>(len - 1)];
        const Mask start_nbrs = g_.row(s);
        for (int w : VertexSet(g_.row(last) & ~blocked)) {
            if (start_nbrs & bit(w)) {
                if (path_[1] < w) {
                    path_[static_cast<std::size_t>(len)] = w;
                    if (!visit_(std::span<const int>(path_.data(), static_cast<std::size_t>(len + 1)))) return false;
                }
                continue;
            }
            path_[static_cast<std::size_t>(len)] = w;
            // `last` becomes interior: its neighbours can no longer join the path.
            const Mask next_blocked = blocked | bit(w) | g_.row(last);
            if (!extend(s, len + 1, next_blocked)) return false;
        }
        return true;
    }

    const Graph& g_;
    const CycleVisitor& visit_;
    std::uint64_t budget_;
    std::uint64_t expansions_ = 0;
    std::array<int, kMaxVertices + 1> path_{};
};

class SimpleCycleSearch {
  public:
    SimpleCycleSearch(const Graph& g, std::uint64_t budget) : g_(g), budget_(budget) {}

    // First simple cycle whose length is not a multiple of 3.
    bool find(Mask within) {
        for (int s : VertexSet(within)) {
            const Mask above = within & ~low_mask(s + 1);
            if (dfs(s, s, 1, bit(s), above)) return true;
        }
        return false;
    }

  private:
    bool dfs(int s, int last, int len, Mask on_path, Mask allowed) {
        if (++expansions_ > budget_)
            throw BudgetExceeded("simple-cycle search exceeded " + std::to_string(budget_) + " expansions");
        const Mask nbrs = g_.row(last);
        if (len >= 3 && (nbrs & bit(s)) && len % 3 != 0) return true;
        for (int w : VertexSet(nbrs & allowed & ~on_path))
            if (dfs(s, w, len + 1, on_path | bit(w), allowed)) return true;
        return false;
    }

    const Graph& g_;
    std::uint64_t budget_;
    std::uint64_t expansions_ = 0;
};

}  // namespace

bool for_each_chordless_cycle(const Graph& g, Mask within, const CycleVisitor& visit, std::uint64_t max_expansions) {
    ChordlessSearch search(g, visit, max_expansions);
    return search.run(within & g.vertices().mask());
}

CycleReport chordless_cycles(const Graph& g, const CycleOptions& opts) {
    CycleReport report;
    bool short_len = false;
    for_each_chordless_cycle(
        g, g.vertices().mask(),
        [&](std::span<const int> cycle) {
            if (report.chordless_cycles.size() >= opts.cycle_cap) {
                report.truncated = true;
                return false;
            }
            std::vector<int> labelled;
            labelled.reserve(cycle.size());
            for (int v : cycle) labelled.push_back(g.label(v));
            report.chordless_cycles.push_back(std::move(labelled));
            if (cycle.size() % 3 == 0) report.has_induced_3tilde = true;
            else short_len = true;
            return true;
        },
        opts.max_expansions);

    if (short_len) {
        report.has_cycle_len_not_div3 = true;
    } else {
        try {
            report.has_cycle_len_not_div3 = has_cycle_length_not_div3(g, opts);
        } catch (const BudgetExceeded&) {
            report.has_cycle_len_not_div3.reset();
        }
    }
    return report;
}

bool is_ternary(const Graph& g, const CycleOptions& opts) {
    if (g.order() <= 2) return true;
    return for_each_chordless_cycle(
        g, g.vertices().mask(), [](std::span<const int> cycle) { return cycle.size() % 3 != 0; },
        opts.max_expansions);
}

bool has_cycle_length_not_div3(const Graph& g, const CycleOptions& opts) {
    const Mask on_cycles = cycle_vertices(g, g.vertices().mask());
    if (on_cycles == 0) return false;
    SimpleCycleSearch search(g, opts.max_expansions);
    return search.find(on_cycles);
}

std::vector<Mask> chordless_cycle_masks(const Graph& g, bool only_div3, const CycleOptions& opts) {
    std::vector<Mask> out;
    for_each_chordless_cycle(
        g, g.vertices().mask(),
        [&](std::span<const int> cycle) {
            if (only_div3 && cycle.size() % 3 != 0) return true;
            if (out.size() >= opts.cycle_cap)
                throw BudgetExceeded("more than " + std::to_string(opts.cycle_cap) + " chordless cycles");
            Mask m = 0;
            for (int v : cycle) m |= bit(v);
            out.push_back(m);
            return true;
        },
        opts.max_expansions);
    return out;
}

}  // namespace altind

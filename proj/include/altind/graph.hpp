#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace altind {

using Mask = std::uint64_t;

/// Hard limit of the bitset representation (one machine word per row).
inline constexpr int kMaxVertices = 64;
/// Largest order graph6 encodes with a single length byte.
inline constexpr int kGraph6DefaultCap = 62;

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
  public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " (byte offset " + std::to_string(offset) + ")"), offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

  private:
    std::size_t offset_;
};

class RangeError : public Error {
  public:
    using Error::Error;
};

/// Raised when a search exceeds its configured expansion or enumeration budget.
class BudgetExceeded : public Error {
  public:
    using Error::Error;
};

class PreconditionError : public Error {
  public:
    using Error::Error;
};

inline constexpr Mask bit(int v) { return Mask{1} << v; }

inline constexpr Mask low_mask(int n) {
    return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

/// Subset of the vertex range of some graph, stored as a 64-bit mask.
class VertexSet {
  public:
    class iterator {
      public:
        using value_type = int;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        explicit iterator(Mask rest) : rest_(rest) {}
        int operator*() const { return std::countr_zero(rest_); }
        iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        iterator operator++(int) {
            auto old = *this;
            ++*this;
            return old;
        }
        bool operator==(const iterator&) const = default;

      private:
        Mask rest_ = 0;
    };

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(Mask bits) : bits_(bits) {}
    VertexSet(std::initializer_list<int> members);

    static constexpr VertexSet range(int n) { return VertexSet(low_mask(n)); }

    constexpr Mask mask() const { return bits_; }
    bool contains(int v) const { return v >= 0 && v < 64 && (bits_ >> v) & 1; }
    void insert(int v) { bits_ |= bit(v); }
    void erase(int v) { bits_ &= ~bit(v); }
    int size() const { return std::popcount(bits_); }
    bool empty() const { return bits_ == 0; }
    /// Smallest member; undefined on the empty set.
    int front() const { return std::countr_zero(bits_); }
    bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
    std::vector<int> members() const;

    iterator begin() const { return iterator(bits_); }
    iterator end() const { return iterator(0); }

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
    friend constexpr bool operator==(VertexSet, VertexSet) = default;

  private:
    Mask bits_ = 0;
};

/// Lexicographic order on the sorted member lists, shorter sets first.
bool size_lex_less(VertexSet a, VertexSet b);

/// Simple undirected graph on vertices 0..n-1 with per-vertex adjacency bitsets.
///
/// Every vertex carries a label: its index in the graph it was originally
/// read from. Induced subgraphs keep the labels of the surviving vertices so
/// results can always be translated back to input coordinates.
class Graph {
  public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::initializer_list<std::pair<int, int>> edges);

    int order() const { return n_; }
    int size() const;

    void add_edge(int u, int v);
    bool adjacent(int u, int v) const;
    VertexSet neighbors(int v) const;
    Mask row(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return std::popcount(row(v)); }
    VertexSet vertices() const { return VertexSet::range(n_); }

    int label(int v) const;
    const std::vector<int>& labels() const { return labels_; }
    VertexSet to_labels(VertexSet local) const;

    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& other) const;

  private:
    friend Graph delete_vertices(const Graph& g, VertexSet s);

    void check_vertex(int v) const;

    int n_ = 0;
    std::array<Mask, kMaxVertices> adj_{};
    std::vector<int> labels_;
};

Graph parse_graph6(std::string_view text, int cap = kGraph6DefaultCap);
std::string to_graph6(const Graph& g, int cap = kGraph6DefaultCap);

/// Reads "n m" followed by m lines "u v" (0-indexed).
Graph parse_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

VertexSet closed_neighborhood(const Graph& g, int v);
Graph delete_vertices(const Graph& g, VertexSet s);
Graph induced_subgraph(const Graph& g, VertexSet keep);
std::vector<VertexSet> components(const Graph& g);
bool is_acyclic(const Graph& g);
bool is_connected(const Graph& g);

// Mask-level primitives shared by the solvers. `within` restricts the
// traversal to a surviving vertex subset of `g`.

/// Vertices reachable from `start` inside `within`.
Mask reach(const Graph& g, Mask within, int start);
/// Number of edges of g[within].
int edge_count(const Graph& g, Mask within);
/// Connected components of g[within], each as a mask, ordered by smallest vertex.
std::vector<Mask> component_masks(const Graph& g, Mask within);
/// Vertices of g[within] lying on at least one cycle.
Mask cycle_vertices(const Graph& g, Mask within);

}  // namespace altind

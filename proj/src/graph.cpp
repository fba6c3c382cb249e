#include "altind/graph.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace altind {

VertexSet::VertexSet(std::initializer_list<int> members) {
    for (int v : members) {
        if (v < 0 || v >= kMaxVertices) throw RangeError("vertex " + std::to_string(v) + " out of range");
        insert(v);
    }
}

std::vector<int> VertexSet::members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (int v : *this) out.push_back(v);
    return out;
}

bool size_lex_less(VertexSet a, VertexSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    auto am = a.members();
    auto bm = b.members();
    return std::lexicographical_compare(am.begin(), am.end(), bm.begin(), bm.end());
}

Graph::Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices)
        throw RangeError("graph order " + std::to_string(n) + " outside 0.." + std::to_string(kMaxVertices));
    labels_.resize(static_cast<std::size_t>(n));
    std::iota(labels_.begin(), labels_.end(), 0);
}

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
}

int Graph::size() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += degree(v);
    return twice / 2;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw RangeError("vertex " + std::to_string(v) + " out of range for graph of order " + std::to_string(n_));
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
    adj_[static_cast<std::size_t>(u)] |= bit(v);
    adj_[static_cast<std::size_t>(v)] |= bit(u);
}

bool Graph::adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (row(u) >> v) & 1;
}

VertexSet Graph::neighbors(int v) const {
    check_vertex(v);
    return VertexSet(row(v));
}

int Graph::label(int v) const {
    check_vertex(v);
    return labels_[static_cast<std::size_t>(v)];
}

VertexSet Graph::to_labels(VertexSet local) const {
    VertexSet out;
    for (int v : local) out.insert(label(v));
    return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v : VertexSet(row(u) & ~low_mask(u + 1))) out.emplace_back(u, v);
    return out;
}

bool Graph::operator==(const Graph& other) const {
    if (n_ != other.n_ || labels_ != other.labels_) return false;
    return std::equal(adj_.begin(), adj_.begin() + n_, other.adj_.begin());
}

// graph6: one length prefix, then the upper triangle in column-major order
// (0,1),(0,2),(1,2),(0,3),... packed six bits per byte, each byte offset by 63.

Graph parse_graph6(std::string_view text, int cap) {
    constexpr std::string_view header = ">>graph6<<";
    std::size_t base = 0;
    if (text.starts_with(header)) {
        text.remove_prefix(header.size());
        base = header.size();
    }
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.empty()) throw ParseError("empty graph6 string", base);

    auto byte_at = [&](std::size_t i) -> int {
        int c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126) throw ParseError("byte " + std::to_string(c) + " outside graph6 range 63..126", base + i);
        return c - 63;
    };

    std::size_t pos = 0;
    long n = byte_at(0);
    pos = 1;
    if (n == 63) {
        if (text.size() < 4) throw ParseError("truncated extended length", base + text.size());
        if (text[1] == '~') throw ParseError("graph order exceeds cap " + std::to_string(cap), base + 1);
        n = (long{byte_at(1)} << 12) | (long{byte_at(2)} << 6) | byte_at(3);
        pos = 4;
    }
    if (n > cap || n > kMaxVertices) throw ParseError("graph order " + std::to_string(n) + " exceeds cap " + std::to_string(cap), base);

    const long bits = n * (n - 1) / 2;
    const std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
    if (text.size() < pos + body)
        throw ParseError("truncated graph6 body: expected " + std::to_string(body) + " data bytes", base + text.size());
    if (text.size() > pos + body) throw ParseError("trailing bytes after graph6 body", base + pos + body);

    Graph g(static_cast<int>(n));
    long k = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++k) {
            std::size_t at = pos + static_cast<std::size_t>(k / 6);
            if ((byte_at(at) >> (5 - k % 6)) & 1) g.add_edge(u, v);
        }
    }
    if (k % 6 != 0) {
        std::size_t last = pos + body - 1;
        if (byte_at(last) & ((1 << (6 - k % 6)) - 1)) throw ParseError("nonzero padding bits", base + last);
    }
    return g;
}

std::string to_graph6(const Graph& g, int cap) {
    const int n = g.order();
    if (n > cap) throw RangeError("graph order " + std::to_string(n) + " exceeds graph6 cap " + std::to_string(cap));
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int acc = 0;
    int filled = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | ((g.row(u) >> v) & 1);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

Graph parse_edge_list(std::istream& in) {
    long n = 0, m = 0;
    if (!(in >> n >> m)) throw PreconditionError("edge list: expected header \"n m\"");
    if (n < 0 || n > kMaxVertices) throw RangeError("edge list: order " + std::to_string(n) + " unsupported");
    if (m < 0) throw PreconditionError("edge list: negative edge count");
    Graph g(static_cast<int>(n));
    for (long i = 0; i < m; ++i) {
        long u = 0, v = 0;
        if (!(in >> u >> v)) throw PreconditionError("edge list: expected " + std::to_string(m) + " edges, got " + std::to_string(i));
        if (u < 0 || v < 0 || u >= n || v >= n) throw RangeError("edge list: endpoint out of range on edge " + std::to_string(i));
        if (u == v) throw PreconditionError("edge list: self-loop on edge " + std::to_string(i));
        if (g.adjacent(static_cast<int>(u), static_cast<int>(v)))
            throw PreconditionError("edge list: repeated edge " + std::to_string(u) + " " + std::to_string(v));
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    return g;
}

void write_edge_list(std::ostream& out, const Graph& g) {
    auto es = g.edges();
    out << g.order() << ' ' << es.size() << '\n';
    for (auto [u, v] : es) out << u << ' ' << v << '\n';
}

VertexSet closed_neighborhood(const Graph& g, int v) {
    VertexSet s = g.neighbors(v);
    s.insert(v);
    return s;
}

Graph delete_vertices(const Graph& g, VertexSet s) {
    if (!s.is_subset_of(g.vertices())) throw RangeError("vertex set exceeds graph order");
    const VertexSet keep = g.vertices() - s;
    std::array<int, kMaxVertices> index{};
    int next = 0;
    for (int v : keep) index[static_cast<std::size_t>(v)] = next++;

    Graph h(next);
    for (int v : keep) {
        const auto nv = static_cast<std::size_t>(index[static_cast<std::size_t>(v)]);
        for (int u : VertexSet(g.row(v) & keep.mask())) h.adj_[nv] |= bit(index[static_cast<std::size_t>(u)]);
        h.labels_[nv] = g.label(v);
    }
    return h;
}

Graph induced_subgraph(const Graph& g, VertexSet keep) {
    if (!keep.is_subset_of(g.vertices())) throw RangeError("vertex set exceeds graph order");
    return delete_vertices(g, g.vertices() - keep);
}

std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> out;
    for (Mask c : component_masks(g, g.vertices().mask())) out.emplace_back(c);
    return out;
}

bool is_acyclic(const Graph& g) {
    return g.size() == g.order() - static_cast<int>(components(g).size());
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

Mask reach(const Graph& g, Mask within, int start) {
    Mask seen = bit(start);
    Mask frontier = seen;
    while (frontier) {
        Mask next = 0;
        for (int v : VertexSet(frontier)) next |= g.row(v);
        next &= within & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

int edge_count(const Graph& g, Mask within) {
    int twice = 0;
    for (int v : VertexSet(within)) twice += std::popcount(g.row(v) & within);
    return twice / 2;
}

std::vector<Mask> component_masks(const Graph& g, Mask within) {
    std::vector<Mask> out;
    while (within) {
        Mask c = reach(g, within, std::countr_zero(within));
        out.push_back(c);
        within &= ~c;
    }
    return out;
}

Mask cycle_vertices(const Graph& g, Mask within) {
    Mask out = 0;
    for (int v : VertexSet(within)) {
        Mask nbrs = g.row(v) & within;
        const Mask rest = within & ~bit(v);
        while (nbrs) {
            Mask r = reach(g, rest, std::countr_zero(nbrs));
            if (std::popcount(r & nbrs) >= 2) {
                out |= bit(v);
                break;
            }
            nbrs &= ~r;
        }
    }
    return out;
}

}  // namespace altind

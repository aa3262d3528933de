#include "mayer/graph.hpp"

#include <bit>
#include <string>

#include "mayer/permutation.hpp"

namespace mayer {

Edge::Edge(int a, int b) : i(a < b ? a : b), j(a < b ? b : a) {
    if (a == b)
        throw std::invalid_argument("edge endpoints must differ: (" +
                                    std::to_string(a) + "," + std::to_string(b) + ")");
}

int edge_index(int i, int j) { return edge_index(Edge(i, j)); }

int edge_index(Edge e) { return e.j * (e.j - 1) / 2 + e.i; }

Edge edge_at(int slot) {
    // Invert idx = j(j-1)/2 + i with 0 <= i < j.
    int j = 1;
    while ((j + 1) * j / 2 <= slot) ++j;
    return Edge(slot - j * (j - 1) / 2, j);
}

bool lex_edge_less(Edge e, Edge f) {
    if (e.i != f.i) return e.i < f.i;
    return e.j < f.j;
}

LabeledGraph::LabeledGraph(int n_vertices, EdgeBits bits) : n_(n_vertices), bits_(bits) {
    if (n_vertices < 0 || n_vertices > kMaxVertices)
        throw capacity_error("graph must have between 0 and 16 vertices, got " +
                             std::to_string(n_vertices));
    const int slots = edge_slots();
    if (slots < kMaxEdgeSlots && (bits >> slots) != 0)
        throw std::invalid_argument("edge bits outside the slot range for n=" +
                                    std::to_string(n_vertices));
}

LabeledGraph LabeledGraph::complete(int n_vertices) {
    LabeledGraph g(n_vertices);
    g.bits_ = (EdgeBits{1} << g.edge_slots()) - 1;
    return g;
}

LabeledGraph LabeledGraph::from_edges(int n_vertices, const std::vector<Edge>& edges) {
    LabeledGraph g(n_vertices);
    for (Edge e : edges) {
        if (e.j >= n_vertices)
            throw std::invalid_argument("edge label out of range");
        g.bits_ |= EdgeBits{1} << edge_index(e);
    }
    return g;
}

bool LabeledGraph::has_edge(Edge e) const {
    if (e.j >= n_) return false;
    return has_slot(edge_index(e));
}

int LabeledGraph::edge_count() const { return popcount128(bits_); }

std::vector<Edge> LabeledGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    EdgeBits b = bits_;
    while (b != 0) {
        const auto lo = static_cast<std::uint64_t>(b);
        const int slot = lo != 0 ? std::countr_zero(lo)
                                 : 64 + std::countr_zero(static_cast<std::uint64_t>(b >> 64));
        out.push_back(edge_at(slot));
        b &= b - 1;
    }
    return out;
}

std::array<std::uint16_t, kMaxVertices> LabeledGraph::adjacency() const {
    std::array<std::uint16_t, kMaxVertices> adj{};
    EdgeBits b = bits_;
    while (b != 0) {
        const auto lo = static_cast<std::uint64_t>(b);
        const int slot = lo != 0 ? std::countr_zero(lo)
                                 : 64 + std::countr_zero(static_cast<std::uint64_t>(b >> 64));
        const Edge e = edge_at(slot);
        adj[e.i] |= static_cast<std::uint16_t>(1u << e.j);
        adj[e.j] |= static_cast<std::uint16_t>(1u << e.i);
        b &= b - 1;
    }
    return adj;
}

LabeledGraph toggle_edge(const LabeledGraph& g, Edge e) {
    if (e.j >= g.n_vertices())
        throw std::invalid_argument("edge label out of range for this graph");
    return LabeledGraph(g.n_vertices(), g.bits() ^ (EdgeBits{1} << edge_index(e)));
}

namespace {

// Closure of {start} under the adjacency masks, as a vertex bitmask.
std::uint16_t reach_mask(const std::array<std::uint16_t, kMaxVertices>& adj, int start) {
    std::uint16_t visited = static_cast<std::uint16_t>(1u << start);
    for (;;) {
        std::uint16_t next = visited;
        std::uint16_t frontier = visited;
        while (frontier != 0) {
            const int v = std::countr_zero(frontier);
            frontier &= static_cast<std::uint16_t>(frontier - 1);
            next |= adj[v];
        }
        if (next == visited) return visited;
        visited = next;
    }
}

} // namespace

bool is_connected(const LabeledGraph& g) {
    const int n = g.n_vertices();
    if (n <= 1) return n == 1;
    const auto adj = g.adjacency();
    const auto all = static_cast<std::uint16_t>((1u << n) - 1);
    return reach_mask(adj, 0) == all;
}

int count_components(const LabeledGraph& g) {
    const int n = g.n_vertices();
    const auto adj = g.adjacency();
    std::uint16_t seen = 0;
    int components = 0;
    for (int v = 0; v < n; ++v) {
        if (seen & (1u << v)) continue;
        seen |= reach_mask(adj, v);
        ++components;
    }
    return components;
}

bool connects(const LabeledGraph& g, int i, int j, EdgeBits mask) {
    const LabeledGraph sub(g.n_vertices(), g.bits() & mask);
    const auto adj = sub.adjacency();
    return reach_mask(adj, i) & (1u << j);
}

LabeledGraph relabel(const LabeledGraph& g, const Permutation& sigma) {
    if (sigma.n() != g.n_vertices() - 1)
        throw std::invalid_argument("permutation size does not match graph");
    LabeledGraph out(g.n_vertices());
    EdgeBits bits = 0;
    for (Edge e : g.edges())
        bits |= EdgeBits{1} << edge_index(sigma(e.i), sigma(e.j));
    return LabeledGraph(g.n_vertices(), bits);
}

std::uint64_t subgraph_mask_count(int n_vertices) {
    if (n_vertices < 1 || n_vertices > kMaxVertices)
        throw capacity_error("enumeration needs 1..16 vertices");
    const int slots = n_vertices * (n_vertices - 1) / 2;
    if (slots > 63)
        throw capacity_error("full enumeration on " + std::to_string(n_vertices) +
                             " vertices exceeds the 63-bit mask range");
    return std::uint64_t{1} << slots;
}

GraphRange::GraphRange(int n_vertices, bool connected_only)
    : GraphRange(n_vertices, connected_only, 0, subgraph_mask_count(n_vertices)) {}

GraphRange::GraphRange(int n_vertices, bool connected_only,
                       std::uint64_t first_mask, std::uint64_t last_mask)
    : n_(n_vertices), connected_only_(connected_only), first_(first_mask), last_(last_mask) {
    const std::uint64_t total = subgraph_mask_count(n_vertices);
    if (first_ > last_ || last_ > total)
        throw std::invalid_argument("graph range out of bounds");
}

GraphRange::iterator::iterator(int n, bool connected_only, std::uint64_t mask, std::uint64_t last)
    : n_(n), connected_only_(connected_only), mask_(mask), last_(last) {
    skip_filtered();
}

void GraphRange::iterator::skip_filtered() {
    if (!connected_only_) return;
    while (mask_ < last_ && !is_connected(LabeledGraph(n_, mask_)))
        ++mask_;
    if (mask_ > last_) mask_ = last_;
}

GraphRange::iterator& GraphRange::iterator::operator++() {
    ++mask_;
    skip_filtered();
    return *this;
}

GraphRange::iterator GraphRange::begin() const {
    return iterator(n_, connected_only_, first_, last_);
}

GraphRange::iterator GraphRange::end() const {
    return iterator(n_, false, last_, last_);
}

} // namespace mayer

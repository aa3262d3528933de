#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <vector>

#include "mayer/errors.hpp"

namespace mayer {

class Permutation;

// 16 vertices give 120 edge slots, which fit one 128-bit word.
inline constexpr int kMaxVertices = 16;
inline constexpr int kMaxEdgeSlots = kMaxVertices * (kMaxVertices - 1) / 2;

using EdgeBits = unsigned __int128;

// Unordered pair of distinct vertex labels, stored with i < j.
struct Edge {
    int i;
    int j;

    Edge(int a, int b);
    friend bool operator==(Edge, Edge) = default;
};

// Canonical slot of the pair {i,j}: idx(i,j) = max(max-1)/2 + min.
// Shared by every module; bit k of an edge field refers to edge_at(k).
int edge_index(int i, int j);
int edge_index(Edge e);
Edge edge_at(int slot);

// (i,j) < (k,l) iff min(i,j) < min(k,l), or equal minima and max(i,j) < max(k,l).
bool lex_edge_less(Edge e, Edge f);

// Simple undirected labelled graph on vertices {0, ..., n_vertices-1},
// held as a bit field over canonical edge slots. Immutable by convention:
// operations return new graphs.
class LabeledGraph {
public:
    LabeledGraph() = default;
    explicit LabeledGraph(int n_vertices, EdgeBits bits = 0);

    static LabeledGraph complete(int n_vertices);
    static LabeledGraph from_edges(int n_vertices, const std::vector<Edge>& edges);

    int n_vertices() const { return n_; }
    int edge_slots() const { return n_ * (n_ - 1) / 2; }
    EdgeBits bits() const { return bits_; }

    bool has_edge(Edge e) const;
    bool has_edge(int i, int j) const { return has_edge(Edge(i, j)); }
    bool has_slot(int slot) const { return (bits_ >> slot) & 1; }

    int edge_count() const;
    std::vector<Edge> edges() const; // canonical slot order

    // Neighbour bitmask per vertex; index v holds bit u for every edge {u,v}.
    std::array<std::uint16_t, kMaxVertices> adjacency() const;

    friend bool operator==(const LabeledGraph&, const LabeledGraph&) = default;

private:
    int n_ = 0;
    EdgeBits bits_ = 0;
};

// G with the edge bit for e flipped (add if absent, delete if present).
LabeledGraph toggle_edge(const LabeledGraph& g, Edge e);

bool is_connected(const LabeledGraph& g);
int count_components(const LabeledGraph& g);

// Endpoints i, j joined inside g using only the edge slots allowed by `mask`.
bool connects(const LabeledGraph& g, int i, int j, EdgeBits mask);

// Replaces label v by sigma(v); sigma acts on {1..n-1} and fixes vertex 0.
LabeledGraph relabel(const LabeledGraph& g, const Permutation& sigma);

inline int popcount128(EdgeBits b) {
    return __builtin_popcountll(static_cast<std::uint64_t>(b)) +
           __builtin_popcountll(static_cast<std::uint64_t>(b >> 64));
}

// All spanning subgraphs of K_n in increasing bit-field order, optionally
// restricted to connected ones. The [first_mask, last_mask) form carves a
// contiguous slice out of the same order for parallel consumption.
class GraphRange {
public:
    GraphRange(int n_vertices, bool connected_only);
    GraphRange(int n_vertices, bool connected_only,
               std::uint64_t first_mask, std::uint64_t last_mask);

    class iterator {
    public:
        using value_type = LabeledGraph;
        using reference = LabeledGraph;
        using pointer = void;
        using difference_type = std::ptrdiff_t;
        using iterator_category = std::input_iterator_tag;

        iterator() = default;
        iterator(int n, bool connected_only, std::uint64_t mask, std::uint64_t last);

        LabeledGraph operator*() const { return LabeledGraph(n_, mask_); }
        iterator& operator++();
        friend bool operator==(const iterator& a, const iterator& b) {
            return a.mask_ == b.mask_;
        }

    private:
        void skip_filtered();

        int n_ = 0;
        bool connected_only_ = false;
        std::uint64_t mask_ = 0;
        std::uint64_t last_ = 0;
    };

    iterator begin() const;
    iterator end() const;

    // Number of raw masks in [first, last); connected filtering happens on top.
    std::uint64_t mask_count() const { return last_ - first_; }
    std::uint64_t first_mask() const { return first_; }
    std::uint64_t last_mask() const { return last_; }

private:
    int n_;
    bool connected_only_;
    std::uint64_t first_;
    std::uint64_t last_;
};

// Total number of spanning subgraphs of K_n (2^C(n,2)); capacity-checked.
std::uint64_t subgraph_mask_count(int n_vertices);

} // namespace mayer

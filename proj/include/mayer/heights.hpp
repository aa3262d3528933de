#pragma once

#include <compare>
#include <vector>

#include "mayer/graph.hpp"

namespace mayer {

// Exact stand-in for the centroid value h_i + i/(n+1). Because the fractional
// parts i/(n+1) are pairwise distinct and lie in [0,1), lexicographic order on
// (h_i, i) coincides with the real order on centroids, and keys are equal only
// for the same vertex.
struct CentroidKey {
    int h;
    int vertex;

    friend auto operator<=>(const CentroidKey&, const CentroidKey&) = default;
};

// Integer heights h_1..h_n; h_0 = 0 is implicit and never stored. Centroids
// are compared only through CentroidKey, never materialized as reals.
class HeightVector {
public:
    HeightVector() = default;
    explicit HeightVector(std::vector<int> h) : h_(std::move(h)) {}

    int n() const { return static_cast<int>(h_.size()); }
    int n_vertices() const { return n() + 1; }

    int at(int vertex) const { return vertex == 0 ? 0 : h_[vertex - 1]; }
    CentroidKey key(int vertex) const { return {at(vertex), vertex}; }
    const std::vector<int>& entries() const { return h_; }

    friend bool operator==(const HeightVector&, const HeightVector&) = default;
    friend bool operator<(const HeightVector& a, const HeightVector& b) {
        return a.h_ < b.h_;
    }

private:
    std::vector<int> h_;
};

// centroid(i) < centroid(j), exactly.
bool centroid_less(const HeightVector& h, int i, int j);

// Vertex with the least centroid; unique because fractional parts differ.
int centroid_argmin(const HeightVector& h);

// |centroid(i) - centroid(j)| < 1, as the integer test
// |(h_i - h_j)(n+1) + (i - j)| < n+1.
bool gh_has_edge(const HeightVector& h, Edge e);

// The graph G_h on {0..n}: edges are exactly the pairs at centroid distance < 1.
LabeledGraph build_gh(const HeightVector& h);

// Edge order used by the continuum involution: compare the centroid-sorted
// endpoint keys lexicographically. Total on edges of G_h (or any edge set).
bool lex_edge_less_h(const HeightVector& h, Edge e, Edge f);

} // namespace mayer

#pragma once

#include <optional>

#include "mayer/graph.hpp"
#include "mayer/heights.hpp"

namespace mayer {

// e is G-active iff its endpoints are joined by a path using only edges of G
// strictly greater than e in lexicographic order. e itself need not lie in G.
bool is_active(const LabeledGraph& g, Edge e);

// Least G-active edge of the ambient complete graph, if any.
std::optional<Edge> least_active_edge(const LabeledGraph& g);

// Sign-reversing involution on connected graphs: toggles the least active
// edge, fixed exactly on increasing trees. Throws on disconnected input.
LabeledGraph psi(const LabeledGraph& g);

// Continuum analogues, with the edge order induced by the heights h and
// candidate edges ranging over all of G_h.
bool is_active_h(const LabeledGraph& g, const HeightVector& h, Edge e);
std::optional<Edge> least_active_edge_h(const LabeledGraph& g, const HeightVector& h);

// Involution on the connected spanning subgraphs of G_h; fixed exactly on
// h-increasing trees. Throws if g is disconnected or not a subgraph of G_h.
LabeledGraph psi_h(const LabeledGraph& g, const HeightVector& h);

} // namespace mayer

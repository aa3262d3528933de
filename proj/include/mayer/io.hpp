#pragma once

#include <iosfwd>
#include <string>

#include "mayer/graph.hpp"
#include "mayer/trees.hpp"

namespace mayer {

// Edge-list text format: line 1 "v <n_vertices>", then one "e <i> <j>" line
// per edge with 0-based labels. '#' starts a comment; blank lines ignored.
LabeledGraph read_graph(std::istream& in);
void write_graph(std::ostream& out, const LabeledGraph& g); // canonical slot order
std::string graph_to_string(const LabeledGraph& g);
LabeledGraph graph_from_string(const std::string& text);

// Rooted-tree text format: line 1 "root <r>", then "p <child> <parent>" lines.
RootedTree read_tree(std::istream& in);
void write_tree(std::ostream& out, const RootedTree& t);

} // namespace mayer

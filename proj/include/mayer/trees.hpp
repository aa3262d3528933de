#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "mayer/graph.hpp"
#include "mayer/heights.hpp"

namespace mayer {

// Labelled tree on {0..n-1} with a distinguished root, as a parent array.
// parent[root] == -1; parent pointers reach the root from every vertex.
class RootedTree {
public:
    RootedTree(int root, std::vector<int> parent);

    int n_vertices() const { return static_cast<int>(parent_.size()); }
    int root() const { return root_; }
    int parent(int v) const { return parent_[v]; }
    const std::vector<int>& parents() const { return parent_; }

    LabeledGraph as_graph() const;

    // Vertices in breadth-first order from the root.
    std::vector<int> bfs_order() const;

    friend bool operator==(const RootedTree&, const RootedTree&) = default;

private:
    int root_;
    std::vector<int> parent_;
};

// Tree on {0..n-1}, rooted at vertex 0, with labels increasing along every
// path from the root.
bool is_increasing_tree(const LabeledGraph& g);

// All increasing trees on {0..n-1}; vertex k >= 1 picks a parent below it,
// so there are (n-1)! of them.
std::vector<LabeledGraph> enumerate_increasing_trees(int n_vertices);
std::uint64_t count_increasing_trees(int n_vertices);

// Tree contained in G_h whose centroids strictly increase along every path
// from the centroid-argmin vertex.
bool is_h_increasing_tree(const LabeledGraph& g, const HeightVector& h);

// Rooted form: additionally requires the tree's own root to be the centroid
// argmin of h.
bool is_h_increasing_tree(const RootedTree& t, const HeightVector& h);

std::vector<LabeledGraph> enumerate_h_increasing_trees(const HeightVector& h);

// The unique h (h_0 = 0) for which t is h-increasing with its root as
// centroid argmin: h_i = descents(root -> i) - descents(root -> 0).
HeightVector tree_to_height(const RootedTree& t);

// All m^{m-1} rooted Cayley trees on {0..m-1}, each exactly once.
void for_each_rooted_cayley_tree(int m, const std::function<void(const RootedTree&)>& fn);
std::vector<RootedTree> enumerate_rooted_cayley_trees(int m);
std::uint64_t count_rooted_cayley_trees(int m);

} // namespace mayer

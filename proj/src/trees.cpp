#include "mayer/trees.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace mayer {

RootedTree::RootedTree(int root, std::vector<int> parent)
    : root_(root), parent_(std::move(parent)) {
    const int m = n_vertices();
    if (m < 1 || m > kMaxVertices)
        throw capacity_error("rooted tree must have 1..16 vertices");
    if (root < 0 || root >= m || parent_[root] != -1)
        throw std::invalid_argument("root must be in range with parent -1");
    for (int v = 0; v < m; ++v) {
        if (v == root) continue;
        if (parent_[v] < 0 || parent_[v] >= m || parent_[v] == v)
            throw std::invalid_argument("bad parent for vertex " + std::to_string(v));
        // Walk towards the root; more than m steps means a cycle.
        int u = v;
        for (int steps = 0; u != root; ++steps) {
            if (steps > m)
                throw std::invalid_argument("parent pointers do not reach the root");
            u = parent_[u];
        }
    }
}

LabeledGraph RootedTree::as_graph() const {
    std::vector<Edge> edges;
    edges.reserve(n_vertices() - 1);
    for (int v = 0; v < n_vertices(); ++v)
        if (v != root_) edges.emplace_back(v, parent_[v]);
    return LabeledGraph::from_edges(n_vertices(), edges);
}

std::vector<int> RootedTree::bfs_order() const {
    const int m = n_vertices();
    std::vector<std::vector<int>> children(m);
    for (int v = 0; v < m; ++v)
        if (v != root_) children[parent_[v]].push_back(v);
    std::vector<int> order{root_};
    for (std::size_t head = 0; head < order.size(); ++head)
        for (int c : children[order[head]]) order.push_back(c);
    return order;
}

namespace {

// Orients a tree given by adjacency masks away from `root`.
std::vector<int> orient(const std::array<std::uint16_t, kMaxVertices>& adj, int m, int root) {
    std::vector<int> parent(m, -1);
    std::vector<int> queue{root};
    std::uint16_t seen = static_cast<std::uint16_t>(1u << root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int u = queue[head];
        std::uint16_t rest = adj[u] & ~seen;
        while (rest != 0) {
            const int v = std::countr_zero(rest);
            rest &= static_cast<std::uint16_t>(rest - 1);
            seen |= static_cast<std::uint16_t>(1u << v);
            parent[v] = u;
            queue.push_back(v);
        }
    }
    return parent;
}

bool is_spanning_tree(const LabeledGraph& g) {
    return g.edge_count() == g.n_vertices() - 1 && is_connected(g);
}

} // namespace

bool is_increasing_tree(const LabeledGraph& g) {
    if (g.n_vertices() < 1)
        throw std::invalid_argument("is_increasing_tree needs at least one vertex");
    if (!is_spanning_tree(g)) return false;
    const auto parent = orient(g.adjacency(), g.n_vertices(), 0);
    for (int v = 1; v < g.n_vertices(); ++v)
        if (parent[v] > v) return false;
    return true;
}

namespace {

// Odometer over parent choices: vertex v >= 1 picks a parent in {0..v-1}.
template <class Fn>
std::uint64_t for_each_parent_choice(int n_vertices, Fn&& fn) {
    std::uint64_t count = 0;
    if (n_vertices <= 1) {
        fn(std::vector<int>{});
        return 1;
    }
    std::vector<int> choice(n_vertices - 1, 0); // choice[v-1] = parent of v
    for (;;) {
        ++count;
        fn(choice);
        int v = n_vertices - 2;
        while (v >= 0 && choice[v] == v) choice[v--] = 0;
        if (v < 0) break;
        ++choice[v];
    }
    return count;
}

} // namespace

std::vector<LabeledGraph> enumerate_increasing_trees(int n_vertices) {
    std::vector<LabeledGraph> out;
    for_each_parent_choice(n_vertices, [&](const std::vector<int>& choice) {
        EdgeBits bits = 0;
        for (int v = 1; v < n_vertices; ++v)
            bits |= EdgeBits{1} << edge_index(choice[v - 1], v);
        out.emplace_back(n_vertices, bits);
    });
    return out;
}

std::uint64_t count_increasing_trees(int n_vertices) {
    if (n_vertices < 1) throw std::invalid_argument("need at least one vertex");
    return for_each_parent_choice(n_vertices, [](const std::vector<int>&) {});
}

bool is_h_increasing_tree(const LabeledGraph& g, const HeightVector& h) {
    if (g.n_vertices() != h.n_vertices())
        throw std::invalid_argument("graph and height vector sizes differ");
    if (!is_spanning_tree(g)) return false;
    const LabeledGraph gh = build_gh(h);
    if ((g.bits() & ~gh.bits()) != 0) return false;
    const int root = centroid_argmin(h);
    const auto parent = orient(g.adjacency(), g.n_vertices(), root);
    for (int v = 0; v < g.n_vertices(); ++v)
        if (v != root && !centroid_less(h, parent[v], v)) return false;
    return true;
}

bool is_h_increasing_tree(const RootedTree& t, const HeightVector& h) {
    if (t.n_vertices() != h.n_vertices())
        throw std::invalid_argument("tree and height vector sizes differ");
    if (t.root() != centroid_argmin(h)) return false;
    for (int v = 0; v < t.n_vertices(); ++v) {
        if (v == t.root()) continue;
        if (!centroid_less(h, t.parent(v), v)) return false;
        if (!gh_has_edge(h, Edge(t.parent(v), v))) return false;
    }
    return true;
}

std::vector<LabeledGraph> enumerate_h_increasing_trees(const HeightVector& h) {
    const int m = h.n_vertices();
    const int root = centroid_argmin(h);

    // Parent candidates: strictly smaller centroid at centroid gap < 1. Every
    // choice vector yields a tree (parent chains strictly descend to the
    // argmin), so no cycle check is needed.
    std::vector<std::vector<int>> candidates(m);
    for (int v = 0; v < m; ++v) {
        if (v == root) continue;
        for (int u = 0; u < m; ++u)
            if (u != v && centroid_less(h, u, v) && gh_has_edge(h, Edge(u, v)))
                candidates[v].push_back(u);
        if (candidates[v].empty()) return {};
    }

    std::vector<LabeledGraph> out;
    std::vector<int> pick(m, 0);
    for (;;) {
        EdgeBits bits = 0;
        for (int v = 0; v < m; ++v)
            if (v != root) bits |= EdgeBits{1} << edge_index(candidates[v][pick[v]], v);
        out.emplace_back(m, bits);
        int v = m - 1;
        while (v >= 0) {
            if (v == root) {
                --v;
                continue;
            }
            if (pick[v] + 1 < static_cast<int>(candidates[v].size())) break;
            pick[v--] = 0;
        }
        if (v < 0) break;
        ++pick[v];
    }
    return out;
}

HeightVector tree_to_height(const RootedTree& t) {
    const int m = t.n_vertices();
    std::vector<int> descents(m, 0);
    for (int v : t.bfs_order()) {
        if (v == t.root()) continue;
        const int p = t.parent(v);
        descents[v] = descents[p] + (v < p ? 1 : 0);
    }
    std::vector<int> h(m - 1);
    for (int v = 1; v < m; ++v) h[v - 1] = descents[v] - descents[0];
    return HeightVector(std::move(h));
}

namespace {

// Classic Pruefer decode; fine at quadratic cost for the sizes we enumerate.
std::vector<Edge> decode_pruefer(const std::vector<int>& seq, int m) {
    std::vector<int> degree(m, 1);
    for (int v : seq) ++degree[v];
    std::vector<Edge> edges;
    edges.reserve(m - 1);
    for (int v : seq) {
        int leaf = 0;
        while (degree[leaf] != 1) ++leaf;
        edges.emplace_back(leaf, v);
        degree[leaf] = 0;
        --degree[v];
    }
    int a = -1;
    for (int v = 0; v < m; ++v) {
        if (degree[v] != 1) continue;
        if (a < 0)
            a = v;
        else
            edges.emplace_back(a, v);
    }
    return edges;
}

} // namespace

void for_each_rooted_cayley_tree(int m, const std::function<void(const RootedTree&)>& fn) {
    if (m < 1 || m > 15)
        throw capacity_error("rooted Cayley enumeration supports 1..15 vertices");
    if (m == 1) {
        fn(RootedTree(0, {-1}));
        return;
    }
    std::vector<int> seq(m - 2, 0);
    for (;;) {
        const auto edges = decode_pruefer(seq, m);
        const auto adj = LabeledGraph::from_edges(m, edges).adjacency();
        for (int root = 0; root < m; ++root)
            fn(RootedTree(root, orient(adj, m, root)));
        int k = m - 3;
        while (k >= 0 && seq[k] == m - 1) seq[k--] = 0;
        if (k < 0) break;
        ++seq[k];
    }
}

std::vector<RootedTree> enumerate_rooted_cayley_trees(int m) {
    std::vector<RootedTree> out;
    for_each_rooted_cayley_tree(m, [&](const RootedTree& t) { out.push_back(t); });
    return out;
}

std::uint64_t count_rooted_cayley_trees(int m) {
    std::uint64_t count = 0;
    for_each_rooted_cayley_tree(m, [&](const RootedTree&) { ++count; });
    return count;
}

} // namespace mayer

#include "mayer/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace mayer {

namespace {

// Strips '#' comments and surrounding whitespace; empty result means skip.
std::string clean_line(std::string line) {
    if (const auto hash = line.find('#'); hash != std::string::npos)
        line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return {};
    const auto last = line.find_last_not_of(" \t\r\n");
    return line.substr(first, last - first + 1);
}

} // namespace

LabeledGraph read_graph(std::istream& in) {
    std::string line;
    int n = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        const std::string body = clean_line(line);
        if (body.empty()) continue;
        std::istringstream fields(body);
        std::string tag;
        fields >> tag;
        if (tag == "v") {
            if (n >= 0) throw std::invalid_argument("duplicate 'v' line in graph input");
            if (!(fields >> n) || n < 1)
                throw std::invalid_argument("bad vertex count in graph input");
        } else if (tag == "e") {
            int i, j;
            if (n < 0) throw std::invalid_argument("'e' line before 'v' line");
            if (!(fields >> i >> j) || i < 0 || j < 0 || i >= n || j >= n)
                throw std::invalid_argument("bad edge line: " + body);
            edges.emplace_back(i, j);
        } else {
            throw std::invalid_argument("unknown line in graph input: " + body);
        }
    }
    if (n < 0) throw std::invalid_argument("graph input has no 'v' line");
    return LabeledGraph::from_edges(n, edges);
}

void write_graph(std::ostream& out, const LabeledGraph& g) {
    out << "v " << g.n_vertices() << "\n";
    for (Edge e : g.edges()) out << "e " << e.i << " " << e.j << "\n";
}

std::string graph_to_string(const LabeledGraph& g) {
    std::ostringstream out;
    write_graph(out, g);
    return out.str();
}

LabeledGraph graph_from_string(const std::string& text) {
    std::istringstream in(text);
    return read_graph(in);
}

RootedTree read_tree(std::istream& in) {
    std::string line;
    int root = -1;
    std::vector<std::pair<int, int>> links; // (child, parent)
    int max_label = -1;
    while (std::getline(in, line)) {
        const std::string body = clean_line(line);
        if (body.empty()) continue;
        std::istringstream fields(body);
        std::string tag;
        fields >> tag;
        if (tag == "root") {
            if (root >= 0) throw std::invalid_argument("duplicate 'root' line");
            if (!(fields >> root) || root < 0)
                throw std::invalid_argument("bad root line");
            max_label = std::max(max_label, root);
        } else if (tag == "p") {
            int child, parent;
            if (!(fields >> child >> parent) || child < 0 || parent < 0)
                throw std::invalid_argument("bad parent line: " + body);
            links.emplace_back(child, parent);
            max_label = std::max({max_label, child, parent});
        } else {
            throw std::invalid_argument("unknown line in tree input: " + body);
        }
    }
    if (root < 0) throw std::invalid_argument("tree input has no 'root' line");
    const int m = max_label + 1;
    std::vector<int> parent(m, -1);
    for (auto [child, p] : links) {
        if (child == root) throw std::invalid_argument("root cannot have a parent");
        if (parent[child] != -1) throw std::invalid_argument("vertex has two parents");
        parent[child] = p;
    }
    for (int v = 0; v < m; ++v)
        if (v != root && parent[v] == -1)
            throw std::invalid_argument("vertex " + std::to_string(v) + " has no parent line");
    return RootedTree(root, std::move(parent));
}

void write_tree(std::ostream& out, const RootedTree& t) {
    out << "root " << t.root() << "\n";
    for (int v = 0; v < t.n_vertices(); ++v)
        if (v != t.root()) out << "p " << v << " " << t.parent(v) << "\n";
}

} // namespace mayer

#include "mayer/heights.hpp"

#include <cstdlib>
#include <utility>

namespace mayer {

bool centroid_less(const HeightVector& h, int i, int j) {
    return h.key(i) < h.key(j);
}

int centroid_argmin(const HeightVector& h) {
    int best = 0;
    for (int v = 1; v <= h.n(); ++v)
        if (h.key(v) < h.key(best)) best = v;
    return best;
}

bool gh_has_edge(const HeightVector& h, Edge e) {
    // 64-bit so arbitrary user heights cannot overflow the scaled test.
    const long long m = h.n_vertices();
    const long long scaled =
        (static_cast<long long>(h.at(e.i)) - h.at(e.j)) * m + (e.i - e.j);
    return std::llabs(scaled) < m;
}

LabeledGraph build_gh(const HeightVector& h) {
    const int m = h.n_vertices();
    LabeledGraph g(m);
    EdgeBits bits = 0;
    for (int j = 1; j < m; ++j)
        for (int i = 0; i < j; ++i)
            if (gh_has_edge(h, Edge(i, j)))
                bits |= EdgeBits{1} << edge_index(i, j);
    return LabeledGraph(m, bits);
}

bool lex_edge_less_h(const HeightVector& h, Edge e, Edge f) {
    const auto sorted_keys = [&h](Edge x) {
        CentroidKey a = h.key(x.i);
        CentroidKey b = h.key(x.j);
        if (b < a) std::swap(a, b);
        return std::pair{a, b};
    };
    return sorted_keys(e) < sorted_keys(f);
}

} // namespace mayer

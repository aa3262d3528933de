#include "mayer/polytope.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "mayer/parallel.hpp"

namespace mayer {

namespace {

int sign_of(int x) { return (x > 0) - (x < 0); }

// Per-edge containment condition for pi(h, sigma) inside Pi_G:
// h_i - h_j must be 0 or sign(sigma(j) - sigma(i)), with h_0 = 0, sigma(0) = 0.
// sigma is injective with sigma(0) = 0, so the sign is +-1 on real edges.
bool edge_admits(const HeightVector& h, const Permutation& sigma, Edge e) {
    const int s = sign_of(sigma(e.j) - sigma(e.i));
    if (s == 0) throw std::logic_error("sigma collides on an edge");
    const int d = h.at(e.i) - h.at(e.j);
    return d == 0 || d == s;
}

// BFS spanning tree of a connected graph rooted at 0, plus the non-tree edges.
// Heights propagate along tree edges: given the parent value there are exactly
// two admissible child values, so the admissible h for a fixed sigma are the
// (at most) 2^n leaves of this plan.
struct PropagationPlan {
    std::vector<int> order;   // non-root vertices in BFS discovery order
    std::vector<int> parent;  // parent[v] for every non-root vertex
    std::vector<Edge> non_tree;
};

PropagationPlan make_plan(const LabeledGraph& g) {
    const int m = g.n_vertices();
    PropagationPlan plan;
    plan.parent.assign(m, -1);
    const auto adj = g.adjacency();
    std::vector<int> queue{0};
    std::uint16_t seen = 1;
    EdgeBits tree_bits = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int u = queue[head];
        for (int v = 0; v < m; ++v) {
            if (!(adj[u] & (1u << v)) || (seen & (1u << v))) continue;
            seen |= static_cast<std::uint16_t>(1u << v);
            plan.parent[v] = u;
            plan.order.push_back(v);
            tree_bits |= EdgeBits{1} << edge_index(u, v);
            queue.push_back(v);
        }
    }
    for (Edge e : g.edges())
        if (!((tree_bits >> edge_index(e)) & 1)) plan.non_tree.push_back(e);
    return plan;
}

// Counts admissible height vectors for one sigma; emit receives each h in
// propagation order (choice mask ascending, bit k shifting the k-th vertex
// of the BFS order).
template <class Emit>
std::uint64_t count_heights_for_sigma(const PropagationPlan& plan, int n,
                                      const Permutation& sigma, Emit&& emit) {
    std::uint64_t count = 0;
    std::vector<int> h(n + 1, 0);
    const std::uint64_t choices = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < choices; ++mask) {
        bool ok = true;
        for (int k = 0; k < n; ++k) {
            const int v = plan.order[k];
            const int p = plan.parent[v];
            const int step = sign_of(sigma(v) - sigma(p));
            if (step == 0) throw std::logic_error("sigma collides on a tree edge");
            h[v] = h[p] - (((mask >> k) & 1) ? step : 0);
            if (std::abs(h[v]) > n)
                throw std::logic_error("height propagation violated |h_i| <= n");
        }
        for (Edge e : plan.non_tree) {
            const int d = h[e.i] - h[e.j];
            if (d != 0 && d != sign_of(sigma(e.j) - sigma(e.i))) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        ++count;
        emit(h);
    }
    return count;
}

void require_gas_graph(const LabeledGraph& g, const char* who) {
    if (g.n_vertices() < 2)
        throw std::invalid_argument(std::string(who) + " needs a graph on {0..n}, n >= 1");
    if (!is_connected(g))
        throw std::invalid_argument(std::string(who) +
                                    ": disconnected graph has unbounded polytope");
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<Permutation> sigmas;
    for_each_permutation(n, [&](const Permutation& s) { sigmas.push_back(s); });
    return sigmas;
}

} // namespace

bool subpolytope_in(const HeightVector& h, const Permutation& sigma, const LabeledGraph& g) {
    if (h.n() != g.n_vertices() - 1 || sigma.n() != h.n())
        throw std::invalid_argument("subpolytope_in: mismatched sizes");
    for (Edge e : g.edges())
        if (!edge_admits(h, sigma, e)) return false;
    return true;
}

std::uint64_t count_subpolytopes(const LabeledGraph& g, int workers) {
    require_gas_graph(g, "count_subpolytopes");
    const int n = g.n_vertices() - 1;
    const auto plan = make_plan(g);
    const auto sigmas = all_permutations(n);
    const auto totals = run_chunked<std::uint64_t>(
        sigmas.size(), workers, [&](std::uint64_t lo, std::uint64_t hi) {
            std::uint64_t local = 0;
            for (std::uint64_t k = lo; k < hi; ++k)
                local += count_heights_for_sigma(plan, n, sigmas[k],
                                                 [](const std::vector<int>&) {});
            return local;
        });
    return std::accumulate(totals.begin(), totals.end(), std::uint64_t{0});
}

std::vector<std::pair<HeightVector, Permutation>> enumerate_subpolytopes(const LabeledGraph& g) {
    require_gas_graph(g, "enumerate_subpolytopes");
    const int n = g.n_vertices() - 1;
    const auto plan = make_plan(g);
    std::vector<std::pair<HeightVector, Permutation>> out;
    for_each_permutation(n, [&](const Permutation& sigma) {
        count_heights_for_sigma(plan, n, sigma, [&](const std::vector<int>& h) {
            out.emplace_back(HeightVector(std::vector<int>(h.begin() + 1, h.end())), sigma);
        });
    });
    return out;
}

Rational exact_volume(const LabeledGraph& g, int workers) {
    require_gas_graph(g, "exact_volume");
    const int n = g.n_vertices() - 1;
    return Rational(BigInt(count_subpolytopes(g, workers)), factorial(n));
}

MayerWeight mayer_weight(const LabeledGraph& g, int workers) {
    const Rational volume = exact_volume(g, workers);
    const int sign = g.edge_count() % 2 == 0 ? 1 : -1;
    return MayerWeight{sign, volume, sign * volume};
}

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// splitmix64 stream; worker substreams start from a scrambled (seed, worker).
struct SplitMix64 {
    std::uint64_t state;
    std::uint64_t next() {
        state += kGolden;
        return mix64(state);
    }
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

} // namespace

McResult mc_volume(const LabeledGraph& g, std::uint64_t samples, std::uint64_t seed,
                   int workers) {
    require_gas_graph(g, "mc_volume");
    if (samples == 0) throw std::invalid_argument("mc_volume needs samples >= 1");
    const int n = g.n_vertices() - 1;
    const auto edges = g.edges();
    const double half_side = static_cast<double>(n);

    const auto hits_per_worker = run_chunked<std::uint64_t>(
        samples, workers, [&](std::uint64_t lo, std::uint64_t hi) {
            // The substream is owned by the chunk, not the sample index, so a
            // run is reproducible for a declared worker count.
            SplitMix64 rng{mix64(seed ^ mix64(lo + kGolden))};
            std::vector<double> x(n + 1, 0.0);
            std::uint64_t hits = 0;
            for (std::uint64_t s = lo; s < hi; ++s) {
                for (int v = 1; v <= n; ++v)
                    x[v] = (2.0 * rng.next_unit() - 1.0) * half_side;
                bool inside = true;
                for (Edge e : edges) {
                    if (std::abs(x[e.i] - x[e.j]) > 1.0) {
                        inside = false;
                        break;
                    }
                }
                hits += inside;
            }
            return hits;
        });
    const std::uint64_t hits =
        std::accumulate(hits_per_worker.begin(), hits_per_worker.end(), std::uint64_t{0});

    double box = 1.0;
    for (int v = 0; v < n; ++v) box *= 2.0 * half_side;
    const double p = static_cast<double>(hits) / static_cast<double>(samples);
    const double se = box * std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
    return McResult{box * p, se, samples, hits};
}

} // namespace mayer

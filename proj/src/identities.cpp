#include "mayer/identities.hpp"

#include <array>
#include <chrono>
#include <numeric>
#include <stdexcept>

#include "mayer/heights.hpp"
#include "mayer/parallel.hpp"
#include "mayer/polytope.hpp"
#include "mayer/trees.hpp"

namespace mayer {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

BigInt pow_int(const BigInt& base, int exp) {
    BigInt r = 1;
    for (int k = 0; k < exp; ++k) r *= base;
    return r;
}

} // namespace

std::string to_string(DiscreteMethod m) {
    return m == DiscreteMethod::direct ? "direct" : "fixed_points";
}

std::string to_string(ContinuumMethod m) {
    switch (m) {
    case ContinuumMethod::direct: return "direct";
    case ContinuumMethod::per_height: return "per_height";
    default: return "trees";
    }
}

DiscreteMethod parse_discrete_method(const std::string& s) {
    if (s == "direct") return DiscreteMethod::direct;
    if (s == "fixed_points") return DiscreteMethod::fixed_points;
    throw std::invalid_argument("unknown discrete method: " + s);
}

ContinuumMethod parse_continuum_method(const std::string& s) {
    if (s == "direct") return ContinuumMethod::direct;
    if (s == "per_height") return ContinuumMethod::per_height;
    if (s == "trees") return ContinuumMethod::trees;
    throw std::invalid_argument("unknown continuum method: " + s);
}

IdentityReport discrete_identity(int n, DiscreteMethod method, int workers) {
    if (n < 2) throw std::invalid_argument("discrete identity needs n >= 2");
    const auto start = Clock::now();
    IdentityReport report;
    report.name = "discrete";
    report.params = {{"n", std::to_string(n)}, {"method", to_string(method)}};
    report.expected = Rational(factorial(n - 1));

    if (method == DiscreteMethod::direct) {
        const std::uint64_t total = subgraph_mask_count(n);
        const auto sums = run_chunked<std::int64_t>(
            total, workers, [n](std::uint64_t lo, std::uint64_t hi) {
                std::int64_t signed_sum = 0;
                for (const LabeledGraph& g : GraphRange(n, true, lo, hi))
                    signed_sum += g.edge_count() % 2 == 0 ? 1 : -1;
                return signed_sum;
            });
        const std::int64_t signed_sum =
            std::accumulate(sums.begin(), sums.end(), std::int64_t{0});
        report.computed = Rational(BigInt((n - 1) % 2 == 0 ? signed_sum : -signed_sum));
        report.work.graphs = total;
    } else {
        const std::uint64_t trees = count_increasing_trees(n);
        report.computed = Rational(BigInt(trees));
        report.work.graphs = trees;
    }

    report.match = report.computed == report.expected;
    report.millis = elapsed_ms(start);
    return report;
}

BigInt discrete_weight(const LabeledGraph& g, const BigInt& q, const BigInt& u) {
    return pow_int(q, count_components(g)) * pow_int(u - 1, g.edge_count());
}

Rational discrete_weight(const LabeledGraph& g, const Rational& q, const Rational& u) {
    Rational r = 1;
    for (int k = 0; k < count_components(g); ++k) r *= q;
    for (int k = 0; k < g.edge_count(); ++k) r *= u - 1;
    return r;
}

IdentityReport potts_both_sides(const LabeledGraph& h_graph, const BigInt& q, const BigInt& u) {
    if (q < 0) throw std::invalid_argument("Potts needs q >= 0 colors");
    const int n = h_graph.n_vertices();
    if (n < 1) throw std::invalid_argument("Potts needs at least one vertex");
    if (q > 0 && pow_int(q, n) > 100'000'000)
        throw capacity_error("coloring side would enumerate more than 1e8 colorings");

    const auto start = Clock::now();
    IdentityReport report;
    report.name = "potts";
    report.params = {{"n", std::to_string(n)}, {"q", q.str()}, {"u", u.str()}};

    const auto edges = h_graph.edges();
    std::vector<BigInt> u_pow(edges.size() + 1);
    u_pow[0] = 1;
    for (std::size_t k = 1; k < u_pow.size(); ++k) u_pow[k] = u_pow[k - 1] * u;

    // Coloring side: sum over all c : V -> {1..q} of u^{#monochromatic edges}.
    BigInt colorings_sum = 0;
    const int qi = static_cast<int>(q);
    std::uint64_t colorings = 0;
    if (qi > 0) {
        std::vector<int> color(n, 0);
        for (;;) {
            ++colorings;
            int mono = 0;
            for (Edge e : edges) mono += color[e.i] == color[e.j];
            colorings_sum += u_pow[mono];
            int v = n - 1;
            while (v >= 0 && color[v] == qi - 1) color[v--] = 0;
            if (v < 0) break;
            ++color[v];
        }
    }

    // Subgraph side: sum over G subseteq H of q^{c(G)} (u-1)^{e(G)}.
    BigInt subgraph_sum = 0;
    const int slots = static_cast<int>(edges.size());
    if (slots > 30)
        throw capacity_error("subgraph side would enumerate more than 2^30 subgraphs");
    std::vector<int> slot_of(slots);
    for (int k = 0; k < slots; ++k) slot_of[k] = edge_index(edges[k]);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots); ++mask) {
        EdgeBits bits = 0;
        for (int k = 0; k < slots; ++k)
            if ((mask >> k) & 1) bits |= EdgeBits{1} << slot_of[k];
        const LabeledGraph g(n, bits);
        subgraph_sum += discrete_weight(g, q, u);
        ++report.work.graphs;
    }

    report.computed = Rational(colorings_sum);
    report.expected = Rational(subgraph_sum);
    report.work.pairs = colorings;
    report.match = report.computed == report.expected;
    report.millis = elapsed_ms(start);
    return report;
}

namespace {

// Signed sum of (-1)^{e(G)} over connected spanning subgraphs of `host`.
// Edges are decided one by one; once a partial subgraph already connects all
// vertices, the completions over the r remaining edges cancel in pairs
// (sum over subsets of (-1)^{|S|} is (1-1)^r), so only the exhausted leaf
// contributes and the rest of the subtree is pruned.
class ConnectedSignedSum {
public:
    explicit ConnectedSignedSum(const LabeledGraph& host)
        : m_(host.n_vertices()), edges_(host.edges()) {}

    std::int64_t run() {
        std::array<std::int8_t, kMaxVertices> dsu;
        for (int v = 0; v < m_; ++v) dsu[v] = static_cast<std::int8_t>(v);
        return rec(0, 1, dsu, m_);
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    static int find(std::array<std::int8_t, kMaxVertices>& dsu, int v) {
        while (dsu[v] != v) {
            dsu[v] = dsu[dsu[v]];
            v = dsu[v];
        }
        return v;
    }

    std::int64_t rec(std::size_t k, std::int64_t parity,
                     std::array<std::int8_t, kMaxVertices> dsu, int comps) {
        ++nodes_;
        if (comps == 1) return k == edges_.size() ? parity : 0;
        if (edges_.size() - k < static_cast<std::size_t>(comps - 1)) return 0;
        std::int64_t sum = rec(k + 1, parity, dsu, comps);
        const int a = find(dsu, edges_[k].i);
        const int b = find(dsu, edges_[k].j);
        if (a != b) {
            dsu[a] = static_cast<std::int8_t>(b);
            --comps;
        }
        return sum + rec(k + 1, -parity, dsu, comps);
    }

    int m_;
    std::vector<Edge> edges_;
    std::uint64_t nodes_ = 0;
};

// Odometer position -> height vector in [-n, n]^n; index is little-endian
// base (2n+1).
HeightVector height_at(std::uint64_t index, int n) {
    std::vector<int> h(n);
    const std::uint64_t base = 2 * static_cast<std::uint64_t>(n) + 1;
    for (int k = 0; k < n; ++k) {
        h[k] = static_cast<int>(index % base) - n;
        index /= base;
    }
    return HeightVector(std::move(h));
}

struct PerHeightChunk {
    std::int64_t sum = 0;
    std::uint64_t nodes = 0;
    std::uint64_t connected_heights = 0;
};

} // namespace

IdentityReport continuum_identity(int n, ContinuumMethod method, int workers) {
    if (n < 1) throw std::invalid_argument("continuum identity needs n >= 1");
    const auto start = Clock::now();
    IdentityReport report;
    report.name = "continuum";
    report.params = {{"n", std::to_string(n)}, {"method", to_string(method)}};
    const BigInt magnitude = pow_int(BigInt(n + 1), n);
    report.expected = Rational(n % 2 == 0 ? magnitude : -magnitude);

    switch (method) {
    case ContinuumMethod::direct: {
        // Integer bookkeeping: sum sign * (n! Vol) and divide once at the end.
        const int m = n + 1;
        const std::uint64_t total = subgraph_mask_count(m);
        struct Chunk {
            std::int64_t signed_pairs = 0;
            std::uint64_t pairs = 0;
        };
        const auto chunks = run_chunked<Chunk>(
            total, workers, [m](std::uint64_t lo, std::uint64_t hi) {
                Chunk c;
                for (const LabeledGraph& g : GraphRange(m, true, lo, hi)) {
                    const auto pairs = count_subpolytopes(g);
                    c.pairs += pairs;
                    const auto signed_pairs = static_cast<std::int64_t>(pairs);
                    c.signed_pairs += g.edge_count() % 2 == 0 ? signed_pairs : -signed_pairs;
                }
                return c;
            });
        std::int64_t signed_pairs = 0;
        for (const auto& c : chunks) {
            signed_pairs += c.signed_pairs;
            report.work.pairs += c.pairs;
        }
        report.work.graphs = total;
        report.computed = Rational(BigInt(signed_pairs), factorial(n));
        if (!is_integral(report.computed))
            throw std::logic_error("weight sum over connected graphs must be an integer");
        break;
    }
    case ContinuumMethod::per_height: {
        std::uint64_t total = 1;
        for (int k = 0; k < n; ++k) total *= 2 * static_cast<std::uint64_t>(n) + 1;
        const auto chunks = run_chunked<PerHeightChunk>(
            total, workers, [n](std::uint64_t lo, std::uint64_t hi) {
                PerHeightChunk c;
                for (std::uint64_t index = lo; index < hi; ++index) {
                    const HeightVector h = height_at(index, n);
                    const LabeledGraph gh = build_gh(h);
                    if (!is_connected(gh)) continue;
                    ++c.connected_heights;
                    ConnectedSignedSum inner(gh);
                    c.sum += inner.run();
                    c.nodes += inner.nodes();
                }
                return c;
            });
        std::int64_t sum = 0;
        for (const auto& c : chunks) {
            sum += c.sum;
            report.work.graphs += c.nodes;
            report.work.pairs += c.connected_heights;
        }
        report.computed = Rational(BigInt(sum));
        break;
    }
    case ContinuumMethod::trees: {
        // Count rooted Cayley trees while exercising the descent encoding:
        // each tree must be h-increasing for its own height vector.
        std::uint64_t count = 0;
        for_each_rooted_cayley_tree(n + 1, [&](const RootedTree& t) {
            const HeightVector h = tree_to_height(t);
            if (!is_h_increasing_tree(t, h))
                throw std::logic_error("descent encoding produced a non-increasing tree");
            ++count;
        });
        report.work.graphs = count;
        const BigInt value = BigInt(count);
        report.computed = Rational(n % 2 == 0 ? value : -value);
        break;
    }
    }

    report.match = report.computed == report.expected;
    report.millis = elapsed_ms(start);
    return report;
}

namespace {

using Series = std::vector<Rational>; // coefficient k at index k

Series mul_trunc(const Series& a, const Series& b, int degree) {
    Series c(degree + 1, Rational(0));
    for (int i = 0; i <= degree && i < static_cast<int>(a.size()); ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j + i <= degree && j < static_cast<int>(b.size()); ++j)
            c[i + j] += a[i] * b[j];
    }
    return c;
}

// exp of a series with zero constant term: sum of s^k / k!.
Series exp_trunc(const Series& s, int degree) {
    Series result(degree + 1, Rational(0));
    result[0] = 1;
    Series power(1, Rational(1));
    BigInt kfact = 1;
    for (int k = 1; k <= degree; ++k) {
        power = mul_trunc(power, s, degree);
        kfact *= k;
        for (int d = k; d <= degree; ++d) result[d] += power[d] / Rational(kfact);
    }
    return result;
}

} // namespace

Rational lambert_coefficient(int m) {
    if (m < 1) throw std::invalid_argument("lambert coefficient needs m >= 1");
    // Fixed-point iteration of L = z exp(-L), starting from L = z; each pass
    // settles one more coefficient, so m passes suffice.
    Series l(m + 1, Rational(0));
    l[1] = 1;
    for (int pass = 0; pass < m; ++pass) {
        Series neg(l);
        for (auto& c : neg) c = -c;
        const Series e = exp_trunc(neg, m);
        Series next(m + 1, Rational(0));
        for (int d = 1; d <= m; ++d) next[d] = e[d - 1];
        if (next == l) break;
        l = std::move(next);
    }
    return l[m];
}

Rational lambert_closed_form(int m) {
    if (m < 1) throw std::invalid_argument("lambert coefficient needs m >= 1");
    const BigInt magnitude = pow_int(BigInt(m), m - 1);
    return Rational((m - 1) % 2 == 0 ? magnitude : -magnitude, factorial(m));
}

IdentityReport lambert_report(int m) {
    const auto start = Clock::now();
    IdentityReport report;
    report.name = "lambert";
    report.params = {{"m", std::to_string(m)}};
    report.integral = false;
    report.computed = lambert_coefficient(m);
    report.expected = lambert_closed_form(m);
    report.match = report.computed == report.expected;
    report.millis = elapsed_ms(start);
    return report;
}

IdentityReport pressure_series_check(int n) {
    const auto start = Clock::now();
    const IdentityReport weights = continuum_identity(n, ContinuumMethod::direct);
    IdentityReport report;
    report.name = "pressure";
    report.params = {{"n", std::to_string(n)}};
    report.integral = false;
    report.computed = lambert_coefficient(n + 1);
    report.expected = weights.computed / Rational(factorial(n + 1));
    report.work = weights.work;
    report.match = report.computed == report.expected;
    report.millis = elapsed_ms(start);
    return report;
}

} // namespace mayer

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mayer/graph.hpp"
#include "mayer/rational.hpp"

namespace mayer {

struct WorkCounters {
    std::uint64_t graphs = 0; // graphs / enumeration nodes visited
    std::uint64_t pairs = 0;  // (h, sigma) pairs or height vectors counted
};

// Outcome of one identity computation. match means computed == expected
// exactly; there is never a tolerance.
struct IdentityReport {
    std::string name;
    std::vector<std::pair<std::string, std::string>> params;
    Rational computed;
    Rational expected;
    bool integral = true; // render values as plain integers rather than "p/q"
    bool match = false;
    WorkCounters work;
    double millis = 0.0;
};

enum class DiscreteMethod { direct, fixed_points };
enum class ContinuumMethod { direct, per_height, trees };

std::string to_string(DiscreteMethod m);
std::string to_string(ContinuumMethod m);
DiscreteMethod parse_discrete_method(const std::string& s);
ContinuumMethod parse_continuum_method(const std::string& s);

// (-1)^{n-1} sum of (-1)^{e(G)} over connected G on n vertices, expected
// (n-1)!. direct enumerates all 2^C(n,2) subgraphs; fixed_points counts
// increasing trees, which is what the killing involution leaves behind.
IdentityReport discrete_identity(int n, DiscreteMethod method, int workers = 1);

// W(G) = q^{c(G)} (u-1)^{e(G)}.
BigInt discrete_weight(const LabeledGraph& g, const BigInt& q, const BigInt& u);
Rational discrete_weight(const LabeledGraph& g, const Rational& q, const Rational& u);

// Potts partition function of H versus its Fortuin-Kasteleyn subgraph
// expansion: sum_c u^{delta(c)} == sum_{G subseteq H} q^{c(G)} (u-1)^{e(G)}.
IdentityReport potts_both_sides(const LabeledGraph& h_graph, const BigInt& q, const BigInt& u);

// Sum of second Mayer weights over connected graphs on {0..n}, expected
// (-1)^n (n+1)^n, by three independent routes: exact polytope volumes
// (direct), the rearranged per-height sum (per_height), and the rooted
// Cayley tree count through the descent encoding (trees).
IdentityReport continuum_identity(int n, ContinuumMethod method, int workers = 1);

// [z^m] L(z) for L = z exp(-L), by fixed-point iteration on truncated series
// with exact rational coefficients.
Rational lambert_coefficient(int m);

// Closed form (-1)^{m-1} m^{m-1} / m!, computed independently of the series.
Rational lambert_closed_form(int m);

// Compares the two Lambert routes.
IdentityReport lambert_report(int m);

// [z^{n+1}] L(z) == (sum of Mayer weights over C_n) / (n+1)!.
IdentityReport pressure_series_check(int n);

} // namespace mayer

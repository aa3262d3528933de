#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mayer/graph.hpp"
#include "mayer/heights.hpp"
#include "mayer/permutation.hpp"
#include "mayer/rational.hpp"

namespace mayer {

// Sign and exact volume making up the second Mayer weight
// w(G) = (-1)^{e(G)} Vol(Pi_G).
struct MayerWeight {
    int sign;        // (-1)^{e(G)}
    Rational volume; // Vol(Pi_G) = pairs / n!
    Rational value;  // sign * volume
};

struct McResult {
    double estimate;
    double std_error;
    std::uint64_t samples;
    std::uint64_t hits;
};

// True iff the unit cell pi(h, sigma) lies inside Pi_G, i.e. every edge (i,j)
// of G satisfies h_i - h_j in {0, sign(sigma(j) - sigma(i))} with h_0 = 0 and
// sigma(0) = 0. False means the interiors are disjoint.
bool subpolytope_in(const HeightVector& h, const Permutation& sigma, const LabeledGraph& g);

// Number of admissible (h, sigma) pairs; equals n! * Vol(Pi_G) for connected G.
std::uint64_t count_subpolytopes(const LabeledGraph& g, int workers = 1);

// The admissible pairs themselves, sigma in lexicographic order and heights in
// the spanning-tree propagation order described in polytope.cpp.
std::vector<std::pair<HeightVector, Permutation>> enumerate_subpolytopes(const LabeledGraph& g);

// Vol(Pi_G) as a reduced rational. Throws for disconnected G (infinite volume).
Rational exact_volume(const LabeledGraph& g, int workers = 1);

MayerWeight mayer_weight(const LabeledGraph& g, int workers = 1);

// Monte-Carlo cross-check: uniform samples from the box [-n, n]^n, closed
// constraints |x_i - x_j| <= 1 per edge, x_0 = 0. Deterministic for a given
// (seed, samples, workers) via per-worker splitmix64 substreams.
McResult mc_volume(const LabeledGraph& g, std::uint64_t samples, std::uint64_t seed,
                   int workers = 1);

} // namespace mayer

#pragma once

#include "mptkit/graph.hpp"
#include "mptkit/rational.hpp"

#include <optional>
#include <span>

namespace mptkit {

// Exhaustive searches used as ground truth by the test suites. Each refuses
// (RefusalError) above its vertex limit; limits are per call so slower test
// tiers can raise them.
inline constexpr int kAlphaOracleLimit = 20;
inline constexpr int kColoringOracleLimit = 12;

struct IndependentSetResult {
    Rational value;
    VertexSet set;
};

// Maximum (weight) independent set. Empty weights mean unit weights.
// Among optimal sets the lexicographically smallest sorted set is returned.
IndependentSetResult brute_force_alpha(const Graph& g, std::span<const Rational> weights = {},
    int limit = kAlphaOracleLimit);

// A proper coloring with at most k colors, or nullopt. Vertices are colored
// in a fixed deterministic branching order; new colors are opened one at a
// time, so the first colored vertex always receives color 0.
std::optional<Coloring> brute_force_chi(const Graph& g, int k, int limit = kColoringOracleLimit);

// Optimal coloring; result.k is the chromatic number.
Coloring brute_force_chi_exact(const Graph& g, int limit = kColoringOracleLimit);

// Minimum clique cover, computed as an optimal coloring of the complement.
// Cliques are listed by smallest member.
CliqueCover brute_force_gamma(const Graph& g, int limit = kColoringOracleLimit);

// Size of a maximum clique (via brute_force_alpha on the complement).
int brute_force_omega(const Graph& g, int limit = kAlphaOracleLimit);

} // namespace mptkit

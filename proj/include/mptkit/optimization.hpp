#pragma once

#include "mptkit/graph.hpp"
#include "mptkit/representations.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace mptkit {

struct WisResult {
    Rational value;
    VertexSet set;
};

// opt[a,b] over positions 0..n+1; 0 and n+1 are the sentinel shapes.
struct DpTable {
    int n = 0;
    std::vector<Rational> opt;

    const Rational& at(int a, int b) const { return opt[static_cast<std::size_t>(a) * (n + 2) + b]; }
};

// Weighted independent set on a canonical representation. Empty weights mean
// unit weights; negative weights raise InputError. Right ends compare by
// (e, position), and among maximizing dominants the leftmost wins.
WisResult max_weight_independent_set(const MptRepresentation& rep, std::span<const Rational> weights = {});

// The filled table behind max_weight_independent_set.
DpTable wis_table(const MptRepresentation& rep, std::span<const Rational> weights = {});

// Optimal cover of an interval graph: repeatedly take the uncovered interval
// with the smallest (e, index) and group every uncovered interval containing
// that end.
CliqueCover interval_clique_cover(const IntervalRepresentation& iv);

// Pieces of the two-approximation, in vertex ids.
struct CliqueCoverReport {
    VertexSet greedy;                  // i_1 < ... < i_k by position
    std::vector<VertexSet> corner_cliques; // non-empty C_j
    std::vector<VertexSet> blocks;     // remaining vertices between greedy members
    CliqueCover cover;
};

// Cover of size at most twice the independence number. Requires a canonical
// representation; the result is validated before return.
CliqueCoverReport clique_cover_2approx_report(const MptRepresentation& rep);
CliqueCover clique_cover_2approx(const MptRepresentation& rep);

struct GreedyColoring {
    Coloring coloring;
    std::optional<int> clique_number; // exact, when n fits the oracle
};

// First-fit in corner order.
GreedyColoring greedy_coloring(const MptRepresentation& rep);

// Arc on the unit circle [0,1); start > end wraps through 0.
struct Arc {
    Rational start;
    Rational end;

    bool operator==(const Arc&) const = default;
};

struct CircularArcRepresentation {
    std::vector<Arc> arcs;

    int size() const { return static_cast<int>(arcs.size()); }
    bool operator==(const CircularArcRepresentation&) const = default;
};

void validate(const CircularArcRepresentation& arcs);
bool arc_contains(const Arc& arc, const Rational& x);
Graph circular_arc_graph(const CircularArcRepresentation& arcs);

// Seeded arcs with integer endpoints over 8n slots, scaled into [0,1).
CircularArcRepresentation random_circular_arcs(int n, std::uint64_t seed);

// Midpoint of the first gap between distinct sorted endpoints.
Rational default_cut(const CircularArcRepresentation& arcs);

enum class ReductionCase {
    split,        // 1 <= l <= k: G' = H plus the k-clique
    no_crossing,  // l = 0: G' = G
    clique,       // l > k: G' = K_{k+1}
};

struct SplitVertex {
    Vertex original;
    Vertex first;  // piece before the cut, keeps the original id
    Vertex second; // piece after the cut
};

struct ReductionOutput {
    ReductionCase kind = ReductionCase::split;
    Rational cut;
    int crossing = 0; // l
    Graph g_prime;
    MptRepresentation rep; // canonical, mpt_adjacency(rep) == g_prime
    std::vector<SplitVertex> split_map;
    VertexSet clique_vertices; // u_1..u_k
};

// Cuts the circle at `cut` and builds G' with chi(G) <= k iff chi(G') <= k.
// Layout for the split case: originals keep ids 0..n-1, second pieces take
// n..n+l-1 in crossing order, u_1..u_k take n+l..n+l+k-1. InputError when
// k <= 2 or the cut is an arc endpoint.
ReductionOutput coloring_hardness_reduction(const CircularArcRepresentation& arcs, int k,
    std::optional<Rational> cut = std::nullopt);

std::string_view to_string(ReductionCase kind);

} // namespace mptkit

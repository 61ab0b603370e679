#pragma once

#include "mptkit/graph.hpp"
#include "mptkit/orders.hpp"
#include "mptkit/representations.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mptkit {

enum class IntervalWitness { none, chordless_cycle, asteroidal_triple };

struct IntervalVerdict {
    bool is_interval = false;
    IntervalWitness witness_kind = IntervalWitness::none;
    // Chordless cycle in cyclic order, or an asteroidal triple in ascending order.
    std::vector<Vertex> witness;
    std::optional<VertexOrder> i_order; // set iff is_interval, verified
};

// Interval iff chordal and free of asteroidal triples. Chordality comes from
// maximum cardinality search. The reported cycle runs x, a, ..., b for the
// first x and first non-adjacent neighbors a < b of x joined by a path
// avoiding the rest of N[x]; that path is a shortest one. The triple is the
// lexicographically first. On success an I-order is built by a prefix
// search and checked with verify_i_order.
IntervalVerdict is_interval_graph(const Graph& g);

// True when `witness` really refutes g: a chordless cycle of length >= 4 or
// an asteroidal triple.
bool witness_holds(const Graph& g, const IntervalVerdict& verdict);

enum class CertificateKind { common_neighborhood, order_found, order_exhausted };

struct MptCertificate {
    CertificateKind kind = CertificateKind::common_neighborhood;
    std::pair<Vertex, Vertex> pair {};   // common_neighborhood: non-adjacent u < v
    VertexSet common;                    // N(u) ∩ N(v) in host ids
    IntervalVerdict verdict;             // on G[common], witness in host ids
    std::optional<VertexOrder> order;    // order_found
};

// One certificate per non-adjacent pair u < v whose common neighborhood is
// not an interval graph. Any certificate proves g is not MPT; an empty list
// proves nothing.
std::vector<MptCertificate> common_neighborhood_certificates(const Graph& g);

// "PAIR u v : NOT-INTERVAL witness=a,b,c"
std::string format_certificate(const MptCertificate& cert);

struct NeighborhoodPartition {
    VertexSet left;  // neighbors whose point precedes p_v
    VertexSet right; // the other neighbors
    std::vector<Edge> between;
};

// Splits N(v) by the point order. Both halves are checked to induce
// interval graphs; a failure is a logic_error.
NeighborhoodPartition neighborhood_partition(const MptRepresentation& rep, Vertex v);

inline constexpr int kOuterplanarLimit = 64;

// Edge-count filter, then planarity of g plus one vertex joined to all of g.
// RefusalError above the limit.
bool is_outerplanar(const Graph& g, int limit = kOuterplanarLimit);

// Non-MPT generators: "k222", "complement-cycle:7",
// "universal-extension-of:<family>" (base must be non-interval) and
// "full-subdivision-of:<family>" (base must be non-outerplanar). Minimality
// of the base is not checked.
Graph non_mpt_family(std::string_view spec);

enum class Verdict { mpt, not_mpt, unknown };

std::string_view to_string(Verdict verdict);

struct Recognition {
    Verdict verdict = Verdict::unknown;
    std::optional<VertexOrder> order;        // mpt: verified MPT-order
    std::vector<MptCertificate> certificates; // not_mpt by certificate
    bool exhausted = false;                  // not_mpt by exhaustive search
};

// Interval graphs are accepted with their I-order, then common-neighborhood
// certificates refute, then the order search decides when n <= max_n.
// Anything left is unknown.
Recognition recognize(const Graph& g, int max_n = kOrderOracleLimit);

} // namespace mptkit

#pragma once

#include "mptkit/graph.hpp"
#include "mptkit/representations.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mptkit {

// sequence[i] is the vertex at position i.
struct VertexOrder {
    std::vector<Vertex> sequence;

    int size() const { return static_cast<int>(sequence.size()); }
    bool operator==(const VertexOrder&) const = default;

    // position[v] for every vertex v.
    std::vector<int> positions() const;
};

VertexOrder identity_order(int n);
VertexOrder reversed(const VertexOrder& ord);

// InputError unless ord is a permutation of 0..g.order()-1.
void validate_order(const Graph& g, const VertexOrder& ord);

enum class OrderKind { i_order, mpt_order };

// A triple (I-order) or quadruple (MPT-order) of vertices, listed in order
// position, that breaks the ordering condition.
struct OrderViolation {
    OrderKind kind;
    std::vector<Vertex> vertices;
    std::vector<int> positions;

    std::string describe() const; // "(u,v,w)" / "(u,v,w,x)" in vertex ids
};

class OrderViolationError : public std::runtime_error {
public:
    explicit OrderViolationError(OrderViolation violation);
    const OrderViolation& violation() const { return violation_; }

private:
    OrderViolation violation_;
};

// Lexicographically first (by positions) quadruple u<v<w<x with uw, vx in E
// and vw not in E, or nullopt when ord is an MPT-order.
std::optional<OrderViolation> verify_mpt_order(const Graph& g, const VertexOrder& ord);

// Lexicographically first triple u<v<w with uw in E and uv not in E.
std::optional<OrderViolation> verify_i_order(const Graph& g, const VertexOrder& ord);

// Canonical representation from an MPT-order: p = position (1-based),
// s = min(position, first neighbor position), e = max(position, last
// neighbor position). Throws OrderViolationError if ord is not an MPT-order.
MptRepresentation rep_from_order(const Graph& g, const VertexOrder& ord);

// Same construction without the order check; used by oracles that need to
// observe what happens on arbitrary orders.
MptRepresentation rep_from_order_unchecked(const Graph& g, const VertexOrder& ord);

// Vertices sorted by (p, index).
VertexOrder order_from_rep(const MptRepresentation& rep);

inline constexpr int kOrderOracleLimit = 12;

// Backtracking over order prefixes; candidates are tried by ascending
// (degree, index), so the result is the least valid order under that
// ranking. nullopt means g has no MPT-order, i.e. g is not MPT.
std::optional<VertexOrder> brute_force_mpt_order(const Graph& g, int limit = kOrderOracleLimit);

// Exhaustive I-order search over all permutations (tiny n only).
std::optional<VertexOrder> brute_force_i_order(const Graph& g, int limit = 8);

struct TwoIntervalDecomposition {
    IntervalRepresentation h1; // [p, e]
    IntervalRepresentation h2; // [s, p]
};

TwoIntervalDecomposition two_interval_decomposition(const MptRepresentation& rep);

} // namespace mptkit

#pragma once

#include "mptkit/graph.hpp"
#include "mptkit/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace mptkit {

// Interval [s, e] with a distinguished point s <= p <= e.
struct PointedInterval {
    Rational s;
    Rational p;
    Rational e;

    bool operator==(const PointedInterval&) const = default;
};

// One pointed interval per vertex. Canonical when the points are a
// permutation of 1..n and every s, e is an integer in 1..n.
struct MptRepresentation {
    std::vector<PointedInterval> items;

    int size() const { return static_cast<int>(items.size()); }
    bool operator==(const MptRepresentation&) const = default;
};

// L-shape with top point (c, -t), corner (c, -c) and right end (r, -c).
struct LShape {
    Rational t;
    Rational c;
    Rational r;

    bool operator==(const LShape&) const = default;
};

struct LinearLSystem {
    std::vector<LShape> shapes;

    int size() const { return static_cast<int>(shapes.size()); }
    bool operator==(const LinearLSystem&) const = default;
};

struct Interval {
    Rational s;
    Rational e;

    bool operator==(const Interval&) const = default;
};

struct IntervalRepresentation {
    std::vector<Interval> items;

    int size() const { return static_cast<int>(items.size()); }
    bool operator==(const IntervalRepresentation&) const = default;
};

enum class RayDirection { down, left };

struct Ray {
    RayDirection direction;
    Rational x;
    Rational y;

    bool operator==(const Ray&) const = default;
};

struct RaySystem {
    std::vector<Ray> rays;

    int size() const { return static_cast<int>(rays.size()); }
};

// InputError unless s <= p <= e for every item.
void validate(const MptRepresentation& rep);
// InputError unless t <= c <= r for every shape and corners are distinct.
void validate(const LinearLSystem& sys);
void validate(const IntervalRepresentation& iv);

bool is_canonical(const MptRepresentation& rep);
bool has_distinct_points(const MptRepresentation& rep);

// uv is an edge iff p_u lies in [s_v, e_v] and p_v lies in [s_u, e_u].
Graph mpt_adjacency(const MptRepresentation& rep);

// Closed-interval intersection graph.
Graph interval_adjacency(const IntervalRepresentation& iv);

// Intersection graph of the L-shapes, evaluated segment against segment.
Graph lsystem_adjacency(const LinearLSystem& sys);

// (s, p, e) -> (t = s, c = p, r = e). Points must be pairwise distinct.
LinearLSystem rep_to_lsystem(const MptRepresentation& rep);
MptRepresentation lsystem_to_rep(const LinearLSystem& sys);

// Anchored system (t = 0, c = s, r = e). Inputs with negative or repeated
// left endpoints are first replaced by an order-equivalent integer model.
LinearLSystem interval_to_anchored_lsystem(const IntervalRepresentation& iv);

// Intervals (c, r) of an anchored system.
IntervalRepresentation anchored_lsystem_to_intervals(const LinearLSystem& sys);

// max(t) when max(t) <= min(c), otherwise nullopt. Empty systems anchor at 0.
std::optional<Rational> anchor_of(const LinearLSystem& sys);

// Truncates every ray on a line x + y = -C below all origins and crossings,
// then shifts the picture so that line becomes y = -x.
LinearLSystem rays_to_lsystem(const RaySystem& rs);
Graph ray_adjacency(const RaySystem& rs);

// Same-adjacency canonical representation built from the point order.
MptRepresentation normalize(const MptRepresentation& rep);

// Replaces interval endpoints by ranks 1..2n, starts before ends on ties and
// ties broken by index; closed intersections are preserved exactly.
IntervalRepresentation rank_intervals(const IntervalRepresentation& iv);

// Seeded generators: p_i = i (1-based), s_i uniform in [1, i], e_i uniform
// in [i, n]. The interval variant drops p.
MptRepresentation random_mpt_rep(int n, std::uint64_t seed);
IntervalRepresentation random_interval_rep(int n, std::uint64_t seed);

} // namespace mptkit

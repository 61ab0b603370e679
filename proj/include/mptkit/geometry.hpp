#pragma once

#include "mptkit/graph.hpp"
#include "mptkit/orders.hpp"
#include "mptkit/representations.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mptkit {

struct RationalPoint {
    Rational x;
    Rational y;

    bool operator==(const RationalPoint&) const = default;
};

// Closed segment; degenerate segments are single points and say so.
struct Segment {
    RationalPoint a;
    RationalPoint b;
    bool degenerate = false;

    bool operator==(const Segment&) const = default;
};

struct CyclicSegmentSystem {
    std::vector<Segment> segments;
    std::vector<RationalPoint> tangency_points;

    int size() const { return static_cast<int>(segments.size()); }
};

// Tangents to y = x^2 at x = a and x = b meet at ((a+b)/2, ab).
RationalPoint tangent_crossing(const Rational& a, const Rational& b);

// The vertex at 1-based position i lies on the tangent at (i, i^2) and runs
// between its crossings with the tangents of its extreme neighbor positions
// (its own tangency point when it is itself extreme). Throws
// OrderViolationError unless ord is an MPT-order of g.
CyclicSegmentSystem cyclic_segments_from_order(const Graph& g, const VertexOrder& ord);

// Same construction on any permutation; oracles use it to watch it fail.
CyclicSegmentSystem cyclic_segments_from_order_unchecked(const Graph& g, const VertexOrder& ord);

bool segments_intersect(const Segment& s, const Segment& t);
Graph segment_intersection_graph(const std::vector<Segment>& segments);

struct OuterplanarOrder {
    VertexOrder order;
    // attachment[i] = (u, v) for the vertex at position i >= 2: u owns the
    // horizontal leg it touches, v the vertical one. Empty for positions 0, 1.
    std::vector<std::optional<std::pair<Vertex, Vertex>>> attachment;
};

// Grows the graph from an outer base edge, stacking each new vertex on an
// outer edge it closes a triangle with. Throws PreconditionError naming the
// reason when g is not maximal outerplanar.
OuterplanarOrder outerplanar_order(const Graph& g);

struct Contact {
    Vertex u;
    Vertex v;
    RationalPoint point;

    bool operator==(const Contact&) const = default;
};

struct ContactLSystem {
    LinearLSystem system;
    std::vector<Contact> contacts;
};

// Equilateral contact system of a maximal outerplanar graph. With a
// triangulation supplied, g may be any spanning subgraph of it: the system is
// built for the triangulation and every contact that is not an edge of g is
// released by pulling the later shape's touching end back by d/4.
ContactLSystem contact_lsystem_from_outerplanar(const Graph& g);
ContactLSystem contact_lsystem_from_outerplanar(const Graph& g, const Graph& triangulation);

// Intersection graph where touching counts, i.e. lsystem_adjacency.
Graph contact_graph(const ContactLSystem& sys);

struct ContactCheck {
    std::optional<std::pair<Vertex, Vertex>> violation; // first crossing pair
    bool equilateral = true;

    bool ok() const { return !violation; }
};

// Every intersecting pair with c_u < c_v must meet as c_u = t_v or r_u = c_v.
ContactCheck verify_contact(const LinearLSystem& sys);

// Seeded: triangle, then each vertex stacked on a uniformly chosen outer
// edge, then a uniform relabeling.
Graph random_maximal_outerplanar(int n, std::uint64_t seed);

struct RenderOptions {
    double scale = 40.0;
    bool labels = false;
};

// Deterministic SVG 1.1. The reference curve (corner line or parabola) comes
// first, then one polyline per shape or segment.
std::string render_svg(const LinearLSystem& sys, const RenderOptions& options = {});
std::string render_svg(const MptRepresentation& rep, const RenderOptions& options = {});
std::string render_svg(const CyclicSegmentSystem& sys, const RenderOptions& options = {});
std::string render_svg(const ContactLSystem& sys, const RenderOptions& options = {});

} // namespace mptkit

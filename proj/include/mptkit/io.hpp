#pragma once

#include "mptkit/geometry.hpp"
#include "mptkit/graph.hpp"
#include "mptkit/optimization.hpp"
#include "mptkit/orders.hpp"
#include "mptkit/representations.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mptkit::io {

// Text artifacts: optional "mptkit-format 1" version line, '#' comments,
// blank lines ignored, LF endings. Emitted files start with the version line
// and a "# kind: <name>" comment, which is how consumers tell kinds apart.
inline constexpr std::string_view kVersionLine = "mptkit-format 1";

struct Line {
    int number = 0; // 1-based line in the source text
    std::vector<std::string> tokens;
};

struct Document {
    std::string source; // file name, or "<stdin>"
    std::optional<std::string> kind;
    std::vector<Line> lines; // significant lines only
};

Document parse_document(std::string_view text, std::string source);

// "-" reads standard input. InputError when the file cannot be read.
Document read_document(const std::string& path);

// InputError "source:line: message", or "source: message" when line is 0.
[[noreturn]] void fail(const Document& doc, int line, const std::string& message);

// Graph: "n m", then m lines "u v" (0-based).
Graph parse_graph(const Document& doc);
// Representation: "n", then n lines "s p e".
MptRepresentation parse_rep(const Document& doc);
// Intervals: "n", then n lines "s e".
IntervalRepresentation parse_intervals(const Document& doc);
// L-system: "n", then n lines "t c r". A trailing "contacts m" section is
// ignored here and read by parse_contact.
LinearLSystem parse_lsystem(const Document& doc);
// L-system followed by "contacts m" and m lines "u v x y".
ContactLSystem parse_contact(const Document& doc);
// Rays: "n", then n lines "down|left x y".
RaySystem parse_rays(const Document& doc);
// One line of n vertex ids.
VertexOrder parse_order(const Document& doc);
// Lines "vertex weight", each of 0..n-1 exactly once.
std::vector<Rational> parse_weights(const Document& doc, int n);
// Arcs: "n", then n lines "start end" in [0, 1).
CircularArcRepresentation parse_arcs(const Document& doc);
// Segments: "n", then n lines "ax ay bx by"; equal ends make a point.
std::vector<Segment> parse_segments(const Document& doc);

std::string header(std::string_view kind);

std::string format_graph(const Graph& g);
std::string format_rep(const MptRepresentation& rep);
std::string format_intervals(const IntervalRepresentation& iv);
std::string format_lsystem(const LinearLSystem& sys);
std::string format_contact(const ContactLSystem& sys);
std::string format_rays(const RaySystem& rs);
std::string format_order(const VertexOrder& ord);
std::string format_weights(const std::vector<Rational>& weights);
std::string format_arcs(const CircularArcRepresentation& arcs);
std::string format_segments(const CyclicSegmentSystem& sys);
// Lines "orig v1 v2" per split vertex.
std::string format_mapping(const ReductionOutput& reduction);

} // namespace mptkit::io

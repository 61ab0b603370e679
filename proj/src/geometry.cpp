#include "mptkit/geometry.hpp"

#include "mptkit/error.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <utility>

namespace mptkit {

RationalPoint tangent_crossing(const Rational& a, const Rational& b)
{
    return { Rational((a + b) / 2), Rational(a * b) };
}

CyclicSegmentSystem cyclic_segments_from_order(const Graph& g, const VertexOrder& ord)
{
    if (auto violation = verify_mpt_order(g, ord))
        throw OrderViolationError(*violation);
    return cyclic_segments_from_order_unchecked(g, ord);
}

CyclicSegmentSystem cyclic_segments_from_order_unchecked(const Graph& g, const VertexOrder& ord)
{
    validate_order(g, ord);
    const auto pos = ord.positions();
    const int n = g.order();
    CyclicSegmentSystem sys;
    sys.segments.resize(static_cast<std::size_t>(n));
    sys.tangency_points.resize(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
        const long i = pos[v] + 1;
        long lo = i, hi = i;
        for (Vertex w : g.neighbors(v)) {
            lo = std::min<long>(lo, pos[w] + 1);
            hi = std::max<long>(hi, pos[w] + 1);
        }
        const RationalPoint touch { Rational(i), Rational(i * i) };
        const RationalPoint a = lo == i ? touch : tangent_crossing(Rational(lo), Rational(i));
        const RationalPoint b = hi == i ? touch : tangent_crossing(Rational(i), Rational(hi));
        sys.segments[v] = { a, b, a == b };
        sys.tangency_points[v] = touch;
    }
    return sys;
}

namespace {

int orientation(const RationalPoint& p, const RationalPoint& q, const RationalPoint& r)
{
    const Rational cross = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    return sgn(cross);
}

// r is collinear with pq; is it inside their bounding box?
bool within(const RationalPoint& p, const RationalPoint& q, const RationalPoint& r)
{
    return std::min(p.x, q.x) <= r.x && r.x <= std::max(p.x, q.x) && std::min(p.y, q.y) <= r.y
        && r.y <= std::max(p.y, q.y);
}

} // namespace

bool segments_intersect(const Segment& s, const Segment& t)
{
    const int o1 = orientation(s.a, s.b, t.a);
    const int o2 = orientation(s.a, s.b, t.b);
    const int o3 = orientation(t.a, t.b, s.a);
    const int o4 = orientation(t.a, t.b, s.b);
    if (o1 * o2 < 0 && o3 * o4 < 0)
        return true;
    return (o1 == 0 && within(s.a, s.b, t.a)) || (o2 == 0 && within(s.a, s.b, t.b))
        || (o3 == 0 && within(t.a, t.b, s.a)) || (o4 == 0 && within(t.a, t.b, s.b));
}

Graph segment_intersection_graph(const std::vector<Segment>& segments)
{
    const int n = static_cast<int>(segments.size());
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (segments_intersect(segments[u], segments[v]))
                edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

namespace {

[[noreturn]] void not_maximal_outerplanar(const std::string& why)
{
    throw PreconditionError("not maximal outerplanar: " + why);
}

int triangles_on(const Graph& g, Vertex u, Vertex v)
{
    int count = 0;
    for (Vertex w : g.neighbors(u))
        count += g.adjacent(v, w);
    return count;
}

} // namespace

OuterplanarOrder outerplanar_order(const Graph& g)
{
    const int n = g.order();
    OuterplanarOrder out;
    if (n == 0)
        return out;
    if (n == 1) {
        out.order.sequence = { 0 };
        out.attachment.resize(1);
        return out;
    }
    if (n >= 3 && g.edge_count() != 2 * n - 3)
        not_maximal_outerplanar("expected " + std::to_string(2 * n - 3) + " edges, found "
            + std::to_string(g.edge_count()));
    if (n == 2 && g.edge_count() != 1)
        not_maximal_outerplanar("two vertices need their edge");
    if (!is_connected(g))
        not_maximal_outerplanar("graph is disconnected");

    std::optional<Edge> base;
    for (const auto& [u, v] : g.edges())
        if (n == 2 || triangles_on(g, u, v) == 1) {
            base = Edge { u, v };
            break;
        }
    if (!base)
        not_maximal_outerplanar("no edge lies on exactly one triangle");

    std::vector<char> placed(static_cast<std::size_t>(n), 0);
    auto place = [&](Vertex v, std::optional<std::pair<Vertex, Vertex>> at) {
        placed[v] = 1;
        out.order.sequence.push_back(v);
        out.attachment.push_back(at);
    };
    place(base->first, std::nullopt);
    place(base->second, std::nullopt);

    std::deque<std::pair<Vertex, Vertex>> outer { { base->first, base->second } };
    while (!outer.empty()) {
        auto [u, v] = outer.front();
        outer.pop_front();
        std::vector<Vertex> apex;
        for (Vertex w : g.neighbors(u))
            if (!placed[w] && g.adjacent(v, w))
                apex.push_back(w);
        if (apex.empty())
            continue;
        if (apex.size() > 1)
            not_maximal_outerplanar("edge " + describe_edge({ u, v }) + " closes triangles with "
                + std::to_string(apex[0]) + " and " + std::to_string(apex[1]));
        const Vertex w = apex.front();
        for (Vertex x : g.neighbors(w))
            if (placed[x] && x != u && x != v)
                not_maximal_outerplanar("vertex " + std::to_string(w) + " meets placed vertex "
                    + std::to_string(x) + " off its triangle");
        place(w, std::pair { u, v });
        outer.emplace_back(u, w);
        outer.emplace_back(w, v);
    }
    if (out.order.size() != n)
        not_maximal_outerplanar("growth from the outer base edge stops after "
            + std::to_string(out.order.size()) + " vertices");
    return out;
}

namespace {

struct Slot {
    Rational x;
    Rational d;
};

// Contact, plus which end of which shape makes it: the later shape's top
// (to the upper owner) or right end (to the right owner).
struct Placement {
    ContactLSystem sys;
    struct Touch {
        Vertex later;
        bool top;
        Rational d;
    };
    std::vector<Touch> touches; // parallel to sys.contacts
};

Placement place_shapes(const Graph& g)
{
    const auto plan = outerplanar_order(g);
    const int n = g.order();
    Placement out;
    out.sys.system.shapes.resize(static_cast<std::size_t>(n));
    if (n == 0)
        return out;
    auto& shapes = out.sys.system.shapes;
    const Vertex v1 = plan.order.sequence[0];
    shapes[v1] = { Rational(-1), Rational(0), Rational(1) };
    if (n == 1)
        return out;
    const Vertex v2 = plan.order.sequence[1];
    shapes[v2] = { Rational(0), Rational(1), Rational(2) };
    out.sys.contacts.push_back({ v1, v2, { Rational(1), Rational(0) } });
    out.touches.push_back({ v2, true, Rational(1) });

    // Each outer edge owns an empty semi-square with corners (x, -x),
    // (x + d, -x), (x + d, -x - d).
    std::map<std::pair<Vertex, Vertex>, Slot> slots;
    slots[{ v1, v2 }] = { Rational(0), Rational(1) };
    for (int i = 2; i < n; ++i) {
        const Vertex w = plan.order.sequence[i];
        const auto [u, v] = *plan.attachment[i];
        const Slot slot = slots.at({ u, v });
        const Rational& x = slot.x;
        const Rational& d = slot.d;
        const Rational half = d / 2;
        shapes[w] = { x, Rational(x + half), Rational(x + d) };
        out.sys.contacts.push_back({ u, w, { Rational(x + half), Rational(-x) } });
        out.touches.push_back({ w, true, d });
        out.sys.contacts.push_back({ w, v, { Rational(x + d), Rational(-x - half) } });
        out.touches.push_back({ w, false, d });
        slots[{ u, w }] = { x, half };
        slots[{ w, v }] = { Rational(x + half), half };
    }
    return out;
}

} // namespace

ContactLSystem contact_lsystem_from_outerplanar(const Graph& g)
{
    return place_shapes(g).sys;
}

ContactLSystem contact_lsystem_from_outerplanar(const Graph& g, const Graph& triangulation)
{
    if (g.order() != triangulation.order())
        throw PreconditionError("graph and triangulation differ in vertex count");
    for (const auto& e : g.edges())
        if (!triangulation.adjacent(e.first, e.second))
            throw PreconditionError("edge " + describe_edge(e) + " is missing from the triangulation");
    Placement placed = place_shapes(triangulation);
    ContactLSystem out;
    out.system = placed.sys.system;
    for (std::size_t i = 0; i < placed.sys.contacts.size(); ++i) {
        const auto& c = placed.sys.contacts[i];
        if (g.adjacent(c.u, c.v)) {
            out.contacts.push_back(c);
            continue;
        }
        const auto& touch = placed.touches[i];
        auto& shape = out.system.shapes[touch.later];
        if (touch.top)
            shape.t += touch.d / 4;
        else
            shape.r -= touch.d / 4;
    }
    return out;
}

Graph contact_graph(const ContactLSystem& sys)
{
    return lsystem_adjacency(sys.system);
}

ContactCheck verify_contact(const LinearLSystem& sys)
{
    ContactCheck check;
    for (const auto& l : sys.shapes)
        if (l.c - l.t != l.r - l.c)
            check.equilateral = false;
    const Graph g = lsystem_adjacency(sys);
    for (const auto& [a, b] : g.edges()) {
        const LShape& lo = sys.shapes[a].c < sys.shapes[b].c ? sys.shapes[a] : sys.shapes[b];
        const LShape& hi = sys.shapes[a].c < sys.shapes[b].c ? sys.shapes[b] : sys.shapes[a];
        if (lo.c != hi.t && lo.r != hi.c) {
            check.violation = std::pair { a, b };
            break;
        }
    }
    return check;
}

Graph random_maximal_outerplanar(int n, std::uint64_t seed)
{
    if (n < 0)
        throw InputError("negative vertex count");
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    if (n == 2)
        edges.emplace_back(0, 1);
    std::vector<std::pair<Vertex, Vertex>> outer;
    if (n >= 3) {
        edges = { { 0, 1 }, { 1, 2 }, { 0, 2 } };
        outer = { { 0, 1 }, { 1, 2 }, { 2, 0 } };
    }
    for (Vertex w = 3; w < n; ++w) {
        std::uniform_int_distribution<std::size_t> pick(0, outer.size() - 1);
        const std::size_t at = pick(rng);
        const auto [u, v] = outer[at];
        edges.emplace_back(u, w);
        edges.emplace_back(v, w);
        outer[at] = { u, w };
        outer.emplace_back(w, v);
    }
    std::vector<Vertex> relabel(static_cast<std::size_t>(n));
    std::iota(relabel.begin(), relabel.end(), 0);
    std::shuffle(relabel.begin(), relabel.end(), rng);
    for (auto& [u, v] : edges) {
        u = relabel[u];
        v = relabel[v];
    }
    return Graph::from_edges(n, edges);
}

namespace {

struct Canvas {
    struct Path {
        std::vector<std::pair<double, double>> points;
        const char* css;
    };
    struct Dot {
        double x, y;
    };
    struct Label {
        double x, y;
        std::string text;
    };

    Canvas(const RenderOptions& options, std::string note)
        : options(options)
        , note(std::move(note))
    {
    }

    RenderOptions options;
    std::string note;
    std::vector<Path> paths;
    std::vector<Dot> dots;
    std::vector<Label> labels;
    double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
    bool empty = true;

    void extend(double x, double y)
    {
        if (empty) {
            min_x = max_x = x;
            min_y = max_y = y;
            empty = false;
            return;
        }
        min_x = std::min(min_x, x);
        max_x = std::max(max_x, x);
        min_y = std::min(min_y, y);
        max_y = std::max(max_y, y);
    }

    static std::string num(double v)
    {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.2f", v);
        std::string s = buf;
        return s == "-0.00" ? "0.00" : s;
    }

    // World bounds must be final before emitting; y grows downwards on screen.
    std::string emit() const
    {
        const double margin = 20.0;
        const double s = options.scale;
        auto sx = [&](double x) { return num((x - min_x) * s + margin); };
        auto sy = [&](double y) { return num((max_y - y) * s + margin); };
        std::ostringstream out;
        out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
        out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
            << num((max_x - min_x) * s + 2 * margin) << "\" height=\"" << num((max_y - min_y) * s + 2 * margin)
            << "\">\n";
        out << "<!-- " << note << "; y axis flipped: screen y grows downward, world y upward -->\n";
        for (const auto& p : paths) {
            out << "<polyline class=\"" << p.css << "\" fill=\"none\" stroke=\""
                << (std::string(p.css) == "reference" ? "#999999" : "#000000") << "\" points=\"";
            for (std::size_t i = 0; i < p.points.size(); ++i)
                out << (i ? " " : "") << sx(p.points[i].first) << "," << sy(p.points[i].second);
            out << "\"/>\n";
        }
        for (const auto& d : dots)
            out << "<circle class=\"contact\" cx=\"" << sx(d.x) << "\" cy=\"" << sy(d.y) << "\" r=\"3\"/>\n";
        for (const auto& l : labels)
            out << "<text x=\"" << sx(l.x) << "\" y=\"" << sy(l.y) << "\" font-size=\"12\">" << l.text
                << "</text>\n";
        out << "</svg>\n";
        return out.str();
    }
};

void fit_default(Canvas& canvas)
{
    if (canvas.empty) {
        canvas.extend(-1, -1);
        canvas.extend(1, 1);
    }
}

void add_shapes(Canvas& canvas, const LinearLSystem& sys)
{
    for (const auto& l : sys.shapes) {
        canvas.extend(to_double(l.c), -to_double(l.t));
        canvas.extend(to_double(l.r), -to_double(l.c));
    }
    fit_default(canvas);
    // Corner line across the picture, drawn first.
    const double lo = std::min(canvas.min_x, -canvas.max_y);
    const double hi = std::max(canvas.max_x, -canvas.min_y);
    canvas.paths.push_back({ { { lo, -lo }, { hi, -hi } }, "reference" });
    canvas.extend(lo, -lo);
    canvas.extend(hi, -hi);
    for (std::size_t i = 0; i < sys.shapes.size(); ++i) {
        const auto& l = sys.shapes[i];
        const double t = to_double(l.t), c = to_double(l.c), r = to_double(l.r);
        canvas.paths.push_back({ { { c, -t }, { c, -c }, { r, -c } }, "shape" });
        if (canvas.options.labels)
            canvas.labels.push_back({ c, -c, std::to_string(i) });
    }
}

} // namespace

std::string render_svg(const LinearLSystem& sys, const RenderOptions& options)
{
    Canvas canvas { options, "linear L-system, corners on y = -x" };
    add_shapes(canvas, sys);
    return canvas.emit();
}

std::string render_svg(const MptRepresentation& rep, const RenderOptions& options)
{
    return render_svg(rep_to_lsystem(has_distinct_points(rep) ? rep : normalize(rep)), options);
}

std::string render_svg(const ContactLSystem& sys, const RenderOptions& options)
{
    Canvas canvas { options, "contact L-system, corners on y = -x" };
    add_shapes(canvas, sys.system);
    for (const auto& c : sys.contacts)
        canvas.dots.push_back({ to_double(c.point.x), to_double(c.point.y) });
    return canvas.emit();
}

std::string render_svg(const CyclicSegmentSystem& sys, const RenderOptions& options)
{
    Canvas canvas { options, "cyclic segments tangent to y = x^2" };
    for (const auto& s : sys.segments) {
        canvas.extend(to_double(s.a.x), to_double(s.a.y));
        canvas.extend(to_double(s.b.x), to_double(s.b.y));
    }
    fit_default(canvas);
    const double lo = canvas.min_x, hi = canvas.max_x;
    const int samples = 64;
    Canvas::Path parabola { {}, "reference" };
    for (int i = 0; i <= samples; ++i) {
        const double x = lo + (hi - lo) * i / samples;
        parabola.points.emplace_back(x, x * x);
        canvas.extend(x, x * x);
    }
    canvas.paths.push_back(parabola);
    for (std::size_t i = 0; i < sys.segments.size(); ++i) {
        const auto& s = sys.segments[i];
        const double ax = to_double(s.a.x), ay = to_double(s.a.y);
        canvas.paths.push_back({ { { ax, ay }, { to_double(s.b.x), to_double(s.b.y) } }, "shape" });
        if (options.labels)
            canvas.labels.push_back({ ax, ay, std::to_string(i) });
    }
    return canvas.emit();
}

} // namespace mptkit

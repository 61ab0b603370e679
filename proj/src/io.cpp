#include "mptkit/io.hpp"

#include "mptkit/error.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace mptkit::io {

namespace {

std::vector<std::string> split(std::string_view text)
{
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\r'))
            ++i;
        const std::size_t start = i;
        while (i < text.size() && text[i] != ' ' && text[i] != '\t' && text[i] != '\r')
            ++i;
        if (i > start)
            out.emplace_back(text.substr(start, i - start));
    }
    return out;
}

long integer(const Document& doc, const Line& line, std::size_t at, const char* what)
{
    const std::string& token = line.tokens[at];
    long value = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || end != token.data() + token.size())
        fail(doc, line.number, std::string("expected integer ") + what + ", got '" + token + "'");
    return value;
}

Rational rational(const Document& doc, const Line& line, std::size_t at)
{
    try {
        return parse_rational(line.tokens[at]);
    } catch (const InputError& e) {
        fail(doc, line.number, e.what());
    }
}

void expect_width(const Document& doc, const Line& line, std::size_t width, const char* shape)
{
    if (line.tokens.size() != width)
        fail(doc, line.number, std::string("expected \"") + shape + "\", got " + std::to_string(line.tokens.size())
                + " fields");
}

int last_line(const Document& doc)
{
    return doc.lines.empty() ? 0 : doc.lines.back().number;
}

// "n" header; returns n and checks that at least n rows follow.
int count_header(const Document& doc, const char* shape)
{
    if (doc.lines.empty())
        fail(doc, 0, "empty file, expected a count line");
    const Line& head = doc.lines.front();
    expect_width(doc, head, 1, "n");
    const long n = integer(doc, head, 0, "count");
    if (n < 0)
        fail(doc, head.number, "negative count");
    if (static_cast<long>(doc.lines.size()) - 1 < n)
        fail(doc, last_line(doc), "expected " + std::to_string(n) + " lines \"" + shape + "\", found "
                + std::to_string(doc.lines.size() - 1));
    return static_cast<int>(n);
}

void no_trailing(const Document& doc, std::size_t used)
{
    if (doc.lines.size() > used)
        fail(doc, doc.lines[used].number, "unexpected extra line");
}

std::string line_of(std::initializer_list<std::string> fields)
{
    std::string out;
    for (const auto& f : fields)
        out += (out.empty() ? "" : " ") + f;
    return out + "\n";
}

} // namespace

Document parse_document(std::string_view text, std::string source)
{
    Document doc;
    doc.source = std::move(source);
    int number = 0;
    bool first = true;
    std::size_t at = 0;
    while (at <= text.size()) {
        const std::size_t end = std::min(text.find('\n', at), text.size());
        std::string_view raw = text.substr(at, end - at);
        at = end + 1;
        ++number;
        const std::size_t hash = raw.find('#');
        if (hash != std::string_view::npos) {
            const auto comment = split(raw.substr(hash + 1));
            if (comment.size() == 2 && comment[0] == "kind:" && !doc.kind)
                doc.kind = comment[1];
            raw = raw.substr(0, hash);
        }
        auto tokens = split(raw);
        if (tokens.empty())
            continue;
        if (first && tokens[0] == "mptkit-format") {
            if (tokens.size() != 2 || tokens[1] != "1")
                fail(doc, number, "unsupported format version line");
            first = false;
            continue;
        }
        first = false;
        doc.lines.push_back({ number, std::move(tokens) });
    }
    return doc;
}

Document read_document(const std::string& path)
{
    if (path == "-") {
        std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
        return parse_document(text, "<stdin>");
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError(path + ": cannot open file");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_document(text.str(), path);
}

void fail(const Document& doc, int line, const std::string& message)
{
    if (line > 0)
        throw InputError(doc.source + ":" + std::to_string(line) + ": " + message);
    throw InputError(doc.source + ": " + message);
}

Graph parse_graph(const Document& doc)
{
    if (doc.lines.empty())
        fail(doc, 0, "empty file, expected \"n m\"");
    const Line& head = doc.lines.front();
    expect_width(doc, head, 2, "n m");
    const long n = integer(doc, head, 0, "vertex count");
    const long m = integer(doc, head, 1, "edge count");
    if (n < 0 || m < 0)
        fail(doc, head.number, "negative count");
    if (static_cast<long>(doc.lines.size()) - 1 != m)
        fail(doc, last_line(doc), "header announces " + std::to_string(m) + " edges, found "
                + std::to_string(doc.lines.size() - 1) + " edge lines");
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < doc.lines.size(); ++i) {
        const Line& line = doc.lines[i];
        expect_width(doc, line, 2, "u v");
        const long u = integer(doc, line, 0, "vertex");
        const long v = integer(doc, line, 1, "vertex");
        if (u < 0 || v < 0 || u >= n || v >= n)
            fail(doc, line.number, "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for "
                    + std::to_string(n) + " vertices");
        if (u == v)
            fail(doc, line.number, "self-loop (" + std::to_string(u) + "," + std::to_string(v) + ")");
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    return Graph::from_edges(static_cast<int>(n), edges);
}

MptRepresentation parse_rep(const Document& doc)
{
    const int n = count_header(doc, "s p e");
    MptRepresentation rep;
    for (int i = 1; i <= n; ++i) {
        const Line& line = doc.lines[i];
        expect_width(doc, line, 3, "s p e");
        PointedInterval item { rational(doc, line, 0), rational(doc, line, 1), rational(doc, line, 2) };
        if (!(item.s <= item.p && item.p <= item.e))
            fail(doc, line.number, "need s <= p <= e");
        rep.items.push_back(std::move(item));
    }
    no_trailing(doc, static_cast<std::size_t>(n) + 1);
    return rep;
}

IntervalRepresentation parse_intervals(const Document& doc)
{
    const int n = count_header(doc, "s e");
    IntervalRepresentation iv;
    for (int i = 1; i <= n; ++i) {
        const Line& line = doc.lines[i];
        expect_width(doc, line, 2, "s e");
        Interval item { rational(doc, line, 0), rational(doc, line, 1) };
        if (item.s > item.e)
            fail(doc, line.number, "need s <= e");
        iv.items.push_back(std::move(item));
    }
    no_trailing(doc, static_cast<std::size_t>(n) + 1);
    return iv;
}

namespace {

LinearLSystem lsystem_rows(const Document& doc, int n)
{
    LinearLSystem sys;
    for (int i = 1; i <= n; ++i) {
        const Line& line = doc.lines[i];
        expect_width(doc, line, 3, "t c r");
        LShape l { rational(doc, line, 0), rational(doc, line, 1), rational(doc, line, 2) };
        if (!(l.t <= l.c && l.c <= l.r))
            fail(doc, line.number, "need t <= c <= r");
        for (int j = 0; j < static_cast<int>(sys.shapes.size()); ++j)
            if (sys.shapes[j].c == l.c)
                fail(doc, line.number, "corner repeats shape " + std::to_string(j));
        sys.shapes.push_back(std::move(l));
    }
    return sys;
}

} // namespace

LinearLSystem parse_lsystem(const Document& doc)
{
    const int n = count_header(doc, "t c r");
    auto sys = lsystem_rows(doc, n);
    if (doc.lines.size() > static_cast<std::size_t>(n) + 1 && doc.lines[n + 1].tokens[0] != "contacts")
        no_trailing(doc, static_cast<std::size_t>(n) + 1);
    return sys;
}

ContactLSystem parse_contact(const Document& doc)
{
    const int n = count_header(doc, "t c r");
    ContactLSystem out;
    out.system = lsystem_rows(doc, n);
    const std::size_t at = static_cast<std::size_t>(n) + 1;
    if (at >= doc.lines.size())
        fail(doc, last_line(doc), "missing \"contacts m\" section");
    const Line& head = doc.lines[at];
    if (head.tokens.size() != 2 || head.tokens[0] != "contacts")
        fail(doc, head.number, "expected \"contacts m\"");
    const long m = integer(doc, head, 1, "contact count");
    if (m < 0 || static_cast<long>(doc.lines.size() - at - 1) != m)
        fail(doc, head.number, "announces " + std::to_string(m) + " contacts, found "
                + std::to_string(doc.lines.size() - at - 1));
    for (std::size_t i = at + 1; i < doc.lines.size(); ++i) {
        const Line& line = doc.lines[i];
        expect_width(doc, line, 4, "u v x y");
        const long u = integer(doc, line, 0, "vertex");
        const long v = integer(doc, line, 1, "vertex");
        if (u < 0 || v < 0 || u >= n || v >= n || u == v)
            fail(doc, line.number, "bad contact pair (" + std::to_string(u) + "," + std::to_string(v) + ")");
        out.contacts.push_back(
            { static_cast<Vertex>(u), static_cast<Vertex>(v), { rational(doc, line, 2), rational(doc, line, 3) } });
    }
    return out;
}

RaySystem parse_rays(const Document& doc)
{
    const int n = count_header(doc, "D x y");
    RaySystem rs;
    for (int i = 1; i <= n; ++i) {
        const Line& line = doc.lines[i];
        expect_width(doc, line, 3, "D x y");
        RayDirection d;
        if (line.tokens[0] == "down")
            d = RayDirection::down;
        else if (line.tokens[0] == "left")
            d = RayDirection::left;
        else
            fail(doc, line.number, "ray direction must be down or left, got '" + line.tokens[0] + "'");
        rs.rays.push_back({ d, rational(doc, line, 1), rational(doc, line, 2) });
    }
    no_trailing(doc, static_cast<std::size_t>(n) + 1);
    return rs;
}

VertexOrder parse_order(const Document& doc)
{
    VertexOrder ord;
    if (doc.lines.empty())
        return ord;
    no_trailing(doc, 1);
    const Line& line = doc.lines.front();
    for (std::size_t i = 0; i < line.tokens.size(); ++i) {
        const long v = integer(doc, line, i, "vertex");
        if (v < 0)
            fail(doc, line.number, "negative vertex id");
        ord.sequence.push_back(static_cast<Vertex>(v));
    }
    return ord;
}

std::vector<Rational> parse_weights(const Document& doc, int n)
{
    std::vector<std::optional<Rational>> seen(static_cast<std::size_t>(n));
    for (const Line& line : doc.lines) {
        expect_width(doc, line, 2, "vertex weight");
        const long v = integer(doc, line, 0, "vertex");
        if (v < 0 || v >= n)
            fail(doc, line.number, "vertex " + std::to_string(v) + " out of range for " + std::to_string(n)
                    + " vertices");
        if (seen[v])
            fail(doc, line.number, "vertex " + std::to_string(v) + " weighted twice");
        const Rational w = rational(doc, line, 1);
        if (w < 0)
            fail(doc, line.number, "negative weight");
        seen[v] = w;
    }
    std::vector<Rational> out;
    for (int v = 0; v < n; ++v) {
        if (!seen[v])
            fail(doc, last_line(doc), "no weight for vertex " + std::to_string(v));
        out.push_back(*seen[v]);
    }
    return out;
}

CircularArcRepresentation parse_arcs(const Document& doc)
{
    const int n = count_header(doc, "start end");
    CircularArcRepresentation arcs;
    for (int i = 1; i <= n; ++i) {
        const Line& line = doc.lines[i];
        expect_width(doc, line, 2, "start end");
        Arc arc { rational(doc, line, 0), rational(doc, line, 1) };
        for (const Rational* x : { &arc.start, &arc.end })
            if (*x < 0 || *x >= 1)
                fail(doc, line.number, "arc endpoints must lie in [0, 1)");
        arcs.arcs.push_back(std::move(arc));
    }
    no_trailing(doc, static_cast<std::size_t>(n) + 1);
    return arcs;
}

std::vector<Segment> parse_segments(const Document& doc)
{
    const int n = count_header(doc, "ax ay bx by");
    std::vector<Segment> out;
    for (int i = 1; i <= n; ++i) {
        const Line& line = doc.lines[i];
        expect_width(doc, line, 4, "ax ay bx by");
        Segment s { { rational(doc, line, 0), rational(doc, line, 1) },
            { rational(doc, line, 2), rational(doc, line, 3) } };
        s.degenerate = s.a == s.b;
        out.push_back(std::move(s));
    }
    no_trailing(doc, static_cast<std::size_t>(n) + 1);
    return out;
}

std::string header(std::string_view kind)
{
    return std::string(kVersionLine) + "\n# kind: " + std::string(kind) + "\n";
}

std::string format_graph(const Graph& g)
{
    std::string out = header("graph");
    out += line_of({ std::to_string(g.order()), std::to_string(g.edge_count()) });
    for (const auto& [u, v] : g.edges())
        out += line_of({ std::to_string(u), std::to_string(v) });
    return out;
}

std::string format_rep(const MptRepresentation& rep)
{
    std::string out = header("rep") + std::to_string(rep.size()) + "\n";
    for (const auto& item : rep.items)
        out += line_of({ to_string(item.s), to_string(item.p), to_string(item.e) });
    return out;
}

std::string format_intervals(const IntervalRepresentation& iv)
{
    std::string out = header("interval") + std::to_string(iv.size()) + "\n";
    for (const auto& item : iv.items)
        out += line_of({ to_string(item.s), to_string(item.e) });
    return out;
}

namespace {

std::string lsystem_body(const LinearLSystem& sys)
{
    std::string out = std::to_string(sys.size()) + "\n";
    for (const auto& l : sys.shapes)
        out += line_of({ to_string(l.t), to_string(l.c), to_string(l.r) });
    return out;
}

} // namespace

std::string format_lsystem(const LinearLSystem& sys)
{
    return header("lsystem") + lsystem_body(sys);
}

std::string format_contact(const ContactLSystem& sys)
{
    std::string out = header("contact") + lsystem_body(sys.system);
    out += "contacts " + std::to_string(sys.contacts.size()) + "\n";
    for (const auto& c : sys.contacts)
        out += line_of({ std::to_string(c.u), std::to_string(c.v), to_string(c.point.x), to_string(c.point.y) });
    return out;
}

std::string format_rays(const RaySystem& rs)
{
    std::string out = header("rays") + std::to_string(rs.size()) + "\n";
    for (const auto& r : rs.rays)
        out += line_of({ r.direction == RayDirection::down ? "down" : "left", to_string(r.x), to_string(r.y) });
    return out;
}

std::string format_order(const VertexOrder& ord)
{
    std::string body;
    for (Vertex v : ord.sequence)
        body += (body.empty() ? "" : " ") + std::to_string(v);
    return header("order") + body + "\n";
}

std::string format_weights(const std::vector<Rational>& weights)
{
    std::string out = header("weights");
    for (std::size_t v = 0; v < weights.size(); ++v)
        out += line_of({ std::to_string(v), to_string(weights[v]) });
    return out;
}

std::string format_arcs(const CircularArcRepresentation& arcs)
{
    std::string out = header("arcs") + std::to_string(arcs.size()) + "\n";
    for (const auto& a : arcs.arcs)
        out += line_of({ to_string(a.start), to_string(a.end) });
    return out;
}

std::string format_segments(const CyclicSegmentSystem& sys)
{
    std::string out = header("segments") + std::to_string(sys.size()) + "\n";
    for (const auto& s : sys.segments)
        out += line_of({ to_string(s.a.x), to_string(s.a.y), to_string(s.b.x), to_string(s.b.y) });
    return out;
}

std::string format_mapping(const ReductionOutput& reduction)
{
    std::string out = header("mapping");
    out += "# case " + std::string(to_string(reduction.kind)) + ", cut " + to_string(reduction.cut) + "\n";
    for (const auto& s : reduction.split_map)
        out += line_of({ std::to_string(s.original), std::to_string(s.first), std::to_string(s.second) });
    return out;
}

} // namespace mptkit::io

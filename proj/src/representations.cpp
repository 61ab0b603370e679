#include "mptkit/representations.hpp"

#include "mptkit/error.hpp"
#include "mptkit/orders.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

namespace mptkit {

namespace {

// Closed axis-aligned box; an axis-aligned segment is a degenerate box.
struct Box {
    Rational x0, x1, y0, y1;
};

bool overlap(const Box& a, const Box& b)
{
    return a.x0 <= b.x1 && b.x0 <= a.x1 && a.y0 <= b.y1 && b.y0 <= a.y1;
}

Box vertical_leg(const LShape& l)
{
    return { l.c, l.c, -l.c, -l.t };
}

Box horizontal_leg(const LShape& l)
{
    return { l.c, l.r, -l.c, -l.c };
}

bool shapes_intersect(const LShape& a, const LShape& b)
{
    const Box av = vertical_leg(a), ah = horizontal_leg(a);
    const Box bv = vertical_leg(b), bh = horizontal_leg(b);
    return overlap(av, bv) || overlap(av, bh) || overlap(ah, bv) || overlap(ah, bh);
}

std::string item_label(int i)
{
    return "item " + std::to_string(i);
}

} // namespace

void validate(const MptRepresentation& rep)
{
    for (int i = 0; i < rep.size(); ++i) {
        const auto& it = rep.items[i];
        if (!(it.s <= it.p && it.p <= it.e))
            throw InputError(item_label(i) + " violates s <= p <= e");
    }
}

void validate(const LinearLSystem& sys)
{
    for (int i = 0; i < sys.size(); ++i) {
        const auto& l = sys.shapes[i];
        if (!(l.t <= l.c && l.c <= l.r))
            throw InputError("shape " + std::to_string(i) + " violates t <= c <= r");
    }
    std::vector<Rational> corners;
    for (const auto& l : sys.shapes)
        corners.push_back(l.c);
    std::sort(corners.begin(), corners.end());
    if (std::adjacent_find(corners.begin(), corners.end()) != corners.end())
        throw InputError("L-system corners are not pairwise distinct");
}

void validate(const IntervalRepresentation& iv)
{
    for (int i = 0; i < iv.size(); ++i)
        if (iv.items[i].s > iv.items[i].e)
            throw InputError(item_label(i) + " violates s <= e");
}

bool has_distinct_points(const MptRepresentation& rep)
{
    std::vector<Rational> points;
    for (const auto& it : rep.items)
        points.push_back(it.p);
    std::sort(points.begin(), points.end());
    return std::adjacent_find(points.begin(), points.end()) == points.end();
}

bool is_canonical(const MptRepresentation& rep)
{
    const int n = rep.size();
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& it : rep.items) {
        for (const Rational* q : { &it.s, &it.p, &it.e })
            if (q->get_den() != 1 || *q < 1 || *q > n)
                return false;
        if (!(it.s <= it.p && it.p <= it.e))
            return false;
        auto p = it.p.get_num().get_si();
        if (seen[p])
            return false;
        seen[p] = 1;
    }
    return true;
}

Graph mpt_adjacency(const MptRepresentation& rep)
{
    validate(rep);
    std::vector<Edge> edges;
    const int n = rep.size();
    for (int u = 0; u < n; ++u) {
        const auto& a = rep.items[u];
        for (int v = u + 1; v < n; ++v) {
            const auto& b = rep.items[v];
            if (b.s <= a.p && a.p <= b.e && a.s <= b.p && b.p <= a.e)
                edges.emplace_back(u, v);
        }
    }
    return Graph::from_edges(n, edges);
}

Graph interval_adjacency(const IntervalRepresentation& iv)
{
    validate(iv);
    std::vector<Edge> edges;
    const int n = iv.size();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (iv.items[u].s <= iv.items[v].e && iv.items[v].s <= iv.items[u].e)
                edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph lsystem_adjacency(const LinearLSystem& sys)
{
    validate(sys);
    std::vector<Edge> edges;
    const int n = sys.size();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (shapes_intersect(sys.shapes[u], sys.shapes[v]))
                edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

LinearLSystem rep_to_lsystem(const MptRepresentation& rep)
{
    validate(rep);
    if (!has_distinct_points(rep))
        throw PreconditionError("representation has repeated points; normalize it first");
    LinearLSystem sys;
    sys.shapes.reserve(rep.items.size());
    for (const auto& it : rep.items)
        sys.shapes.push_back({ it.s, it.p, it.e });
    return sys;
}

MptRepresentation lsystem_to_rep(const LinearLSystem& sys)
{
    validate(sys);
    MptRepresentation rep;
    rep.items.reserve(sys.shapes.size());
    for (const auto& l : sys.shapes)
        rep.items.push_back({ l.t, l.c, l.r });
    return rep;
}

IntervalRepresentation rank_intervals(const IntervalRepresentation& iv)
{
    validate(iv);
    struct Endpoint {
        Rational x;
        int is_end; // starts sort before ends at equal coordinates
        int index;
    };
    std::vector<Endpoint> points;
    for (int i = 0; i < iv.size(); ++i) {
        points.push_back({ iv.items[i].s, 0, i });
        points.push_back({ iv.items[i].e, 1, i });
    }
    std::sort(points.begin(), points.end(), [](const Endpoint& a, const Endpoint& b) {
        if (a.x != b.x)
            return a.x < b.x;
        if (a.is_end != b.is_end)
            return a.is_end < b.is_end;
        return a.index < b.index;
    });
    IntervalRepresentation ranked;
    ranked.items.resize(iv.items.size());
    for (std::size_t k = 0; k < points.size(); ++k) {
        auto& item = ranked.items[points[k].index];
        (points[k].is_end ? item.e : item.s) = Rational(static_cast<long>(k + 1));
    }
    return ranked;
}

LinearLSystem interval_to_anchored_lsystem(const IntervalRepresentation& iv)
{
    validate(iv);
    bool usable = true;
    std::vector<Rational> starts;
    for (const auto& it : iv.items) {
        usable = usable && sgn(it.s) >= 0;
        starts.push_back(it.s);
    }
    std::sort(starts.begin(), starts.end());
    usable = usable && std::adjacent_find(starts.begin(), starts.end()) == starts.end();

    const IntervalRepresentation model = usable ? iv : rank_intervals(iv);
    LinearLSystem sys;
    for (const auto& it : model.items)
        sys.shapes.push_back({ Rational(0), it.s, it.e });
    return sys;
}

IntervalRepresentation anchored_lsystem_to_intervals(const LinearLSystem& sys)
{
    if (!anchor_of(sys))
        throw PreconditionError("L-system is not anchored");
    IntervalRepresentation iv;
    for (const auto& l : sys.shapes)
        iv.items.push_back({ l.c, l.r });
    return iv;
}

std::optional<Rational> anchor_of(const LinearLSystem& sys)
{
    if (sys.shapes.empty())
        return Rational(0);
    Rational max_t = sys.shapes.front().t;
    Rational min_c = sys.shapes.front().c;
    for (const auto& l : sys.shapes) {
        max_t = std::max(max_t, l.t);
        min_c = std::min(min_c, l.c);
    }
    if (max_t > min_c)
        return std::nullopt;
    return max_t;
}

namespace {

void validate_rays(const RaySystem& rs)
{
    for (int i = 0; i < rs.size(); ++i)
        for (int j = i + 1; j < rs.size(); ++j) {
            const auto& a = rs.rays[i];
            const auto& b = rs.rays[j];
            if (a.direction != b.direction)
                continue;
            bool clash = a.direction == RayDirection::down ? a.x == b.x : a.y == b.y;
            if (clash)
                throw InputError("parallel rays " + std::to_string(i) + " and " + std::to_string(j)
                    + " intersect");
        }
}

bool rays_cross(const Ray& a, const Ray& b)
{
    if (a.direction == b.direction)
        return false;
    const Ray& down = a.direction == RayDirection::down ? a : b;
    const Ray& left = a.direction == RayDirection::down ? b : a;
    return left.y <= down.y && down.x <= left.x;
}

} // namespace

Graph ray_adjacency(const RaySystem& rs)
{
    validate_rays(rs);
    std::vector<Edge> edges;
    for (int i = 0; i < rs.size(); ++i)
        for (int j = i + 1; j < rs.size(); ++j)
            if (rays_cross(rs.rays[i], rs.rays[j]))
                edges.emplace_back(i, j);
    return Graph::from_edges(rs.size(), edges);
}

LinearLSystem rays_to_lsystem(const RaySystem& rs)
{
    validate_rays(rs);
    // Every crossing point combines the x of one origin with the y of
    // another, so |x| + |y| over all relevant points is at most 2 * extent.
    Rational extent = 0;
    for (const auto& ray : rs.rays)
        extent = std::max(extent, Rational(abs(ray.x) + abs(ray.y)));
    const Rational C = 2 * extent + 1;
    const Rational shift = C / 2;

    LinearLSystem sys;
    for (const auto& ray : rs.rays) {
        const Rational x = ray.x + shift;
        const Rational y = ray.y + shift;
        if (ray.direction == RayDirection::down)
            sys.shapes.push_back({ Rational(-y), x, x });
        else
            sys.shapes.push_back({ Rational(-y), Rational(-y), x });
    }
    return sys;
}

MptRepresentation normalize(const MptRepresentation& rep)
{
    return rep_from_order(mpt_adjacency(rep), order_from_rep(rep));
}

MptRepresentation random_mpt_rep(int n, std::uint64_t seed)
{
    if (n < 0)
        throw InputError("negative vertex count");
    std::mt19937_64 rng(seed);
    MptRepresentation rep;
    for (int i = 1; i <= n; ++i) {
        std::uniform_int_distribution<int> start(1, i);
        std::uniform_int_distribution<int> end(i, n);
        const int s = start(rng);
        const int e = end(rng);
        rep.items.push_back({ Rational(s), Rational(i), Rational(e) });
    }
    return rep;
}

IntervalRepresentation random_interval_rep(int n, std::uint64_t seed)
{
    IntervalRepresentation iv;
    for (const auto& it : random_mpt_rep(n, seed).items)
        iv.items.push_back({ it.s, it.e });
    return iv;
}

} // namespace mptkit

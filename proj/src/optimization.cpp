#include "mptkit/optimization.hpp"

#include "mptkit/error.hpp"
#include "mptkit/families.hpp"
#include "mptkit/oracles.hpp"
#include "mptkit/orders.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace mptkit {

namespace {

// A canonical representation viewed by position: position i (1..n) holds
// vertex[i] with interval [s[i], e[i]]. Slots 0 and n+1 are unused here.
struct Positions {
    int n = 0;
    std::vector<Vertex> vertex;
    std::vector<long> s;
    std::vector<long> e;

    // Closed shapes at positions i < j are disjoint.
    bool disjoint(int i, int j) const { return !(s[j] <= i && e[i] >= j); }
};

Positions by_position(const MptRepresentation& rep, const char* who)
{
    if (!is_canonical(rep))
        throw PreconditionError(std::string(who) + " requires a canonical representation (normalize it first)");
    Positions pos;
    pos.n = rep.size();
    pos.vertex.assign(static_cast<std::size_t>(pos.n) + 2, -1);
    pos.s.assign(static_cast<std::size_t>(pos.n) + 2, 0);
    pos.e.assign(static_cast<std::size_t>(pos.n) + 2, 0);
    for (Vertex v = 0; v < pos.n; ++v) {
        const auto& it = rep.items[v];
        const long p = it.p.get_num().get_si();
        pos.vertex[p] = v;
        pos.s[p] = it.s.get_num().get_si();
        pos.e[p] = it.e.get_num().get_si();
    }
    return pos;
}

std::vector<Rational> checked_weights(int n, std::span<const Rational> weights)
{
    if (weights.empty())
        return std::vector<Rational>(static_cast<std::size_t>(n), Rational(1));
    if (static_cast<int>(weights.size()) != n)
        throw InputError("expected " + std::to_string(n) + " weights, got " + std::to_string(weights.size()));
    for (std::size_t v = 0; v < weights.size(); ++v)
        if (sgn(weights[v]) < 0)
            throw InputError("negative weight " + to_string(weights[v]) + " for vertex " + std::to_string(v));
    return { weights.begin(), weights.end() };
}

struct WisSolver {
    Positions pos;
    std::vector<Rational> weight; // by position
    DpTable table;
    std::vector<int> choice;

    int stride() const { return pos.n + 2; }
    Rational& opt(int a, int b) { return table.opt[static_cast<std::size_t>(a) * stride() + b]; }
    int& pick(int a, int b) { return choice[static_cast<std::size_t>(a) * stride() + b]; }

    WisSolver(const MptRepresentation& rep, std::span<const Rational> weights)
        : pos(by_position(rep, "weighted independent set"))
    {
        const int n = pos.n;
        auto w = checked_weights(n, weights);
        weight.assign(static_cast<std::size_t>(n) + 2, Rational(0));
        for (int i = 1; i <= n; ++i)
            weight[i] = w[pos.vertex[i]];
        table.n = n;
        table.opt.assign(static_cast<std::size_t>(stride()) * stride(), Rational(0));
        choice.assign(static_cast<std::size_t>(stride()) * stride(), -1);
        fill();
    }

    // Right ends ordered by (e, position); sentinels are +infinity.
    bool key_less(int i, int j) const
    {
        return pos.e[i] < pos.e[j] || (pos.e[i] == pos.e[j] && i < j);
    }

    void fill()
    {
        const int n = pos.n;
        const int size = stride();
        // below_right[i*size+b]: i in L_{0,b}; below_left[i*size+a]: i in L_{a,n+1}.
        std::vector<char> below_right(static_cast<std::size_t>(size) * size, 0);
        std::vector<char> below_left(static_cast<std::size_t>(size) * size, 0);
        for (int i = 1; i <= n; ++i) {
            for (int b = i + 1; b <= n + 1; ++b)
                below_right[static_cast<std::size_t>(i) * size + b]
                    = b == n + 1 || (key_less(i, b) && pos.disjoint(i, b));
            for (int a = 0; a < i; ++a)
                below_left[static_cast<std::size_t>(i) * size + a]
                    = a == 0 || (key_less(i, a) && pos.disjoint(a, i));
        }

        for (int span = 2; span <= n + 1; ++span)
            for (int a = 0; a + span <= n + 1; ++a) {
                const int b = a + span;
                Rational best = 0;
                int best_i = -1;
                for (int i = a + 1; i < b; ++i) {
                    if (!below_right[static_cast<std::size_t>(i) * size + b]
                        || !below_left[static_cast<std::size_t>(i) * size + a])
                        continue;
                    Rational value = opt(a, i) + weight[i] + opt(i, b);
                    if (best_i == -1 || value > best) {
                        best = value;
                        best_i = i;
                    }
                }
                opt(a, b) = best;
                pick(a, b) = best_i;
            }
    }

    VertexSet witness()
    {
        VertexSet set;
        std::vector<std::pair<int, int>> stack { { 0, pos.n + 1 } };
        while (!stack.empty()) {
            auto [a, b] = stack.back();
            stack.pop_back();
            const int i = pick(a, b);
            if (i < 0)
                continue;
            set.push_back(pos.vertex[i]);
            stack.emplace_back(a, i);
            stack.emplace_back(i, b);
        }
        std::sort(set.begin(), set.end());
        return set;
    }
};

} // namespace

DpTable wis_table(const MptRepresentation& rep, std::span<const Rational> weights)
{
    return WisSolver(rep, weights).table;
}

WisResult max_weight_independent_set(const MptRepresentation& rep, std::span<const Rational> weights)
{
    WisSolver solver(rep, weights);
    const int n = solver.pos.n;
    return { solver.opt(0, n + 1), solver.witness() };
}

CliqueCover interval_clique_cover(const IntervalRepresentation& iv)
{
    validate(iv);
    const int n = iv.size();
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
        [&](int a, int b) { return iv.items[a].e < iv.items[b].e; });

    std::vector<char> covered(static_cast<std::size_t>(n), 0);
    CliqueCover cover;
    for (int anchor : order) {
        if (covered[anchor])
            continue;
        const Rational& point = iv.items[anchor].e;
        VertexSet clique;
        for (int v = 0; v < n; ++v)
            if (!covered[v] && iv.items[v].s <= point && point <= iv.items[v].e) {
                clique.push_back(v);
                covered[v] = 1;
            }
        cover.cliques.push_back(std::move(clique));
    }
    return cover;
}

CliqueCoverReport clique_cover_2approx_report(const MptRepresentation& rep)
{
    const Positions pos = by_position(rep, "clique cover");
    const int n = pos.n;
    CliqueCoverReport report;

    std::vector<int> greedy; // positions
    for (int i = 1; i <= n; ++i)
        if (std::all_of(greedy.begin(), greedy.end(), [&](int j) { return pos.disjoint(j, i); }))
            greedy.push_back(i);
    const int k = static_cast<int>(greedy.size());
    auto boundary = [&](int j) { return j + 1 < k ? greedy[j + 1] : n + 1; };

    std::vector<char> in_corner(static_cast<std::size_t>(n) + 2, 0);
    for (int j = 0; j + 1 < k; ++j) {
        VertexSet clique;
        for (int l = greedy[j]; l < greedy[j + 1]; ++l)
            if (pos.e[l] >= greedy[j + 1]) {
                clique.push_back(pos.vertex[l]);
                in_corner[l] = 1;
            }
        if (!clique.empty()) {
            std::sort(clique.begin(), clique.end());
            report.corner_cliques.push_back(std::move(clique));
        }
    }

    for (int j = 0; j < k; ++j) {
        std::vector<int> members;
        LinearLSystem shapes;
        IntervalRepresentation iv;
        for (int l = greedy[j]; l < boundary(j); ++l) {
            if (in_corner[l])
                continue;
            members.push_back(l);
            shapes.shapes.push_back({ Rational(pos.s[l]), Rational(l), Rational(pos.e[l]) });
            iv.items.push_back({ Rational(l), Rational(pos.e[l]) });
        }
        if (members.empty())
            continue;
        if (!anchor_of(shapes))
            throw std::logic_error("residual block is not anchored");
        VertexSet block;
        for (int l : members)
            block.push_back(pos.vertex[l]);
        std::sort(block.begin(), block.end());
        report.blocks.push_back(block);
        for (const auto& local : interval_clique_cover(iv).cliques) {
            VertexSet clique;
            for (int idx : local)
                clique.push_back(pos.vertex[members[idx]]);
            std::sort(clique.begin(), clique.end());
            report.cover.cliques.push_back(std::move(clique));
        }
    }

    for (int i : greedy)
        report.greedy.push_back(pos.vertex[i]);
    for (const auto& c : report.corner_cliques)
        report.cover.cliques.push_back(c);
    std::sort(report.cover.cliques.begin(), report.cover.cliques.end());

    const Graph g = mpt_adjacency(rep);
    for (const auto& c : report.corner_cliques)
        if (!is_clique(g, c))
            throw std::logic_error("corner set is not a clique");
    if (!is_valid_clique_cover(g, report.cover))
        throw std::logic_error("clique cover failed validation");
    return report;
}

CliqueCover clique_cover_2approx(const MptRepresentation& rep)
{
    return clique_cover_2approx_report(rep).cover;
}

GreedyColoring greedy_coloring(const MptRepresentation& rep)
{
    const Positions pos = by_position(rep, "greedy coloring");
    const Graph g = mpt_adjacency(rep);
    const int n = pos.n;
    GreedyColoring result;
    result.coloring.color.assign(static_cast<std::size_t>(n), -1);
    for (int i = 1; i <= n; ++i) {
        const Vertex v = pos.vertex[i];
        std::vector<char> taken(static_cast<std::size_t>(g.degree(v)) + 1, 0);
        for (Vertex w : g.neighbors(v)) {
            const int c = result.coloring.color[w];
            if (c >= 0 && c < static_cast<int>(taken.size()))
                taken[c] = 1;
        }
        const int color = static_cast<int>(std::find(taken.begin(), taken.end(), 0) - taken.begin());
        result.coloring.color[v] = color;
        result.coloring.k = std::max(result.coloring.k, color + 1);
    }
    if (n <= kAlphaOracleLimit)
        result.clique_number = brute_force_omega(g);
    return result;
}

void validate(const CircularArcRepresentation& arcs)
{
    for (int i = 0; i < arcs.size(); ++i) {
        const auto& a = arcs.arcs[i];
        for (const Rational* x : { &a.start, &a.end })
            if (sgn(*x) < 0 || *x >= 1)
                throw InputError("arc " + std::to_string(i) + " has an endpoint outside [0,1)");
        if (a.start == a.end)
            throw InputError("arc " + std::to_string(i) + " has equal endpoints");
    }
}

bool arc_contains(const Arc& arc, const Rational& x)
{
    if (arc.start < arc.end)
        return arc.start <= x && x <= arc.end;
    return x >= arc.start || x <= arc.end;
}

Graph circular_arc_graph(const CircularArcRepresentation& arcs)
{
    validate(arcs);
    std::vector<Edge> edges;
    for (int u = 0; u < arcs.size(); ++u)
        for (int v = u + 1; v < arcs.size(); ++v) {
            const auto& a = arcs.arcs[u];
            const auto& b = arcs.arcs[v];
            if (arc_contains(a, b.start) || arc_contains(b, a.start))
                edges.emplace_back(u, v);
        }
    return Graph::from_edges(arcs.size(), edges);
}

CircularArcRepresentation random_circular_arcs(int n, std::uint64_t seed)
{
    if (n < 0)
        throw InputError("negative vertex count");
    std::mt19937_64 rng(seed);
    const long slots = 8L * std::max(n, 1);
    std::uniform_int_distribution<long> slot(0, slots - 1);
    CircularArcRepresentation out;
    for (int i = 0; i < n; ++i) {
        const long a = slot(rng);
        long b = slot(rng);
        while (b == a)
            b = slot(rng);
        out.arcs.push_back({ Rational(a, slots), Rational(b, slots) });
        out.arcs.back().start.canonicalize();
        out.arcs.back().end.canonicalize();
    }
    return out;
}

Rational default_cut(const CircularArcRepresentation& arcs)
{
    std::vector<Rational> points;
    for (const auto& a : arcs.arcs) {
        points.push_back(a.start);
        points.push_back(a.end);
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (points.size() < 2)
        return Rational(1, 2);
    return Rational((points[0] + points[1]) / 2);
}

std::string_view to_string(ReductionCase kind)
{
    switch (kind) {
    case ReductionCase::split:
        return "split";
    case ReductionCase::no_crossing:
        return "no-crossing";
    case ReductionCase::clique:
        return "clique";
    }
    return "?";
}

ReductionOutput coloring_hardness_reduction(const CircularArcRepresentation& arcs, int k, std::optional<Rational> cut)
{
    validate(arcs);
    if (k <= 2)
        throw InputError("the reduction needs k > 2, got k=" + std::to_string(k));
    const Rational p = cut ? *cut : default_cut(arcs);
    if (sgn(p) < 0 || p >= 1)
        throw InputError("cut " + to_string(p) + " lies outside [0,1)");
    for (int i = 0; i < arcs.size(); ++i)
        if (arcs.arcs[i].start == p || arcs.arcs[i].end == p)
            throw InputError("cut " + to_string(p) + " coincides with an endpoint of arc " + std::to_string(i));

    const int n = arcs.size();
    auto shifted = [&](const Rational& x) {
        Rational y = x - p;
        if (sgn(y) < 0)
            y += 1;
        return y;
    };

    ReductionOutput out;
    out.cut = p;
    std::vector<int> crossing_rank(static_cast<std::size_t>(n), 0); // 1-based, 0 = not crossing
    for (int v = 0; v < n; ++v)
        if (arc_contains(arcs.arcs[v], p))
            crossing_rank[v] = ++out.crossing;
    const int l = out.crossing;

    if (l == 0) {
        out.kind = ReductionCase::no_crossing;
        IntervalRepresentation iv;
        for (const auto& a : arcs.arcs)
            iv.items.push_back({ shifted(a.start), shifted(a.end) });
        out.g_prime = circular_arc_graph(arcs);
        out.rep = normalize(lsystem_to_rep(interval_to_anchored_lsystem(iv)));
        return out;
    }
    if (l > k) {
        out.kind = ReductionCase::clique;
        out.g_prime = families::complete(k + 1);
        out.rep = rep_from_order(out.g_prime, identity_order(k + 1));
        return out;
    }

    // Every shifted endpoint lies in (2 eps, 1 - 2 eps).
    Rational gap = 1;
    for (const auto& a : arcs.arcs)
        for (const Rational* x : { &a.start, &a.end }) {
            const Rational y = shifted(*x);
            gap = std::min({ gap, y, Rational(1 - y) });
        }
    const Rational eps = gap / 2;

    IntervalRepresentation h { std::vector<Interval>(static_cast<std::size_t>(n + l)) };
    for (int v = 0; v < n; ++v) {
        const Rational s = shifted(arcs.arcs[v].start);
        const Rational e = shifted(arcs.arcs[v].end);
        if (crossing_rank[v] == 0) {
            h.items[v] = { s, e };
            continue;
        }
        const int second = n + crossing_rank[v] - 1;
        h.items[v] = { s, Rational(1 - eps) };
        h.items[second] = { eps, e };
        out.split_map.push_back({ v, v, second });
    }

    auto u = [&](int t) { return n + l + t - 1; };
    std::vector<Edge> edges = interval_adjacency(h).edges();
    for (const auto& piece : out.split_map)
        for (int t = crossing_rank[piece.original] + 1; t <= k; ++t) {
            edges.emplace_back(u(t), piece.first);
            edges.emplace_back(u(t), piece.second);
        }
    for (int a = 1; a <= k; ++a) {
        out.clique_vertices.push_back(u(a));
        for (int b = a + 1; b <= k; ++b)
            edges.emplace_back(u(a), u(b));
    }
    out.kind = ReductionCase::split;
    out.g_prime = Graph::from_edges(n + l + k, edges);

    // Integer L-system: clique shapes have corners 2..2k with tops at 2 and
    // right ends past everything; H sits beyond 2k with corners and ends at
    // 2k + 2 * rank. Piece tops 2i+1 reach exactly the clique shapes u_t
    // with t > i.
    const IntervalRepresentation ranked = rank_intervals(h);
    const long big = 2L * k + 4L * (n + l) + 2;
    LinearLSystem sys;
    for (int x = 0; x < n + l; ++x) {
        const int owner = x < n ? x : out.split_map[x - n].original;
        const long top = crossing_rank[owner] ? 2L * crossing_rank[owner] + 1 : 2L * k + 1;
        sys.shapes.push_back({ Rational(top), Rational(2L * k) + 2 * ranked.items[x].s,
            Rational(2L * k) + 2 * ranked.items[x].e });
    }
    for (int t = 1; t <= k; ++t)
        sys.shapes.push_back({ Rational(2), Rational(2L * t), Rational(big) });
    out.rep = normalize(lsystem_to_rep(sys));
    if (!(mpt_adjacency(out.rep) == out.g_prime))
        throw std::logic_error("reduction representation does not realize G'");
    return out;
}

} // namespace mptkit

#include "mptkit/error.hpp"
#include "mptkit/families.hpp"
#include "mptkit/orders.hpp"
#include "mptkit/representations.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace mptkit;

namespace {

Rational q(long a)
{
    return Rational(a);
}

Graph edges_02_13()
{
    return Graph::from_edges(4, std::vector<Edge> { { 0, 2 }, { 1, 3 } });
}

Graph graph_from_mask(int n, unsigned mask)
{
    std::vector<Edge> edges;
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if (mask >> bit & 1)
                edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

// Direct O(n^4) scan used to cross-check the fast verifier.
std::optional<std::vector<int>> naive_mpt_violation(const Graph& g, const VertexOrder& ord)
{
    const int n = g.order();
    auto at = [&](int i) { return ord.sequence[i]; };
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d)
                    if (g.adjacent(at(a), at(c)) && g.adjacent(at(b), at(d)) && !g.adjacent(at(b), at(c)))
                        return std::vector<int> { a, b, c, d };
    return std::nullopt;
}

std::optional<std::vector<int>> naive_i_violation(const Graph& g, const VertexOrder& ord)
{
    const int n = g.order();
    auto at = [&](int i) { return ord.sequence[i]; };
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                if (g.adjacent(at(a), at(c)) && !g.adjacent(at(a), at(b)))
                    return std::vector<int> { a, b, c };
    return std::nullopt;
}

bool has_mpt_order_by_permutation(const Graph& g)
{
    VertexOrder ord = identity_order(g.order());
    do {
        if (!naive_mpt_violation(g, ord))
            return true;
    } while (std::next_permutation(ord.sequence.begin(), ord.sequence.end()));
    return false;
}

} // namespace

TEST_CASE("verify_mpt_order")
{
    CHECK_FALSE(verify_mpt_order(families::cycle(4), identity_order(4)));

    auto violation = verify_mpt_order(edges_02_13(), identity_order(4));
    REQUIRE(violation);
    CHECK(violation->kind == OrderKind::mpt_order);
    CHECK(violation->positions == std::vector<int> { 0, 1, 2, 3 });
    CHECK(violation->describe() == "(0,1,2,3)");

    for (int n = 0; n <= 3; ++n)
        CHECK_FALSE(verify_mpt_order(families::complete(n), identity_order(n)));

    CHECK_THROWS_AS(verify_mpt_order(families::path(3), VertexOrder { { 0, 0, 1 } }), InputError);
    CHECK_THROWS_AS(verify_mpt_order(families::path(3), VertexOrder { { 0, 1 } }), InputError);
}

TEST_CASE("fast verifiers return the lexicographically first violation")
{
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 4 + trial % 6;
        unsigned mask = static_cast<unsigned>(rng()) & ((1u << (n * (n - 1) / 2)) - 1);
        Graph g = graph_from_mask(n, mask);
        VertexOrder ord = identity_order(n);
        std::shuffle(ord.sequence.begin(), ord.sequence.end(), rng);

        auto fast = verify_mpt_order(g, ord);
        auto slow = naive_mpt_violation(g, ord);
        REQUIRE(fast.has_value() == slow.has_value());
        if (fast)
            CHECK(fast->positions == *slow);

        auto fast_i = verify_i_order(g, ord);
        auto slow_i = naive_i_violation(g, ord);
        REQUIRE(fast_i.has_value() == slow_i.has_value());
        if (fast_i)
            CHECK(fast_i->positions == *slow_i);
    }
}

TEST_CASE("verify_i_order")
{
    // Intervals sorted by left endpoint.
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        auto iv = random_interval_rep(20, seed);
        Graph g = interval_adjacency(iv);
        VertexOrder ord = identity_order(20);
        std::stable_sort(ord.sequence.begin(), ord.sequence.end(),
            [&](Vertex a, Vertex b) { return iv.items[a].s < iv.items[b].s; });
        CHECK_FALSE(verify_i_order(g, ord));
    }

    Graph p3 = families::path(3);
    CHECK_FALSE(verify_i_order(p3, VertexOrder { { 1, 0, 2 } }));
    auto violation = verify_i_order(p3, VertexOrder { { 0, 2, 1 } });
    REQUIRE(violation);
    CHECK(violation->kind == OrderKind::i_order);
    CHECK(violation->vertices == std::vector<Vertex> { 0, 2, 1 });

    VertexOrder any { { 3, 1, 4, 0, 2 } };
    CHECK_FALSE(verify_i_order(Graph(5), any));
}

TEST_CASE("every I-order is an MPT-order")
{
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const int n = 1 + static_cast<int>(seed % 30);
        auto iv = random_interval_rep(n, seed + 100);
        Graph g = interval_adjacency(iv);
        VertexOrder ord = identity_order(n);
        std::stable_sort(ord.sequence.begin(), ord.sequence.end(),
            [&](Vertex a, Vertex b) { return iv.items[a].s < iv.items[b].s; });
        REQUIRE_FALSE(verify_i_order(g, ord));
        CHECK_FALSE(verify_mpt_order(g, ord));
    }
}

TEST_CASE("rep_from_order")
{
    Graph single = Graph::from_edges(3, std::vector<Edge> { { 0, 2 } });
    auto rep = rep_from_order(single, identity_order(3));
    CHECK(rep.items
        == std::vector<PointedInterval> {
            { q(1), q(1), q(3) }, { q(2), q(2), q(2) }, { q(1), q(3), q(3) } });
    CHECK(mpt_adjacency(rep) == single);

    auto edgeless = rep_from_order(Graph(4), identity_order(4));
    for (int i = 0; i < 4; ++i)
        CHECK(edgeless.items[i] == PointedInterval { q(i + 1), q(i + 1), q(i + 1) });

    auto k3 = rep_from_order(families::complete(3), identity_order(3));
    CHECK(k3.items
        == std::vector<PointedInterval> {
            { q(1), q(1), q(3) }, { q(1), q(2), q(3) }, { q(1), q(3), q(3) } });

    try {
        rep_from_order(edges_02_13(), identity_order(4));
        FAIL("expected an order violation");
    } catch (const OrderViolationError& err) {
        CHECK(err.violation().describe() == "(0,1,2,3)");
    }
}

TEST_CASE("order_from_rep")
{
    CHECK(order_from_rep(random_mpt_rep(9, 4)) == identity_order(9));

    MptRepresentation rep;
    for (long p : { 3, 1, 2 })
        rep.items.push_back({ q(p), q(p), q(p) });
    CHECK(order_from_rep(rep) == VertexOrder { { 1, 2, 0 } });

    // Tied points keep index order.
    MptRepresentation tied;
    for (long p : { 2, 1, 2, 1 })
        tied.items.push_back({ q(0), q(p), q(5) });
    CHECK(order_from_rep(tied) == VertexOrder { { 1, 3, 0, 2 } });
    CHECK_FALSE(verify_mpt_order(mpt_adjacency(tied), order_from_rep(tied)));

    std::mt19937_64 rng(19);
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const int n = 1 + static_cast<int>(seed % 40);
        auto base = random_mpt_rep(n, seed);
        std::vector<int> relabel(static_cast<std::size_t>(n));
        std::iota(relabel.begin(), relabel.end(), 0);
        std::shuffle(relabel.begin(), relabel.end(), rng);
        MptRepresentation shuffled;
        shuffled.items.resize(base.items.size());
        for (int i = 0; i < n; ++i)
            shuffled.items[relabel[i]] = base.items[i];
        Graph g = mpt_adjacency(shuffled);
        auto ord = order_from_rep(shuffled);
        CHECK_FALSE(verify_mpt_order(g, ord));
        auto rebuilt = rep_from_order(g, ord);
        CHECK(mpt_adjacency(rebuilt) == g);
        CHECK(order_from_rep(rebuilt) == ord);
    }
}

TEST_CASE("reversed MPT-orders stay valid")
{
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        auto rep = random_mpt_rep(15, seed);
        Graph g = mpt_adjacency(rep);
        CHECK_FALSE(verify_mpt_order(g, reversed(order_from_rep(rep))));
    }
}

TEST_CASE("brute_force_mpt_order")
{
    auto net = brute_force_mpt_order(families::net());
    REQUIRE(net);
    CHECK_FALSE(verify_mpt_order(families::net(), *net));

    CHECK_FALSE(brute_force_mpt_order(families::k222()));
    CHECK(brute_force_mpt_order(families::complete(5)));
    CHECK(brute_force_mpt_order(Graph(0)));

    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const int n = 1 + static_cast<int>(seed % 8);
        Graph g = interval_adjacency(random_interval_rep(n, seed + 77));
        auto ord = brute_force_mpt_order(g);
        REQUIRE(ord);
        CHECK_FALSE(verify_mpt_order(g, *ord));
    }

    CHECK_THROWS_AS(brute_force_mpt_order(families::path(13)), RefusalError);
}

TEST_CASE("brute_force_mpt_order returns the least order under the degree ranking")
{
    // Path 0-1-2: ranking is 0, 2, 1; the order 0 2 1 is valid since no
    // quadruple exists.
    auto ord = brute_force_mpt_order(families::path(3));
    REQUIRE(ord);
    CHECK(*ord == VertexOrder { { 0, 2, 1 } });
}

TEST_CASE("brute_force_mpt_order agrees with permutation search at n = 6")
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 150; ++trial) {
        Graph g = graph_from_mask(6, static_cast<unsigned>(rng()) & 0x7fff);
        auto ord = brute_force_mpt_order(g);
        CHECK(ord.has_value() == has_mpt_order_by_permutation(g));
        if (ord)
            CHECK(mpt_adjacency(rep_from_order(g, *ord)) == g);
    }
}

TEST_CASE("brute_force_i_order")
{
    auto p4 = brute_force_i_order(families::path(4));
    REQUIRE(p4);
    CHECK_FALSE(verify_i_order(families::path(4), *p4));
    CHECK_FALSE(brute_force_i_order(families::cycle(4)));
    CHECK_FALSE(brute_force_i_order(families::net()));
    CHECK_THROWS_AS(brute_force_i_order(families::path(9)), RefusalError);
}

TEST_CASE("two_interval_decomposition")
{
    MptRepresentation rep;
    for (auto [s, p, e] : { std::array<long, 3> { 1, 1, 3 }, { 2, 2, 2 }, { 1, 3, 3 } })
        rep.items.push_back({ q(s), q(p), q(e) });
    auto parts = two_interval_decomposition(rep);
    CHECK(parts.h1.items == std::vector<Interval> { { q(1), q(3) }, { q(2), q(2) }, { q(3), q(3) } });
    CHECK(parts.h2.items == std::vector<Interval> { { q(1), q(1) }, { q(2), q(2) }, { q(1), q(3) } });
    CHECK(interval_adjacency(parts.h1).edges() == std::vector<Edge> { { 0, 1 }, { 0, 2 } });
    CHECK(interval_adjacency(parts.h2).edges() == std::vector<Edge> { { 0, 2 }, { 1, 2 } });

    auto points = two_interval_decomposition(rep_from_order(Graph(3), identity_order(3)));
    CHECK(interval_adjacency(points.h1).edge_count() == 0);
    CHECK(interval_adjacency(points.h2).edge_count() == 0);

    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const int n = 1 + static_cast<int>(seed % 50);
        auto r = random_mpt_rep(n, seed + 9000);
        Graph g = mpt_adjacency(r);
        auto d = two_interval_decomposition(r);
        Graph h1 = interval_adjacency(d.h1);
        Graph h2 = interval_adjacency(d.h2);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                CHECK(g.adjacent(u, v) == (h1.adjacent(u, v) && h2.adjacent(u, v)));
        auto sigma = order_from_rep(r);
        CHECK_FALSE(verify_i_order(h1, sigma));
        CHECK_FALSE(verify_i_order(h2, reversed(sigma)));
    }
}

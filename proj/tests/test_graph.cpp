#include "mptkit/error.hpp"
#include "mptkit/families.hpp"
#include "mptkit/graph.hpp"
#include "mptkit/oracles.hpp"

#include <doctest.h>

#include <random>
#include <vector>

using namespace mptkit;

namespace {

Graph random_graph(int n, double density, std::mt19937_64& rng)
{
    std::bernoulli_distribution coin(density);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng))
                edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

std::vector<Rational> weights_of(std::initializer_list<long> values)
{
    std::vector<Rational> out;
    for (long v : values)
        out.emplace_back(v);
    return out;
}

} // namespace

TEST_CASE("graph_from_edge_list builds simple graphs")
{
    SUBCASE("empty")
    {
        Graph g = graph_from_edge_list(0, {});
        CHECK(g.order() == 0);
        CHECK(g.edge_count() == 0);
    }
    SUBCASE("the net from one-based labels")
    {
        const std::vector<Edge> one_based { { 1, 2 }, { 2, 4 }, { 2, 6 }, { 4, 6 }, { 3, 4 }, { 5, 6 } };
        std::vector<Edge> pairs;
        for (auto [u, v] : one_based)
            pairs.emplace_back(u - 1, v - 1);
        CHECK(graph_from_edge_list(6, pairs) == families::net());
    }
    SUBCASE("C4")
    {
        const std::vector<Edge> pairs { { 0, 1 }, { 1, 2 }, { 2, 3 }, { 3, 0 } };
        Graph g = graph_from_edge_list(4, pairs);
        for (Vertex v = 0; v < 4; ++v)
            CHECK(g.degree(v) == 2);
        CHECK(g == families::cycle(4));
    }
    SUBCASE("duplicates collapse and order is irrelevant")
    {
        const std::vector<Edge> pairs { { 2, 0 }, { 0, 2 }, { 1, 0 } };
        Graph g = graph_from_edge_list(3, pairs);
        CHECK(g.edge_count() == 2);
        CHECK(g.adjacent(2, 0));
        CHECK(g.adjacent(0, 2));
        CHECK(g.edges() == std::vector<Edge> { { 0, 1 }, { 0, 2 } });
    }
    SUBCASE("errors name the pair")
    {
        const std::vector<Edge> loop { { 1, 1 } };
        const std::vector<Edge> range { { 0, 3 } };
        CHECK_THROWS_WITH_AS(graph_from_edge_list(3, loop), doctest::Contains("(1,1)"), InputError);
        CHECK_THROWS_WITH_AS(graph_from_edge_list(3, range), doctest::Contains("(0,3)"), InputError);
    }
}

TEST_CASE("induced_subgraph")
{
    CHECK(induced_subgraph(families::net(), { 1, 3, 5 }) == families::complete(3));
    CHECK(induced_subgraph(families::net(), {}).order() == 0);
    CHECK(induced_subgraph(families::cycle(4), { 0, 1, 2 }) == families::path(3));
    CHECK_THROWS_AS(induced_subgraph(families::cycle(4), { 2, 1 }), InputError);
    CHECK_THROWS_AS(induced_subgraph(families::cycle(4), { 4 }), InputError);

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = random_graph(9, 0.4, rng);
        VertexSet all;
        for (Vertex v = 0; v < 9; ++v)
            all.push_back(v);
        CHECK(induced_subgraph(g, all) == g);
        VertexSet s { 1, 4, 5, 8 };
        Graph h = induced_subgraph(g, s);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                if (i != j)
                    CHECK(h.adjacent(i, j) == g.adjacent(s[i], s[j]));
    }
}

TEST_CASE("named families")
{
    Graph net = family("net");
    CHECK(net.order() == 6);
    CHECK(net.edge_count() == 6);

    Graph k = family("k222");
    CHECK(k.order() == 6);
    CHECK(k.edge_count() == 12);
    CHECK(!k.adjacent(4, 5));
    CHECK(induced_subgraph(k, { 0, 1, 2, 3 }) == families::cycle(4));
    for (Vertex v = 0; v < 4; ++v)
        CHECK((k.adjacent(4, v) && k.adjacent(5, v)));

    Graph cc = family("complement-cycle", 7);
    CHECK(cc.order() == 7);
    for (Vertex v = 0; v < 7; ++v)
        CHECK(cc.degree(v) == 4);

    CHECK(family("complete-bipartite:2,3").edge_count() == 6);
    CHECK(family("path", 4).edge_count() == 3);
    CHECK(family("fan:5").edge_count() == 7);
    CHECK_THROWS_AS(family("petersen"), InputError);
    CHECK_THROWS_AS(family("cycle:x"), InputError);
}

TEST_CASE("brute_force_alpha")
{
    auto net = brute_force_alpha(families::net());
    CHECK(net.value == 3);
    CHECK(net.set == VertexSet { 0, 2, 4 });

    CHECK(brute_force_alpha(families::complete(5)).value == 1);

    const auto w = weights_of({ 1, 5, 1, 5 });
    auto c4 = brute_force_alpha(families::cycle(4), w);
    CHECK(c4.value == 10);
    CHECK(c4.set == VertexSet { 1, 3 });

    auto empty = brute_force_alpha(Graph(0));
    CHECK(empty.value == 0);
    CHECK(empty.set.empty());

    const std::vector<Rational> halves { Rational(1, 2), Rational(1, 3) };
    CHECK(brute_force_alpha(families::path(2), halves).value == Rational(1, 2));

    const auto negative = weights_of({ -1, 1 });
    CHECK_THROWS_AS(brute_force_alpha(families::path(2), negative), InputError);
    CHECK_THROWS_AS(brute_force_alpha(families::path(21)), RefusalError);
}

TEST_CASE("brute_force_alpha agrees with subset enumeration")
{
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> weight(0, 9);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + trial % 10;
        Graph g = random_graph(n, 0.35, rng);
        std::vector<Rational> w;
        for (int i = 0; i < n; ++i)
            w.emplace_back(weight(rng));
        Rational best = -1;
        VertexSet best_set;
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            VertexSet s;
            Rational total = 0;
            for (int v = 0; v < n; ++v)
                if (mask >> v & 1) {
                    s.push_back(v);
                    total += w[v];
                }
            if (!is_independent_set(g, s))
                continue;
            if (total > best || (total == best && s < best_set)) {
                best = total;
                best_set = s;
            }
        }
        auto result = brute_force_alpha(g, w);
        CHECK(result.value == best);
        CHECK(result.set == best_set);
    }
}

TEST_CASE("brute_force_chi")
{
    CHECK_FALSE(brute_force_chi(families::cycle(5), 2));
    auto three = brute_force_chi(families::cycle(5), 3);
    REQUIRE(three);
    CHECK(is_valid_coloring(families::cycle(5), *three));
    CHECK(brute_force_chi_exact(families::complete(5)).k == 5);
    CHECK(brute_force_chi_exact(families::net()).k == 3);
    for (int k = 1; k <= 8; ++k)
        CHECK(brute_force_chi_exact(families::complete(k)).k == k);
    CHECK(brute_force_chi_exact(Graph(0)).k == 0);
    CHECK(brute_force_chi_exact(Graph(3)).k == 1);
    CHECK_THROWS_AS(brute_force_chi(families::path(13), 2), RefusalError);
}

TEST_CASE("brute_force_gamma")
{
    auto net = brute_force_gamma(families::net());
    CHECK(net.size() == 3);
    CHECK(is_valid_clique_cover(families::net(), net));
    CHECK(brute_force_gamma(families::complete(4)).size() == 1);
    auto c4 = brute_force_gamma(families::cycle(4));
    CHECK(c4.size() == 2);
    CHECK(is_valid_clique_cover(families::cycle(4), c4));

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + trial % 12;
        Graph g = random_graph(n, 0.5, rng);
        auto cover = brute_force_gamma(g);
        CHECK(is_valid_clique_cover(g, cover));
        CHECK(cover.size() >= static_cast<int>(brute_force_alpha(g).set.size()));
    }
}

TEST_CASE("full_subdivision")
{
    Graph k4 = full_subdivision(families::complete(4));
    CHECK(k4.order() == 10);
    CHECK(k4.edge_count() == 12);
    CHECK(is_bipartite(k4));
    CHECK(girth(k4) == 6);

    CHECK(full_subdivision(Graph(5)) == Graph(5));

    Graph k23 = full_subdivision(families::complete_bipartite(2, 3));
    CHECK(k23.order() == 11);
    CHECK(k23.edge_count() == 12);
    CHECK(girth(k23) >= 6);

    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = random_graph(7, 0.5, rng);
        Graph s = full_subdivision(g);
        CHECK(s.order() == g.order() + g.edge_count());
        CHECK(is_bipartite(s));
        const int gg = girth(s);
        CHECK((gg == 0 || gg >= 6));
    }
}

TEST_CASE("universal_extension")
{
    CHECK(universal_extension(families::cycle(4)) == families::k222());
    CHECK(universal_extension(Graph(1)) == Graph::from_edges(3, std::vector<Edge> { { 0, 1 }, { 0, 2 } }));
    Graph net = universal_extension(families::net());
    CHECK(net.order() == 8);
    CHECK(net.degree(6) == 6);
    CHECK(net.degree(7) == 6);
    CHECK(!net.adjacent(6, 7));
}

TEST_CASE("validators")
{
    Graph c5 = families::cycle(5);
    CHECK(is_independent_set(c5, { 0, 2 }));
    CHECK_FALSE(is_independent_set(c5, { 0, 1 }));
    CHECK(is_clique(c5, { 3, 4 }));
    CHECK_FALSE(is_clique(c5, { 0, 2 }));
    CHECK(is_connected(c5));
    CHECK_FALSE(is_connected(Graph(2)));
    CHECK_FALSE(is_bipartite(c5));
    CHECK(girth(c5) == 5);
    CHECK(girth(families::path(4)) == 0);
    CHECK_FALSE(is_valid_clique_cover(c5, CliqueCover { { { 0, 1 }, { 2, 3 } } }));
    CHECK_FALSE(is_valid_clique_cover(c5, CliqueCover { { { 0, 1 }, { 1, 2 }, { 3, 4 } } }));
    CHECK(is_valid_clique_cover(c5, CliqueCover { { { 0, 1 }, { 2, 3 }, { 4 } } }));
    CHECK_FALSE(is_valid_coloring(c5, Coloring { { 0, 1, 0, 1, 0 }, 2 }));
    CHECK_FALSE(is_valid_coloring(c5, Coloring { { 0, 1, 0, 1, 3 }, 4 }));
}

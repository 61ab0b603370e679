#include "mptkit/graph.hpp"

#include "mptkit/error.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace mptkit {

Graph::Graph(int n)
    : n_(n)
    , adj_(static_cast<std::size_t>(n))
    , matrix_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0)
{
    if (n < 0)
        throw InputError("negative vertex count");
}

Graph Graph::from_edges(int n, std::span<const Edge> pairs)
{
    Graph g(n);
    for (const auto& [u, v] : pairs) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw InputError("edge " + describe_edge({ u, v }) + " has an endpoint outside 0.."
                + std::to_string(n - 1));
        if (u == v)
            throw InputError("edge " + describe_edge({ u, v }) + " is a self-loop");
        auto& cell = g.matrix_[static_cast<std::size_t>(u) * n + v];
        if (cell)
            continue;
        cell = 1;
        g.matrix_[static_cast<std::size_t>(v) * n + u] = 1;
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
        ++g.m_;
    }
    for (auto& list : g.adj_)
        std::sort(list.begin(), list.end());
    return g;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> result;
    result.reserve(static_cast<std::size_t>(m_));
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : adj_[u])
            if (u < v)
                result.emplace_back(u, v);
    return result;
}

void validate_vertex_set(const Graph& g, const VertexSet& s)
{
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || s[i] >= g.order())
            throw InputError("vertex " + std::to_string(s[i]) + " is not in the graph");
        if (i > 0 && s[i] <= s[i - 1])
            throw InputError("vertex set is not strictly increasing");
    }
}

Graph induced_subgraph(const Graph& g, const VertexSet& s)
{
    validate_vertex_set(g, s);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.adjacent(s[i], s[j]))
                edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    return Graph::from_edges(static_cast<int>(s.size()), edges);
}

Graph complement(const Graph& g)
{
    std::vector<Edge> edges;
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v))
                edges.emplace_back(u, v);
    return Graph::from_edges(g.order(), edges);
}

Graph full_subdivision(const Graph& g)
{
    auto original = g.edges();
    std::vector<Edge> edges;
    edges.reserve(original.size() * 2);
    Vertex next = g.order();
    for (const auto& [u, v] : original) {
        edges.emplace_back(u, next);
        edges.emplace_back(next, v);
        ++next;
    }
    return Graph::from_edges(next, edges);
}

Graph universal_extension(const Graph& h)
{
    auto edges = h.edges();
    const Vertex x = h.order();
    const Vertex y = h.order() + 1;
    for (Vertex v = 0; v < h.order(); ++v) {
        edges.emplace_back(v, x);
        edges.emplace_back(v, y);
    }
    return Graph::from_edges(h.order() + 2, edges);
}

bool is_independent_set(const Graph& g, const VertexSet& s)
{
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.adjacent(s[i], s[j]))
                return false;
    return true;
}

bool is_clique(const Graph& g, const VertexSet& s)
{
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (!g.adjacent(s[i], s[j]))
                return false;
    return true;
}

bool is_connected(const Graph& g)
{
    if (g.order() == 0)
        return true;
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    std::vector<Vertex> stack { 0 };
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(v))
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == g.order();
}

bool is_bipartite(const Graph& g)
{
    std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
    for (Vertex root = 0; root < g.order(); ++root) {
        if (side[root] != -1)
            continue;
        side[root] = 0;
        std::queue<Vertex> queue;
        queue.push(root);
        while (!queue.empty()) {
            Vertex v = queue.front();
            queue.pop();
            for (Vertex w : g.neighbors(v)) {
                if (side[w] == -1) {
                    side[w] = 1 - side[v];
                    queue.push(w);
                } else if (side[w] == side[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_valid_clique_cover(const Graph& g, const CliqueCover& cover)
{
    std::vector<char> covered(static_cast<std::size_t>(g.order()), 0);
    for (const auto& clique : cover.cliques) {
        if (clique.empty())
            return false;
        for (Vertex v : clique) {
            if (v < 0 || v >= g.order() || covered[v])
                return false;
            covered[v] = 1;
        }
        if (!is_clique(g, clique))
            return false;
    }
    return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

bool is_valid_coloring(const Graph& g, const Coloring& coloring)
{
    if (static_cast<int>(coloring.color.size()) != g.order())
        return false;
    std::vector<char> used(static_cast<std::size_t>(coloring.k), 0);
    for (Vertex v = 0; v < g.order(); ++v) {
        int c = coloring.color[v];
        if (c < 0 || c >= coloring.k)
            return false;
        used[c] = 1;
    }
    if (!std::all_of(used.begin(), used.end(), [](char c) { return c != 0; }))
        return false;
    for (const auto& [u, v] : g.edges())
        if (coloring.color[u] == coloring.color[v])
            return false;
    return true;
}

int girth(const Graph& g)
{
    int best = std::numeric_limits<int>::max();
    const int n = g.order();
    std::vector<int> dist(static_cast<std::size_t>(n));
    std::vector<Vertex> parent(static_cast<std::size_t>(n));
    for (Vertex root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[root] = 0;
        parent[root] = -1;
        std::queue<Vertex> queue;
        queue.push(root);
        while (!queue.empty()) {
            Vertex v = queue.front();
            queue.pop();
            for (Vertex w : g.neighbors(v)) {
                if (dist[w] == -1) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push(w);
                } else if (parent[v] != w) {
                    best = std::min(best, dist[v] + dist[w] + 1);
                }
            }
        }
    }
    return best == std::numeric_limits<int>::max() ? 0 : best;
}

std::string describe_edge(const Edge& e)
{
    return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

} // namespace mptkit

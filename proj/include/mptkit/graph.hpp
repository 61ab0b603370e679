#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace mptkit {

// Vertices are dense 0-based indices throughout the library.
using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Strictly increasing list of vertices of some host graph.
using VertexSet = std::vector<Vertex>;

struct CliqueCover {
    std::vector<VertexSet> cliques;

    int size() const { return static_cast<int>(cliques.size()); }
};

struct Coloring {
    std::vector<int> color; // color[v] in 0..k-1
    int k = 0;
};

// Undirected simple graph. Immutable once built; adjacency queries are O(1)
// through a dense matrix, neighbor lists are sorted.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    // Duplicate pairs collapse and pair order is irrelevant. Self-loops and
    // out-of-range endpoints raise InputError naming the pair.
    static Graph from_edges(int n, std::span<const Edge> pairs);

    int order() const { return n_; }
    int edge_count() const { return m_; }

    bool adjacent(Vertex u, Vertex v) const
    {
        return matrix_[static_cast<std::size_t>(u) * n_ + v] != 0;
    }
    std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }

    // Sorted (u < v) edge list.
    std::vector<Edge> edges() const;

    bool operator==(const Graph& other) const
    {
        return n_ == other.n_ && matrix_ == other.matrix_;
    }

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::uint8_t> matrix_;
};

inline Graph graph_from_edge_list(int n, std::span<const Edge> pairs)
{
    return Graph::from_edges(n, pairs);
}

// Raises InputError unless s is strictly increasing with members < g.order().
void validate_vertex_set(const Graph& g, const VertexSet& s);

// Vertex i of the result is the i-th member of s.
Graph induced_subgraph(const Graph& g, const VertexSet& s);

Graph complement(const Graph& g);

// Each edge {u,v} (in edges() order) becomes a new vertex n + index adjacent
// to exactly u and v.
Graph full_subdivision(const Graph& g);

// Adds vertices n and n+1, each adjacent to all of g and not to each other.
Graph universal_extension(const Graph& h);

bool is_independent_set(const Graph& g, const VertexSet& s);
bool is_clique(const Graph& g, const VertexSet& s);
bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);

// Cliques pairwise disjoint, covering every vertex, each a clique of g.
bool is_valid_clique_cover(const Graph& g, const CliqueCover& cover);
bool is_valid_coloring(const Graph& g, const Coloring& coloring);

// Length of a shortest cycle, or 0 for forests.
int girth(const Graph& g);

std::string describe_edge(const Edge& e);

} // namespace mptkit

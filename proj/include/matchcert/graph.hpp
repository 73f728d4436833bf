#pragma once

#include <compare>
#include <cstddef>
#include <utility>
#include <vector>

#include "matchcert/errors.hpp"

namespace matchcert {

/// Unordered pair of distinct vertices, stored canonically as (min, max).
struct Edge {
    int u;
    int v;

    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {
        if (a == b)
            throw LoopEdgeError("edge endpoints must be distinct: " + std::to_string(a));
    }

    auto operator<=>(const Edge&) const = default;
};

/// Finite simple graph over dense vertex ids 0..n-1.
///
/// Adjacency is symmetric and irreflexive by construction. Values are
/// immutable after construction; every mutating-looking operation returns
/// a new graph.
class Graph {
public:
    Graph() = default;

    /// Edgeless graph on n vertices.
    explicit Graph(int n);

    /// Builds a graph from an edge list. Duplicate and reversed pairs are
    /// deduplicated. Throws LoopEdgeError / VertexOutOfRangeError.
    static Graph fromEdges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertexCount() const { return n_; }
    bool adjacent(int u, int v) const;
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    /// All edges, sorted canonically.
    std::vector<Edge> edges() const;
    std::size_t edgeCount() const;
    bool hasEdge(Edge e) const { return adjacent(e.u, e.v); }

    /// Copy of this graph with edge {u,v} added (no-op if present).
    Graph withEdge(int u, int v) const;

    bool operator==(const Graph&) const = default;

private:
    void checkVertex(int v) const;
    void insertEdge(int u, int v);

    int n_ = 0;
    std::vector<std::vector<int>> adj_; // sorted neighbor lists
};

/// Edge-set symmetric difference; vertex set unchanged.
Graph symmDiff(const Graph& g, const Graph& h);

/// True iff every edge of h is an edge of g (same vertex count required).
bool isSubgraphOf(const Graph& h, const Graph& g);

/// True iff every pair of distinct vertices in s is adjacent in g.
bool isClique(const Graph& g, const std::vector<int>& s);

/// Subgraph of an ambient graph: an active vertex set plus an edge set,
/// every edge lying inside the ambient graph with both endpoints active.
class Subgraph {
public:
    Subgraph(Graph ambient, std::vector<int> verts, std::vector<Edge> edges);

    const Graph& ambient() const { return ambient_; }
    const std::vector<int>& verts() const { return verts_; }
    const std::vector<Edge>& edges() const { return edges_; }
    bool containsVertex(int v) const;

private:
    Graph ambient_;
    std::vector<int> verts_;  // sorted
    std::vector<Edge> edges_; // sorted
};

/// Subgraph on all of g's vertices with all of g's edges.
Subgraph fullSubgraph(const Graph& g);

/// Removes the vertices in `removed` along with all incident edges;
/// the remaining vertices keep their ambient ids.
Subgraph deleteVerts(const Graph& g, const std::vector<int>& removed);

/// Graph on the full ambient vertex count whose edges are exactly s's edges.
Graph spanningCoe(const Subgraph& s);

struct CoercedGraph {
    Graph graph;                // on |verts| reindexed vertices
    std::vector<int> toAmbient; // new id -> ambient id, strictly increasing
};

/// Reindexes the subgraph onto 0..|verts|-1, returning the index map.
CoercedGraph coe(const Subgraph& s);

} // namespace matchcert

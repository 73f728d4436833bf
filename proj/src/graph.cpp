#include "matchcert/graph.hpp"

#include <algorithm>

namespace matchcert {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n)) {
    if (n < 0)
        throw VertexOutOfRangeError("vertex count must be nonnegative");
}

void Graph::checkVertex(int v) const {
    if (v < 0 || v >= n_)
        throw VertexOutOfRangeError("vertex " + std::to_string(v) + " out of range [0," +
                                    std::to_string(n_) + ")");
}

void Graph::insertEdge(int u, int v) {
    auto& nu = adj_[static_cast<std::size_t>(u)];
    auto it = std::lower_bound(nu.begin(), nu.end(), v);
    if (it != nu.end() && *it == v)
        return;
    nu.insert(it, v);
    auto& nv = adj_[static_cast<std::size_t>(v)];
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
}

Graph Graph::fromEdges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) {
        if (u == v)
            throw LoopEdgeError("loop edge at vertex " + std::to_string(u));
        g.checkVertex(u);
        g.checkVertex(v);
        g.insertEdge(u, v);
    }
    return g;
}

bool Graph::adjacent(int u, int v) const {
    checkVertex(u);
    checkVertex(v);
    const auto& nu = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(nu.begin(), nu.end(), v);
}

const std::vector<int>& Graph::neighbors(int v) const {
    checkVertex(v);
    return adj_[static_cast<std::size_t>(v)];
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[static_cast<std::size_t>(u)])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

std::size_t Graph::edgeCount() const {
    std::size_t deg = 0;
    for (const auto& nbrs : adj_)
        deg += nbrs.size();
    return deg / 2;
}

Graph Graph::withEdge(int u, int v) const {
    if (u == v)
        throw LoopEdgeError("loop edge at vertex " + std::to_string(u));
    checkVertex(u);
    checkVertex(v);
    Graph g = *this;
    g.insertEdge(u, v);
    return g;
}

Graph symmDiff(const Graph& g, const Graph& h) {
    if (g.vertexCount() != h.vertexCount())
        throw SizeMismatchError("symmDiff requires equal vertex counts");
    std::vector<std::pair<int, int>> edges;
    for (const Edge& e : g.edges())
        if (!h.hasEdge(e))
            edges.emplace_back(e.u, e.v);
    for (const Edge& e : h.edges())
        if (!g.hasEdge(e))
            edges.emplace_back(e.u, e.v);
    return Graph::fromEdges(g.vertexCount(), edges);
}

bool isSubgraphOf(const Graph& h, const Graph& g) {
    if (g.vertexCount() != h.vertexCount())
        throw SizeMismatchError("subgraph comparison requires equal vertex counts");
    for (const Edge& e : h.edges())
        if (!g.hasEdge(e))
            return false;
    return true;
}

bool isClique(const Graph& g, const std::vector<int>& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (!g.adjacent(s[i], s[j]))
                return false;
    return true;
}

Subgraph::Subgraph(Graph ambient, std::vector<int> verts, std::vector<Edge> edges)
    : ambient_(std::move(ambient)), verts_(std::move(verts)), edges_(std::move(edges)) {
    std::sort(verts_.begin(), verts_.end());
    verts_.erase(std::unique(verts_.begin(), verts_.end()), verts_.end());
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    for (int v : verts_)
        if (v < 0 || v >= ambient_.vertexCount())
            throw VertexOutOfRangeError("subgraph vertex " + std::to_string(v) + " out of range");
    for (const Edge& e : edges_) {
        if (!ambient_.hasEdge(e))
            throw EdgeAbsentError("subgraph edge not present in ambient graph");
        if (!containsVertex(e.u) || !containsVertex(e.v))
            throw VertexNotInSubgraphError("subgraph edge endpoint outside verts");
    }
}

bool Subgraph::containsVertex(int v) const {
    return std::binary_search(verts_.begin(), verts_.end(), v);
}

Subgraph fullSubgraph(const Graph& g) {
    std::vector<int> verts(static_cast<std::size_t>(g.vertexCount()));
    for (int v = 0; v < g.vertexCount(); ++v)
        verts[static_cast<std::size_t>(v)] = v;
    return Subgraph(g, std::move(verts), g.edges());
}

Subgraph deleteVerts(const Graph& g, const std::vector<int>& removed) {
    std::vector<bool> gone(static_cast<std::size_t>(g.vertexCount()), false);
    for (int v : removed) {
        if (v < 0 || v >= g.vertexCount())
            throw VertexOutOfRangeError("deleted vertex " + std::to_string(v) + " out of range");
        gone[static_cast<std::size_t>(v)] = true;
    }
    std::vector<int> verts;
    for (int v = 0; v < g.vertexCount(); ++v)
        if (!gone[static_cast<std::size_t>(v)])
            verts.push_back(v);
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        if (!gone[static_cast<std::size_t>(e.u)] && !gone[static_cast<std::size_t>(e.v)])
            edges.push_back(e);
    return Subgraph(g, std::move(verts), std::move(edges));
}

Graph spanningCoe(const Subgraph& s) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(s.edges().size());
    for (const Edge& e : s.edges())
        edges.emplace_back(e.u, e.v);
    return Graph::fromEdges(s.ambient().vertexCount(), edges);
}

CoercedGraph coe(const Subgraph& s) {
    CoercedGraph out;
    out.toAmbient = s.verts();
    std::vector<int> toLocal(static_cast<std::size_t>(s.ambient().vertexCount()), -1);
    for (std::size_t i = 0; i < out.toAmbient.size(); ++i)
        toLocal[static_cast<std::size_t>(out.toAmbient[i])] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(s.edges().size());
    for (const Edge& e : s.edges())
        edges.emplace_back(toLocal[static_cast<std::size_t>(e.u)],
                           toLocal[static_cast<std::size_t>(e.v)]);
    out.graph = Graph::fromEdges(static_cast<int>(out.toAmbient.size()), edges);
    return out;
}

} // namespace matchcert

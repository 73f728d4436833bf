#include "matchcert/matching.hpp"

#include <algorithm>

namespace matchcert {

Matching Matching::fromPairs(int n, const std::vector<std::pair<int, int>>& pairs) {
    Matching m(n);
    for (const auto& [u, v] : pairs) {
        if (u == v)
            throw LoopEdgeError("matched pair with equal endpoints: " + std::to_string(u));
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw VertexOutOfRangeError("matched vertex out of range");
        if (m.partner_[static_cast<std::size_t>(u)] >= 0 ||
            m.partner_[static_cast<std::size_t>(v)] >= 0)
            throw PreconditionError("vertex matched twice");
        m.partner_[static_cast<std::size_t>(u)] = v;
        m.partner_[static_cast<std::size_t>(v)] = u;
    }
    return m;
}

Matching Matching::fromEdgeGraph(const Graph& g) {
    for (int v = 0; v < g.vertexCount(); ++v)
        if (g.degree(v) > 1)
            throw PreconditionError("graph is not a matching: vertex " + std::to_string(v) +
                                    " has degree " + std::to_string(g.degree(v)));
    Matching m(g.vertexCount());
    for (const Edge& e : g.edges()) {
        m.partner_[static_cast<std::size_t>(e.u)] = e.v;
        m.partner_[static_cast<std::size_t>(e.v)] = e.u;
    }
    return m;
}

int Matching::partnerOf(int v) const {
    if (v < 0 || v >= size())
        throw VertexOutOfRangeError("vertex " + std::to_string(v) + " out of range");
    return partner_[static_cast<std::size_t>(v)];
}

std::vector<Edge> Matching::edges() const {
    std::vector<Edge> out;
    for (int v = 0; v < size(); ++v)
        if (partner_[static_cast<std::size_t>(v)] > v)
            out.emplace_back(v, partner_[static_cast<std::size_t>(v)]);
    return out;
}

std::vector<int> Matching::coveredVertices() const {
    std::vector<int> out;
    for (int v = 0; v < size(); ++v)
        if (partner_[static_cast<std::size_t>(v)] >= 0)
            out.push_back(v);
    return out;
}

Graph Matching::asGraph() const {
    std::vector<std::pair<int, int>> pairs;
    for (const Edge& e : edges())
        pairs.emplace_back(e.u, e.v);
    return Graph::fromEdges(size(), pairs);
}

bool verifyMatching(const Graph& host, const Matching& m) {
    if (m.size() != host.vertexCount())
        return false;
    for (int v = 0; v < m.size(); ++v) {
        int w = m.partnerOf(v);
        if (w < 0)
            continue;
        if (w >= m.size() || w == v)
            return false;
        if (m.partnerOf(w) != v)
            return false;
        if (!host.adjacent(v, w))
            return false;
    }
    return true;
}

bool verifyPerfectMatching(const Graph& host, const Matching& m) {
    if (!verifyMatching(host, m))
        return false;
    for (int v = 0; v < m.size(); ++v)
        if (!m.covers(v))
            return false;
    return true;
}

bool isCyclesGraph(const Graph& g) {
    for (int v = 0; v < g.vertexCount(); ++v) {
        int d = g.degree(v);
        if (d != 0 && d != 2)
            return false;
    }
    return true;
}

bool isAlternating(const Graph& g, const Graph& m) {
    if (g.vertexCount() != m.vertexCount())
        throw SizeMismatchError("isAlternating requires equal vertex counts");
    for (int v = 0; v < g.vertexCount(); ++v) {
        const auto& nbrs = g.neighbors(v);
        for (std::size_t i = 0; i < nbrs.size(); ++i)
            for (std::size_t j = i + 1; j < nbrs.size(); ++j)
                if (m.adjacent(v, nbrs[i]) == m.adjacent(v, nbrs[j]))
                    return false;
    }
    return true;
}

Matching symmDiffAugment(const Graph& host, const Matching& m, const Graph& d) {
    if (!verifyPerfectMatching(host, m))
        throw PreconditionError("symmDiffAugment: input is not a perfect matching of the host");
    if (!isCyclesGraph(d))
        throw PreconditionError("symmDiffAugment: flip graph is not a union of cycles");
    if (!isAlternating(d, m.asGraph()))
        throw PreconditionError("symmDiffAugment: flip graph does not alternate with the matching");
    Matching out = Matching::fromEdgeGraph(symmDiff(m.asGraph(), d));
    if (!verifyPerfectMatching(host, out))
        throw InternalInvariantError("symmDiffAugment produced an invalid matching");
    return out;
}

Walk cycleThroughEdge(const Graph& d, Edge e) {
    if (!isCyclesGraph(d))
        throw PreconditionError("cycleThroughEdge requires a union of cycles");
    if (!d.hasEdge(e))
        throw EdgeAbsentError("cycleThroughEdge: edge not present");
    std::vector<int> verts{e.u, e.v};
    int prev = e.u;
    int cur = e.v;
    while (cur != e.u) {
        const auto& nbrs = d.neighbors(cur); // exactly two
        int next = (nbrs[0] == prev) ? nbrs[1] : nbrs[0];
        verts.push_back(next);
        prev = cur;
        cur = next;
    }
    return Walk(d, std::move(verts));
}

Graph matchingSymmDiff(const Matching& m1, const Matching& m2) {
    if (m1.size() != m2.size())
        throw SizeMismatchError("matchingSymmDiff requires equal vertex counts");
    return symmDiff(m1.asGraph(), m2.asGraph());
}

} // namespace matchcert

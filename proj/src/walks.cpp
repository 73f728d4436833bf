#include "matchcert/walks.hpp"

#include <algorithm>
#include <numeric>

namespace matchcert {

Walk::Walk(const Graph& host, std::vector<int> verts) : verts_(std::move(verts)) {
    if (verts_.empty())
        throw PreconditionError("walk must contain at least one vertex");
    for (int v : verts_)
        if (v < 0 || v >= host.vertexCount())
            throw VertexOutOfRangeError("walk vertex " + std::to_string(v) + " out of range");
    for (std::size_t i = 0; i + 1 < verts_.size(); ++i)
        if (!host.adjacent(verts_[i], verts_[i + 1]))
            throw EdgeAbsentError("walk step " + std::to_string(verts_[i]) + "-" +
                                  std::to_string(verts_[i + 1]) + " is not an edge");
}

std::vector<Edge> Walk::edges() const {
    std::vector<Edge> out;
    out.reserve(verts_.size() - 1);
    for (std::size_t i = 0; i + 1 < verts_.size(); ++i)
        out.emplace_back(verts_[i], verts_[i + 1]);
    return out;
}

namespace {

template <typename T>
bool noDuplicates(std::vector<T> xs) {
    std::sort(xs.begin(), xs.end());
    return std::adjacent_find(xs.begin(), xs.end()) == xs.end();
}

} // namespace

WalkFlags Walk::classify() const {
    WalkFlags f;
    f.isTrail = noDuplicates(edges());
    f.isPath = f.isTrail && noDuplicates(verts_);
    f.isCircuit = f.isTrail && closed() && length() > 0;
    if (f.isCircuit) {
        std::vector<int> tail(verts_.begin() + 1, verts_.end());
        f.isCycle = noDuplicates(std::move(tail));
    }
    return f;
}

namespace {

// Union-find over ambient vertex ids.
struct DisjointSet {
    std::vector<int> parent;

    explicit DisjointSet(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }

    int find(int v) {
        while (parent[static_cast<std::size_t>(v)] != v) {
            parent[static_cast<std::size_t>(v)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
            v = parent[static_cast<std::size_t>(v)];
        }
        return v;
    }

    void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

} // namespace

ComponentPartition connectedComponents(const Subgraph& s) {
    const int n = s.ambient().vertexCount();
    DisjointSet dsu(n);
    for (const Edge& e : s.edges())
        dsu.unite(e.u, e.v);

    ComponentPartition p;
    p.componentOf.assign(static_cast<std::size_t>(n), -1);
    std::vector<int> rootToComponent(static_cast<std::size_t>(n), -1);
    // verts are ascending, so components come out ordered by smallest member.
    for (int v : s.verts()) {
        int root = dsu.find(v);
        int& cid = rootToComponent[static_cast<std::size_t>(root)];
        if (cid < 0) {
            cid = static_cast<int>(p.components.size());
            p.components.emplace_back();
        }
        p.componentOf[static_cast<std::size_t>(v)] = cid;
        p.components[static_cast<std::size_t>(cid)].push_back(v);
    }
    return p;
}

bool reachable(const Subgraph& s, int u, int v) {
    if (!s.containsVertex(u) || !s.containsVertex(v))
        throw VertexNotInSubgraphError("reachability endpoints must be active vertices");
    ComponentPartition p = connectedComponents(s);
    return p.componentOf[static_cast<std::size_t>(u)] == p.componentOf[static_cast<std::size_t>(v)];
}

std::vector<std::vector<int>> oddComponents(const Subgraph& s) {
    std::vector<std::vector<int>> out;
    for (auto& comp : connectedComponents(s).components)
        if (comp.size() % 2 == 1)
            out.push_back(comp);
    return out;
}

} // namespace matchcert

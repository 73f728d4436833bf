#pragma once

#include <vector>

#include "matchcert/graph.hpp"

namespace matchcert {

struct WalkFlags {
    bool isTrail = false;   // no repeated edge
    bool isPath = false;    // trail, no repeated vertex
    bool isCircuit = false; // nonempty closed trail
    bool isCycle = false;   // circuit, no repeated vertex except the endpoints
};

/// Nonempty vertex sequence with consecutive vertices adjacent in the host
/// graph. Validated at construction; afterwards a plain value.
class Walk {
public:
    Walk(const Graph& host, std::vector<int> verts);

    const std::vector<int>& vertices() const { return verts_; }
    bool closed() const { return verts_.front() == verts_.back(); }
    std::size_t length() const { return verts_.size() - 1; } // edge count

    std::vector<Edge> edges() const;
    WalkFlags classify() const;

private:
    std::vector<int> verts_;
};

/// Partition of a subgraph's active vertices into connected components.
/// Components are ordered by their smallest member; isolated active
/// vertices form singleton components.
struct ComponentPartition {
    std::vector<int> componentOf;             // ambient id -> component id, -1 off verts
    std::vector<std::vector<int>> components; // each sorted ascending
};

/// Walk-connectivity inside the subgraph's edge set. Both endpoints must
/// be active vertices.
bool reachable(const Subgraph& s, int u, int v);

ComponentPartition connectedComponents(const Subgraph& s);

/// Components of odd cardinality, in partition order.
std::vector<std::vector<int>> oddComponents(const Subgraph& s);

} // namespace matchcert

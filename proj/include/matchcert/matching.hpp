#pragma once

#include <vector>

#include "matchcert/graph.hpp"
#include "matchcert/walks.hpp"

namespace matchcert {

/// Involutive partner map over a covered vertex set. Uncovered vertices
/// map to -1. The map alone does not know its host graph; the verify
/// functions check it against one.
class Matching {
public:
    Matching() = default;
    explicit Matching(int n) : partner_(static_cast<std::size_t>(n), -1) {}

    static Matching fromPairs(int n, const std::vector<std::pair<int, int>>& pairs);

    /// Interprets a graph as a matching. Throws PreconditionError if any
    /// vertex has degree > 1.
    static Matching fromEdgeGraph(const Graph& g);

    int size() const { return static_cast<int>(partner_.size()); }
    int partnerOf(int v) const;
    bool covers(int v) const { return partnerOf(v) >= 0; }

    std::vector<Edge> edges() const;
    std::vector<int> coveredVertices() const;

    /// Spanning graph on `size()` vertices with exactly the matched edges.
    Graph asGraph() const;

    bool operator==(const Matching&) const = default;

private:
    std::vector<int> partner_;
};

/// All Matching invariants against a host graph: involution, no fixed
/// point, every matched pair a host edge.
bool verifyMatching(const Graph& host, const Matching& m);

/// verifyMatching plus spanning: every vertex covered.
bool verifyPerfectMatching(const Graph& host, const Matching& m);

/// Every vertex has degree 0 or exactly 2 (a disjoint union of cycles).
bool isCyclesGraph(const Graph& g);

/// For every vertex v with distinct g-neighbors w, w': exactly one of
/// {v,w}, {v,w'} is an edge of m.
bool isAlternating(const Graph& g, const Graph& m);

/// Flips a perfect matching along an alternating union of cycles:
/// result edge set = edges(m) symmdiff edges(d). The output is verified;
/// failure raises InternalInvariantError.
Matching symmDiffAugment(const Graph& host, const Matching& m, const Graph& d);

/// The unique cycle of d containing e, as a closed walk starting e.u, e.v.
/// Requires isCyclesGraph(d) and e present in d.
Walk cycleThroughEdge(const Graph& d, Edge e);

/// Edge-set symmetric difference of two matchings, as a graph.
Graph matchingSymmDiff(const Matching& m1, const Matching& m2);

} // namespace matchcert

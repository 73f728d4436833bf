#pragma once

#include <optional>
#include <vector>

#include "matchcert/graph.hpp"
#include "matchcert/matching.hpp"

namespace matchcert {

/// The dichotomy witness: either an explicit perfect matching of the
/// graph, or a vertex set whose deletion leaves too many odd components.
struct Certificate {
    enum class Kind { PerfectMatching, TutteViolator };

    Kind kind = Kind::TutteViolator;
    Matching matching;         // meaningful when kind == PerfectMatching
    std::vector<int> violator; // meaningful when kind == TutteViolator

    static Certificate perfectMatching(Matching m);
    static Certificate tutteViolator(std::vector<int> u);
};

/// Four vertices driving the near-matching combination step:
/// x-a and a-b are edges, x-b and a-c are non-edges, all suitably distinct.
struct NearMatchingWitness {
    int x;
    int a;
    int b;
    int c;
};

/// Vertices adjacent to every other vertex.
std::vector<int> universalVerts(const Graph& g);

Subgraph deleteUniversalVerts(const Graph& g);

/// True iff |u| < number of odd components of g - u.
bool isTutteViolator(const Graph& g, const std::vector<int>& u);

/// The empty set, which is a violator exactly when the vertex count is odd.
std::optional<std::vector<int>> emptyViolatorIfOdd(const Graph& g);

/// Perfect matching for the case where every component left after removing
/// the universal vertices is a clique. Preconditions: even vertex count,
/// the universal vertex set is not a violator, all components cliques.
Matching cliqueComponentsMatching(const Graph& g);

/// Smallest witness (lexicographic in (x,a,b,c)) inside a non-clique
/// component of g minus its universal vertices; absent when every
/// component is a clique.
std::optional<NearMatchingWitness> findNonCliqueWitness(const Graph& g);

/// Which route combineNearMatchings took, for coverage reporting.
enum class CombineBranch {
    KeptFirst,         // m1 avoids {x,b}, returned as is
    KeptSecond,        // m2 avoids {a,c}, returned as is
    DisjointCycleFlip, // the cycle through {a,c} misses {x,b}
    SurgeryEndsAtX,    // segment from a closed back with the edge {x,a}
    SurgeryEndsAtB,    // segment from a closed back with the edge {a,b}
};

/// Combines perfect matchings of g+{x,b} and g+{a,c} into a perfect
/// matching of g itself, via an alternating cycle in their symmetric
/// difference. The output is verified against g.
Matching combineNearMatchings(const Graph& g, const NearMatchingWitness& w, const Matching& m1,
                              const Matching& m2, CombineBranch* branchOut = nullptr);

/// Decides the dichotomy for any graph, returning a verified certificate.
Certificate certify(const Graph& g);

/// Checks a certificate against a graph: the matching branch must be a
/// perfect matching of g, the violator branch a Tutte violator of g.
bool verifyCertificate(const Graph& g, const Certificate& c);

} // namespace matchcert

#include "matchcert/tutte.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>
#include <utility>

#include "matchcert/representatives.hpp"
#include "matchcert/walks.hpp"

namespace matchcert {

Certificate Certificate::perfectMatching(Matching m) {
    Certificate c;
    c.kind = Kind::PerfectMatching;
    c.matching = std::move(m);
    return c;
}

Certificate Certificate::tutteViolator(std::vector<int> u) {
    Certificate c;
    c.kind = Kind::TutteViolator;
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
    c.violator = std::move(u);
    return c;
}

std::vector<int> universalVerts(const Graph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.vertexCount(); ++v)
        if (g.degree(v) == g.vertexCount() - 1)
            out.push_back(v);
    return out;
}

Subgraph deleteUniversalVerts(const Graph& g) {
    return deleteVerts(g, universalVerts(g));
}

bool isTutteViolator(const Graph& g, const std::vector<int>& u) {
    std::vector<int> uset = u;
    std::sort(uset.begin(), uset.end());
    uset.erase(std::unique(uset.begin(), uset.end()), uset.end());
    return uset.size() < oddComponents(deleteVerts(g, uset)).size();
}

std::optional<std::vector<int>> emptyViolatorIfOdd(const Graph& g) {
    if (g.vertexCount() % 2 == 1)
        return std::vector<int>{};
    return std::nullopt;
}

Matching cliqueComponentsMatching(const Graph& g) {
    const int n = g.vertexCount();
    if (n % 2 != 0)
        throw PreconditionError("cliqueComponentsMatching: odd vertex count");
    std::vector<int> univ = universalVerts(g);
    if (isTutteViolator(g, univ))
        throw PreconditionError("cliqueComponentsMatching: universal vertex set is a violator");
    Subgraph h = deleteUniversalVerts(g);
    ComponentPartition p = connectedComponents(h);
    for (const auto& comp : p.components)
        if (!isClique(g, comp))
            throw PreconditionError("cliqueComponentsMatching: non-clique component");

    std::vector<int> oddIds;
    for (std::size_t cid = 0; cid < p.components.size(); ++cid)
        if (p.components[cid].size() % 2 == 1)
            oddIds.push_back(static_cast<int>(cid));
    std::vector<int> reps = chooseRepresentatives(oddIds, p);

    std::vector<std::pair<int, int>> pairs;
    // One representative per odd component, matched into the universal set.
    for (std::size_t i = 0; i < reps.size(); ++i)
        pairs.emplace_back(reps[i], univ[i]);
    // Inside each component the rest pairs off within the clique.
    std::vector<bool> isRep(static_cast<std::size_t>(n), false);
    for (int r : reps)
        isRep[static_cast<std::size_t>(r)] = true;
    for (const auto& comp : p.components) {
        std::vector<int> rest;
        for (int v : comp)
            if (!isRep[static_cast<std::size_t>(v)])
                rest.push_back(v);
        for (std::size_t i = 0; i + 1 < rest.size(); i += 2)
            pairs.emplace_back(rest[i], rest[i + 1]);
    }
    // Leftover universal vertices pair among themselves.
    for (std::size_t i = reps.size(); i + 1 < univ.size(); i += 2)
        pairs.emplace_back(univ[i], univ[i + 1]);

    Matching m = Matching::fromPairs(n, pairs);
    if (!verifyPerfectMatching(g, m))
        throw InternalInvariantError("cliqueComponentsMatching produced an invalid matching");
    return m;
}

std::optional<NearMatchingWitness> findNonCliqueWitness(const Graph& g) {
    Subgraph h = deleteUniversalVerts(g);
    // Adjacency between two non-universal vertices agrees with the ambient
    // graph, so all clause checks run against g directly.
    for (int x : h.verts()) {
        for (int a : g.neighbors(x)) {
            if (!h.containsVertex(a))
                continue;
            for (int b : g.neighbors(a)) {
                if (b == x || !h.containsVertex(b) || g.adjacent(x, b))
                    continue;
                for (int c = 0; c < g.vertexCount(); ++c) {
                    if (c == a || g.adjacent(a, c))
                        continue;
                    return NearMatchingWitness{x, a, b, c};
                }
            }
        }
    }
    return std::nullopt;
}

namespace {

// Traversal of the unique cycle of d through {from,to}, oriented from -> to.
std::vector<int> orientedCycle(const Graph& d, int from, int to) {
    std::vector<int> verts{from, to};
    int prev = from;
    int cur = to;
    while (cur != from) {
        const auto& nbrs = d.neighbors(cur);
        int next = (nbrs[0] == prev) ? nbrs[1] : nbrs[0];
        verts.push_back(next);
        prev = cur;
        cur = next;
    }
    return verts;
}

Graph pathAsGraph(int n, const std::vector<int>& verts, bool close) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i + 1 < verts.size(); ++i)
        edges.emplace_back(verts[i], verts[i + 1]);
    if (close)
        edges.emplace_back(verts.back(), verts.front());
    return Graph::fromEdges(n, edges);
}

Matching flipAndVerify(const Graph& g, const Matching& m, const Graph& cycle) {
    Matching out = Matching::fromEdgeGraph(symmDiff(m.asGraph(), cycle));
    if (!verifyPerfectMatching(g, out))
        throw InternalInvariantError("alternating-cycle flip produced an invalid matching");
    return out;
}

} // namespace

Matching combineNearMatchings(const Graph& g, const NearMatchingWitness& w, const Matching& m1,
                              const Matching& m2, CombineBranch* branchOut) {
    auto taken = [branchOut](CombineBranch b) {
        if (branchOut)
            *branchOut = b;
    };
    if (!g.adjacent(w.x, w.a) || !g.adjacent(w.a, w.b) || g.adjacent(w.x, w.b) ||
        g.adjacent(w.a, w.c) || w.x == w.b || w.x == w.c || w.a == w.c || w.b == w.c)
        throw PreconditionError("combineNearMatchings: invalid witness");
    if (!verifyPerfectMatching(g.withEdge(w.x, w.b), m1))
        throw PreconditionError("combineNearMatchings: m1 is not a perfect matching of g+{x,b}");
    if (!verifyPerfectMatching(g.withEdge(w.a, w.c), m2))
        throw PreconditionError("combineNearMatchings: m2 is not a perfect matching of g+{a,c}");

    // If either matching avoids its extra edge it already works for g.
    if (m1.partnerOf(w.x) != w.b) {
        taken(CombineBranch::KeptFirst);
        return m1;
    }
    if (m2.partnerOf(w.a) != w.c) {
        taken(CombineBranch::KeptSecond);
        return m2;
    }

    Graph d = matchingSymmDiff(m1, m2);
    if (!isCyclesGraph(d))
        throw InternalInvariantError("matching symmetric difference is not a union of cycles");

    // The cycle through {a,c}, walked from a towards c.
    std::vector<int> cycle = orientedCycle(d, w.a, w.c);
    Edge extra1(w.x, w.b);
    bool onCycle = false;
    for (std::size_t i = 0; i + 1 < cycle.size(); ++i)
        if (Edge(cycle[i], cycle[i + 1]) == extra1)
            onCycle = true;

    if (!onCycle) {
        // The whole cycle lies in g; flip m2 along it to drop {a,c}.
        taken(CombineBranch::DisjointCycleFlip);
        std::vector<int> open(cycle.begin(), cycle.end() - 1);
        return flipAndVerify(g, m2, pathAsGraph(g.vertexCount(), open, true));
    }

    // Walk from a through c until the first hit of x or b, then close the
    // cycle back to a with the matching witness edge {x,a} or {a,b}.
    std::size_t stop = 1;
    while (cycle[stop] != w.x && cycle[stop] != w.b) {
        ++stop;
        if (stop + 1 >= cycle.size())
            throw InternalInvariantError("cycle through {a,c} misses both x and b");
    }
    taken(cycle[stop] == w.x ? CombineBranch::SurgeryEndsAtX : CombineBranch::SurgeryEndsAtB);
    std::vector<int> segment(cycle.begin(), cycle.begin() + static_cast<std::ptrdiff_t>(stop) + 1);
    return flipAndVerify(g, m2, pathAsGraph(g.vertexCount(), segment, true));
}

namespace {

// Canonical byte key of the edge set, for the certify memo table.
std::string edgeSetKey(const Graph& g) {
    const int n = g.vertexCount();
    std::string key(static_cast<std::size_t>(n * (n - 1) / 2 + 7) / 8, '\0');
    for (const Edge& e : g.edges()) {
        int idx = e.v * (e.v - 1) / 2 + e.u;
        key[static_cast<std::size_t>(idx / 8)] |= static_cast<char>(1 << (idx % 8));
    }
    return key;
}

Certificate certifyImpl(const Graph& g, std::unordered_map<std::string, Certificate>& memo) {
    std::string key = edgeSetKey(g);
    if (auto it = memo.find(key); it != memo.end())
        return it->second;

    Certificate result;
    if (auto empty = emptyViolatorIfOdd(g)) {
        result = Certificate::tutteViolator(*empty);
    } else {
        std::vector<int> univ = universalVerts(g);
        if (isTutteViolator(g, univ)) {
            result = Certificate::tutteViolator(univ);
        } else if (auto w = findNonCliqueWitness(g)) {
            // Violators of either one-edge extension remain violators of g:
            // adding an edge never increases the odd-component count.
            Certificate r1 = certifyImpl(g.withEdge(w->x, w->b), memo);
            if (r1.kind == Certificate::Kind::TutteViolator) {
                result = r1;
            } else {
                Certificate r2 = certifyImpl(g.withEdge(w->a, w->c), memo);
                if (r2.kind == Certificate::Kind::TutteViolator)
                    result = r2;
                else
                    result = Certificate::perfectMatching(
                        combineNearMatchings(g, *w, r1.matching, r2.matching));
            }
        } else {
            result = Certificate::perfectMatching(cliqueComponentsMatching(g));
        }
    }
    memo.emplace(std::move(key), result);
    return result;
}

} // namespace

Certificate certify(const Graph& g) {
    std::unordered_map<std::string, Certificate> memo;
    Certificate c = certifyImpl(g, memo);
    if (!verifyCertificate(g, c))
        throw InternalInvariantError("certify produced a certificate that fails verification");
    return c;
}

bool verifyCertificate(const Graph& g, const Certificate& c) {
    if (c.kind == Certificate::Kind::PerfectMatching)
        return verifyPerfectMatching(g, c.matching);
    for (int v : c.violator)
        if (v < 0 || v >= g.vertexCount())
            return false;
    return isTutteViolator(g, c.violator);
}

} // namespace matchcert

#include "matchcert/oracle.hpp"

#include <algorithm>
#include <cstdlib>

#include "matchcert/tutte.hpp"

namespace matchcert {
namespace oracle {

namespace {

int limitFromEnv(int fallback) {
    if (const char* s = std::getenv("MATCHCERT_MAX_N")) {
        int v = std::atoi(s);
        if (v > 0)
            return v;
    }
    return fallback;
}

void checkLimit(const Graph& g, int limit, const char* what) {
    if (g.vertexCount() > limit)
        throw LimitExceededError(std::string(what) + ": vertex count " +
                                 std::to_string(g.vertexCount()) + " exceeds limit " +
                                 std::to_string(limit));
}

// Backtracks over partners of the lowest uncovered vertex. Returns the
// number of completions found, stopping early once `cap` is reached.
std::uint64_t searchMatchings(const Graph& g, std::vector<int>& partner, std::uint64_t cap) {
    int v = 0;
    const int n = g.vertexCount();
    while (v < n && partner[static_cast<std::size_t>(v)] >= 0)
        ++v;
    if (v == n)
        return 1;
    std::uint64_t found = 0;
    for (int w : g.neighbors(v)) {
        if (partner[static_cast<std::size_t>(w)] >= 0)
            continue;
        partner[static_cast<std::size_t>(v)] = w;
        partner[static_cast<std::size_t>(w)] = v;
        found += searchMatchings(g, partner, cap - found);
        partner[static_cast<std::size_t>(v)] = -1;
        partner[static_cast<std::size_t>(w)] = -1;
        if (found >= cap)
            return found;
    }
    return found;
}

} // namespace

int matchingLimit() {
    return limitFromEnv(16);
}

int violatorLimit() {
    return limitFromEnv(12);
}

std::optional<Matching> bruteForcePerfectMatching(const Graph& g) {
    checkLimit(g, matchingLimit(), "bruteForcePerfectMatching");
    std::vector<int> partner(static_cast<std::size_t>(g.vertexCount()), -1);
    int v = 0;
    const int n = g.vertexCount();
    // Re-run the search but keep the partner assignment of the first hit.
    struct Finder {
        const Graph& g;
        std::vector<int>& partner;

        bool run(int from) {
            int v = from;
            while (v < g.vertexCount() && partner[static_cast<std::size_t>(v)] >= 0)
                ++v;
            if (v == g.vertexCount())
                return true;
            for (int w : g.neighbors(v)) {
                if (partner[static_cast<std::size_t>(w)] >= 0)
                    continue;
                partner[static_cast<std::size_t>(v)] = w;
                partner[static_cast<std::size_t>(w)] = v;
                if (run(v + 1))
                    return true;
                partner[static_cast<std::size_t>(v)] = -1;
                partner[static_cast<std::size_t>(w)] = -1;
            }
            return false;
        }
    };
    if (!Finder{g, partner}.run(v))
        return std::nullopt;
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        if (partner[static_cast<std::size_t>(u)] > u)
            pairs.emplace_back(u, partner[static_cast<std::size_t>(u)]);
    Matching m = Matching::fromPairs(n, pairs);
    if (!verifyPerfectMatching(g, m))
        throw InternalInvariantError("brute-force search produced an invalid matching");
    return m;
}

std::uint64_t countPerfectMatchings(const Graph& g) {
    checkLimit(g, matchingLimit(), "countPerfectMatchings");
    std::vector<int> partner(static_cast<std::size_t>(g.vertexCount()), -1);
    return searchMatchings(g, partner, UINT64_MAX);
}

std::optional<std::vector<int>> bruteForceViolator(const Graph& g) {
    checkLimit(g, violatorLimit(), "bruteForceViolator");
    const int n = g.vertexCount();
    std::vector<std::vector<int>> subsets;
    subsets.reserve(std::size_t{1} << n);
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        std::vector<int> u;
        for (int v = 0; v < n; ++v)
            if (mask & (std::uint32_t{1} << v))
                u.push_back(v);
        subsets.push_back(std::move(u));
    }
    // Smallest candidate first: by cardinality, then lexicographic.
    std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    });
    for (const auto& u : subsets)
        if (isTutteViolator(g, u))
            return u;
    return std::nullopt;
}

bool tutteEquivalenceHolds(const Graph& g) {
    bool hasMatching = bruteForcePerfectMatching(g).has_value();
    bool hasViolator = bruteForceViolator(g).has_value();
    return hasMatching != hasViolator;
}

} // namespace oracle
} // namespace matchcert

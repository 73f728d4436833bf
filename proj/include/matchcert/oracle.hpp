#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "matchcert/graph.hpp"
#include "matchcert/matching.hpp"

namespace matchcert {
namespace oracle {

// Size limits for the exhaustive searches. MATCHCERT_MAX_N overrides both.
int matchingLimit();
int violatorLimit();

/// Exhaustive backtracking over the lowest uncovered vertex. Returns a
/// verified perfect matching if one exists.
std::optional<Matching> bruteForcePerfectMatching(const Graph& g);

/// Exact perfect-matching count by the same backtracking.
std::uint64_t countPerfectMatchings(const Graph& g);

/// Sweeps all vertex subsets, smallest cardinality first (then
/// lexicographic), returning the first Tutte violator found.
std::optional<std::vector<int>> bruteForceViolator(const Graph& g);

/// Rechecks the dichotomy on one graph: exactly one of the two witnesses
/// must exist.
bool tutteEquivalenceHolds(const Graph& g);

} // namespace oracle
} // namespace matchcert

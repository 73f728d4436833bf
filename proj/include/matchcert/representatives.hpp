#pragma once

#include <vector>

#include "matchcert/walks.hpp"

namespace matchcert {

/// True iff the component map restricted to reps is a bijection onto the
/// component ids in targets: each target component holds exactly one rep
/// and no rep lies outside the targets.
bool represents(const std::vector<int>& reps, const std::vector<int>& targets,
                const ComponentPartition& p);

/// Smallest vertex of each target component. The result always satisfies
/// represents(result, targets, p).
std::vector<int> chooseRepresentatives(const std::vector<int>& targets,
                                       const ComponentPartition& p);

} // namespace matchcert

#include "matchcert/representatives.hpp"

#include <algorithm>

namespace matchcert {

bool represents(const std::vector<int>& reps, const std::vector<int>& targets,
                const ComponentPartition& p) {
    std::vector<int> repSet = reps;
    std::sort(repSet.begin(), repSet.end());
    repSet.erase(std::unique(repSet.begin(), repSet.end()), repSet.end());
    std::vector<int> hits(p.components.size(), 0);
    for (int v : repSet) {
        if (v < 0 || v >= static_cast<int>(p.componentOf.size()))
            return false;
        int cid = p.componentOf[static_cast<std::size_t>(v)];
        if (cid < 0)
            return false;
        ++hits[static_cast<std::size_t>(cid)];
    }
    std::vector<bool> wanted(p.components.size(), false);
    for (int cid : targets) {
        if (cid < 0 || cid >= static_cast<int>(p.components.size()))
            return false;
        wanted[static_cast<std::size_t>(cid)] = true;
    }
    for (std::size_t cid = 0; cid < p.components.size(); ++cid)
        if (hits[cid] != (wanted[cid] ? 1 : 0))
            return false;
    return true;
}

std::vector<int> chooseRepresentatives(const std::vector<int>& targets,
                                       const ComponentPartition& p) {
    std::vector<int> reps;
    reps.reserve(targets.size());
    for (int cid : targets) {
        if (cid < 0 || cid >= static_cast<int>(p.components.size()))
            throw VertexOutOfRangeError("component id " + std::to_string(cid) + " out of range");
        // members are sorted ascending
        reps.push_back(p.components[static_cast<std::size_t>(cid)].front());
    }
    std::sort(reps.begin(), reps.end());
    return reps;
}

} // namespace matchcert

#pragma once

#include <cstdint>
#include <vector>

#include "flowcent/flow.hpp"
#include "flowcent/path.hpp"

namespace flowcent {

// f = sum of chi over `paths` plus sum of chi over `cycles`.
struct Decomposition {
    ArcDisjointSequence paths;
    std::vector<Cycle> cycles;
};

// Extracts v(f) source-sink paths, then cycles from what remains. Each path is
// found by depth-first search that always tries the least positive-flow out-arc
// first; cycles start from the least vertex still carrying flow.
// Throws InvalidFlow if `flow` does not validate against `network`.
Decomposition decompose(const Network& network, const Flow& flow);

// Same extraction with out-arcs tried in a seeded random order.
Decomposition decompose_shuffled(const Network& network, const Flow& flow, std::uint64_t seed);

Flow recompose(const Decomposition& d);

}  // namespace flowcent

#pragma once

#include <map>
#include <optional>

#include "flowcent/flow.hpp"
#include "flowcent/network.hpp"
#include "flowcent/path.hpp"

namespace flowcent {

// Lexicographically least shortest augmenting path in the residual network,
// or nullopt iff `flow` is maximum. When both a forward and a backward arc
// lead to the same next vertex, the forward arc is taken.
std::optional<GeneralizedPath> find_augmenting_path(const Network& network, const Flow& flow);

// f + chi(path). Throws NotAugmenting unless every forward arc has residual
// capacity and every backward arc carries flow.
Flow augment(const Network& network, const Flow& flow, const GeneralizedPath& path);

struct MaxFlowResult {
    Capacity value = 0;
    Flow flow;
};

// Shortest-augmenting-path max flow, augmenting by the bottleneck along the
// same paths find_augmenting_path would return.
MaxFlowResult max_flow(const Network& network, Vertex source, Vertex sink);
Capacity max_flow_value(const Network& network, Vertex source, Vertex sink);

using ArcCost = std::map<Arc, std::int64_t>;

struct MinCostFlowResult {
    Capacity value = 0;
    std::int64_t cost = 0;
    Flow flow;
};

// Maximum flow of least total cost; costs must be nonnegative, absent arcs cost 0.
MinCostFlowResult min_cost_max_flow(const Network& network, Vertex source, Vertex sink,
                                    const ArcCost& cost);

}  // namespace flowcent

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "flowcent/flow.hpp"
#include "flowcent/network.hpp"

namespace flowcent::oracle {

inline constexpr std::uint64_t kDefaultFlowBudget = 100'000'000;
inline constexpr const char* kGeneratorName = "std::mt19937_64";

struct InstanceSpec {
    std::uint32_t vertex_count = 4;        // 2..6
    Capacity max_capacity = 2;             // 0..3
    std::uint32_t arc_probability_num = 1;  // probability = num / den, within [0, 1]
    std::uint32_t arc_probability_den = 2;
    std::uint64_t seed = 0;
};

// Vertices are named v0 .. v{n-1}. Each ordered pair independently gets a
// uniform capacity in [1, max_capacity] with the given probability, else 0.
Network generate(const InstanceSpec& spec);

struct BruteForceFlows {
    Capacity max_value = 0;
    std::vector<Flow> maximum_flows;
};

// Enumerates every integral assignment 0..c(a) per arc and keeps the
// conservative ones of largest value. Requires prod (c(a)+1) <= budget.
BruteForceFlows brute_force_flows(const Network& network, Vertex source, Vertex sink,
                                  std::uint64_t budget = kDefaultFlowBudget);

// min f(X) over the enumerated maximum flows.
Capacity brute_force_delta(const Network& network, Vertex source, Vertex sink, const VertexSet& set,
                           std::uint64_t budget = kDefaultFlowBudget);

// prod (c(a)+1) over positive arcs, saturating at UINT64_MAX.
std::uint64_t assignment_space(const Network& network);

// Valid flow built from a random number of random augmenting steps from the
// null flow, followed by a few unit pushes around random residual cycles.
Flow random_flow(const Network& network, Vertex source, Vertex sink, std::uint64_t seed);

struct CrossCheckCase {
    std::string label;
    Network network;
    // Checked for every pair in addition to the singletons.
    std::vector<VertexSet> sets;
};

struct CrossCheckOptions {
    bool singletons = true;
    std::size_t random_sets_per_pair = 0;
    std::uint64_t seed = 0;
    std::uint64_t flow_budget = kDefaultFlowBudget;
    std::uint64_t enumeration_budget = 1'000'000;
};

struct CrossCheckReport {
    std::size_t cases = 0;
    std::size_t cases_in_budget = 0;
    std::size_t checks = 0;
    std::size_t strict_phi_lambda_gaps = 0;
    std::size_t strict_lambda_delta_gaps = 0;
    std::vector<std::string> violations;

    bool ok() const noexcept { return violations.empty(); }
    std::string text() const;
};

// `count` random instances with 2..max_vertices vertices and capacities <= max_capacity.
std::vector<CrossCheckCase> random_batch(std::size_t count, std::uint32_t max_vertices, Capacity max_capacity,
                                         std::uint64_t seed);

// For every case and ordered pair: solver max flow vs. oracle, delta vs. oracle,
// exact lambda inside [phi_X, min(delta_X, phi)], lambda = phi_X = delta for
// singletons, and the decomposition round trip. Cases outside the flow budget
// skip the oracle comparisons but still run the rest.
CrossCheckReport cross_check(std::span<const CrossCheckCase> batch, const CrossCheckOptions& options = {});

}  // namespace flowcent::oracle

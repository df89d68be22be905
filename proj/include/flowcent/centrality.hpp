#pragma once

#include <optional>
#include <span>
#include <vector>

#include "flowcent/network.hpp"
#include "flowcent/quantities.hpp"
#include "flowcent/rational.hpp"

namespace flowcent {

// One (y, z) summand: phi_X / phi and lambda_X / phi.
struct PairTerm {
    Vertex source;
    Vertex sink;
    Capacity phi_total = 0;
    Capacity phi_set = 0;
    std::optional<Capacity> lambda_set;
};

struct CentralityOptions {
    LambdaMode mode = LambdaMode::Auto;
    std::uint64_t budget = kDefaultEnumerationBudget;
    unsigned jobs = 1;
    bool explain = false;
    bool betweenness = true;
};

struct CentralityReport {
    VertexSet set;
    Rational vitality;
    std::optional<Rational> betweenness;
    std::vector<PairTerm> terms;  // filled when explain is on
};

// Sum over ordered pairs with phi_yz > 0 of phi_yz(X) / phi_yz.
Rational full_flow_vitality(const Network& network, const VertexSet& set, unsigned jobs = 1);

// Sum over ordered pairs with phi_yz > 0 of lambda_yz(X) / phi_yz.
Rational full_flow_betweenness(const Network& network, const VertexSet& set,
                               LambdaMode mode = LambdaMode::Auto,
                               std::uint64_t budget = kDefaultEnumerationBudget, unsigned jobs = 1);

// One report per set, in input order. Pair max-flow values are shared across
// sets. Throws InvariantViolation if vitality exceeds betweenness.
std::vector<CentralityReport> centrality_report(const Network& network, std::span<const VertexSet> sets,
                                                const CentralityOptions& options = {});

}  // namespace flowcent

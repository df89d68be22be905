#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "flowcent/network.hpp"
#include "flowcent/path.hpp"

namespace flowcent {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 1'000'000;

// All simple source-sink paths with positive capacity on every arc, in
// lexicographic order. Throws BudgetExceeded past `budget` search nodes.
std::vector<Path> simple_paths(const Network& network, Vertex source, Vertex sink,
                               std::uint64_t budget = kDefaultEnumerationBudget);

// Calls `visit` once per equivalence class of maximum arc-disjoint sequences,
// passing the canonical representative, in lexicographic order. Stops early
// when `visit` returns false. Returns the number of classes visited.
std::uint64_t for_each_max_sequence(const Network& network, Vertex source, Vertex sink,
                                    const std::function<bool(const ArcDisjointSequence&)>& visit,
                                    std::uint64_t budget = kDefaultEnumerationBudget);

std::vector<ArcDisjointSequence> enumerate_max_sequences(const Network& network, Vertex source,
                                                         Vertex sink,
                                                         std::uint64_t budget = kDefaultEnumerationBudget);

// phi_yz(X): drop in max-flow value after zeroing every arc incident to X.
Capacity phi_pair(const Network& network, Vertex source, Vertex sink, const VertexSet& set);

enum class LambdaMode {
    Auto,               // shortcut for |X| <= 1, exact otherwise
    Exact,              // always enumerate
    SingletonShortcut,  // |X| <= 1 only: lambda equals phi_pair
};

struct LambdaResult {
    Capacity value = 0;
    bool exact = false;
    // Lexicographically least canonical maximum sequence attaining the minimum (exact mode).
    std::optional<ArcDisjointSequence> witness;
};

// lambda_yz(X): minimum number of components meeting X over all maximum
// arc-disjoint sequences.
LambdaResult lambda_pair(const Network& network, Vertex source, Vertex sink, const VertexSet& set,
                         LambdaMode mode = LambdaMode::Auto,
                         std::uint64_t budget = kDefaultEnumerationBudget);

// delta_yz(X): minimum of f(X) over all maximum flows, via min-cost max-flow
// with unit cost on arcs leaving the non-terminal members of X.
Capacity delta_pair(const Network& network, Vertex source, Vertex sink, const VertexSet& set);

struct PairQuantities {
    Vertex source;
    Vertex sink;
    VertexSet set;
    Capacity phi_total = 0;
    Capacity phi_restricted = 0;
    Capacity phi_set = 0;
    std::optional<Capacity> lambda_set;
    std::optional<Capacity> delta_set;
    bool lambda_exact = false;
    std::optional<ArcDisjointSequence> witness;
};

struct PairOptions {
    LambdaMode mode = LambdaMode::Auto;
    std::uint64_t budget = kDefaultEnumerationBudget;
};

// All three quantities for one (y, z, X). Throws InvariantViolation if
// 0 <= phi_X <= lambda_X <= min(delta_X, phi) fails.
PairQuantities pair_report(const Network& network, Vertex source, Vertex sink, const VertexSet& set,
                           const PairOptions& options = {});

}  // namespace flowcent

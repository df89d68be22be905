#pragma once

// Index-level residual machinery shared by the solvers, the decomposition and
// the sequence enumerator. Not installed.

#include <limits>
#include <span>
#include <vector>

#include "flowcent/network.hpp"

namespace flowcent::detail {

inline constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

// One residual step from the current vertex: along arc `arc` forward (tail to
// head) or backward (head to tail).
struct Move {
    std::size_t arc;
    Vertex to;
    bool forward;
};

// Per-arc capacity and flow over the network's positive arcs.
class Residual {
public:
    Residual(const Network& network, std::vector<Capacity> capacity)
        : network_(&network), capacity_(std::move(capacity)), flow_(capacity_.size(), 0) {}

    explicit Residual(const Network& network)
        : Residual(network, {network.arc_capacities().begin(), network.arc_capacities().end()}) {}

    const Network& network() const { return *network_; }
    std::span<const Capacity> flow() const { return flow_; }
    std::span<Capacity> flow() { return flow_; }
    std::span<const Capacity> capacity() const { return capacity_; }

    Capacity headroom(const Move& m) const {
        return m.forward ? capacity_[m.arc] - flow_[m.arc] : flow_[m.arc];
    }
    void push(const Move& m, Capacity amount) { flow_[m.arc] += m.forward ? amount : -amount; }

    // Distance (in residual steps) from every vertex to `sink`.
    std::vector<std::size_t> distances_to(Vertex sink) const;

    // Lexicographically least shortest residual path source -> sink; empty if none.
    std::vector<Move> shortest_path(Vertex source, Vertex sink) const;

    // Runs shortest-augmenting-path to completion and returns the value added.
    Capacity saturate(Vertex source, Vertex sink);

private:
    const Network* network_;
    std::vector<Capacity> capacity_;
    std::vector<Capacity> flow_;
};

// Maximum flow value under replacement capacities `capacity` (indexed like network.arcs()).
Capacity max_flow_value_with(const Network& network, std::vector<Capacity> capacity, Vertex source,
                             Vertex sink);

}  // namespace flowcent::detail

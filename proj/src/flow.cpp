#include "flowcent/flow.hpp"

#include <vector>

namespace flowcent {

Flow::Flow(Vertex source, Vertex sink) : source_(source), sink_(sink) {
    if (source == sink) throw Error(ErrorKind::SameEndpoints, "flow source equals sink");
}

Flow::Flow(Vertex source, Vertex sink, const std::map<Arc, Capacity>& assignment) : Flow(source, sink) {
    for (const auto& [arc, value] : assignment) {
        if (arc.tail == arc.head) throw Error(ErrorKind::SelfLoop, "flow assigned to a self-loop");
        if (value < 0) throw Error(ErrorKind::InvalidFlow, "negative flow on an arc");
        if (value > 0) assignment_.emplace(arc, value);
    }
}

Capacity Flow::at(Arc a) const {
    auto it = assignment_.find(a);
    return it == assignment_.end() ? 0 : it->second;
}

Flow Flow::plus(const ArcFunction& delta) const {
    Flow out = *this;
    for (const auto& [arc, d] : delta) {
        if (d == 0) continue;
        Capacity next = out.at(arc) + d;
        if (next < 0) throw Error(ErrorKind::InvalidFlow, "arc flow would become negative");
        if (next == 0) {
            out.assignment_.erase(arc);
        } else {
            out.assignment_[arc] = next;
        }
    }
    return out;
}

Capacity Flow::outflow(Vertex v) const {
    Capacity total = 0;
    for (auto it = assignment_.lower_bound(Arc{v, Vertex{0}});
         it != assignment_.end() && it->first.tail == v; ++it) {
        total += it->second;
    }
    return total;
}

Capacity Flow::inflow(Vertex v) const {
    Capacity total = 0;
    for (const auto& [arc, value] : assignment_) {
        if (arc.head == v) total += value;
    }
    return total;
}

std::optional<FlowViolation> validate_flow(const Network& network, const Flow& flow) {
    network.require(flow.source());
    network.require(flow.sink());
    const auto n = network.vertex_count();
    std::vector<Capacity> balance(n, 0);
    for (const auto& [arc, value] : flow.assignment()) {
        if (arc.tail.index >= n || arc.head.index >= n) {
            return FlowViolation{FlowViolation::Kind::Compatibility, arc, std::nullopt,
                                 "flow on an arc outside the network"};
        }
        Capacity cap = network.capacity(arc);
        if (value > cap) {
            return FlowViolation{FlowViolation::Kind::Compatibility, arc, std::nullopt,
                                 "compatibility violated at " + network.arc_name(arc) + ": flow " +
                                     std::to_string(value) + " > capacity " + std::to_string(cap)};
        }
        balance[arc.tail.index] -= value;
        balance[arc.head.index] += value;
    }
    for (std::uint32_t i = 0; i < n; ++i) {
        Vertex v{i};
        if (v == flow.source() || v == flow.sink()) continue;
        if (balance[i] != 0) {
            return FlowViolation{FlowViolation::Kind::Conservation, std::nullopt, v,
                                 "conservation violated at " + network.name(v) + ": inflow minus outflow = " +
                                     std::to_string(balance[i])};
        }
    }
    return std::nullopt;
}

Capacity flow_value(const Flow& flow) {
    return flow.outflow(flow.source()) - flow.inflow(flow.source());
}

Capacity flow_through(const Network& network, const Flow& flow, const VertexSet& set) {
    network.require(set);
    Capacity total = 0;
    Capacity value = -1;
    for (Vertex x : set) {
        if (x == flow.source() || x == flow.sink()) {
            if (value < 0) value = flow_value(flow);
            total += value;
        } else {
            total += flow.outflow(x);
        }
    }
    return total;
}

}  // namespace flowcent

#pragma once

#include <map>
#include <optional>
#include <string>

#include "flowcent/network.hpp"

namespace flowcent {

// Signed arc coefficients; absent arcs are 0.
using ArcFunction = std::map<Arc, std::int64_t>;

// Integral arc assignment from `source` to `sink`. Zero entries are never
// stored, so two flows are equal iff their maps are equal.
class Flow {
public:
    Flow(Vertex source, Vertex sink);
    Flow(Vertex source, Vertex sink, const std::map<Arc, Capacity>& assignment);

    Vertex source() const noexcept { return source_; }
    Vertex sink() const noexcept { return sink_; }
    Capacity at(Arc a) const;
    const std::map<Arc, Capacity>& assignment() const noexcept { return assignment_; }

    // Pointwise sum; throws InvalidFlow if any arc would go negative.
    Flow plus(const ArcFunction& delta) const;

    Capacity outflow(Vertex v) const;
    Capacity inflow(Vertex v) const;

    friend bool operator==(const Flow&, const Flow&) = default;

private:
    Vertex source_;
    Vertex sink_;
    std::map<Arc, Capacity> assignment_;
};

struct FlowViolation {
    enum class Kind { Compatibility, Conservation };
    Kind kind;
    std::optional<Arc> arc;
    std::optional<Vertex> vertex;
    std::string message;
};

// Empty result means the flow satisfies compatibility and conservation.
// Otherwise reports the first offending arc (canonical order), then vertex.
std::optional<FlowViolation> validate_flow(const Network& network, const Flow& flow);

// v(f): net outflow at the source.
Capacity flow_value(const Flow& flow);

// f(X): outflow summed over X, with terminals contributing v(f) each.
Capacity flow_through(const Network& network, const Flow& flow, const VertexSet& set);

}  // namespace flowcent

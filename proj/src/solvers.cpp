#include "flowcent/solvers.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "residual.hpp"

namespace flowcent {

namespace detail {

std::vector<std::size_t> Residual::distances_to(Vertex sink) const {
    const Network& net = *network_;
    std::vector<std::size_t> dist(net.vertex_count(), kUnreached);
    std::deque<Vertex> queue{sink};
    dist[sink.index] = 0;
    while (!queue.empty()) {
        Vertex w = queue.front();
        queue.pop_front();
        // u -> w forward along arc (u, w)
        for (std::size_t idx : net.in_arcs(w)) {
            Vertex u = net.arcs()[idx].tail;
            if (flow_[idx] < capacity_[idx] && dist[u.index] == kUnreached) {
                dist[u.index] = dist[w.index] + 1;
                queue.push_back(u);
            }
        }
        // u -> w backward along arc (w, u)
        for (std::size_t idx : net.out_arcs(w)) {
            Vertex u = net.arcs()[idx].head;
            if (flow_[idx] > 0 && dist[u.index] == kUnreached) {
                dist[u.index] = dist[w.index] + 1;
                queue.push_back(u);
            }
        }
    }
    return dist;
}

std::vector<Move> Residual::shortest_path(Vertex source, Vertex sink) const {
    const Network& net = *network_;
    const auto dist = distances_to(sink);
    std::vector<Move> path;
    if (dist[source.index] == kUnreached) return path;
    Vertex u = source;
    while (u != sink) {
        const std::size_t want = dist[u.index] - 1;
        std::optional<Move> best;
        auto consider = [&](const Move& m) {
            if (dist[m.to.index] != want || headroom(m) <= 0) return;
            if (!best || m.to < best->to || (m.to == best->to && m.forward && !best->forward)) best = m;
        };
        for (std::size_t idx : net.out_arcs(u)) consider(Move{idx, net.arcs()[idx].head, true});
        for (std::size_t idx : net.in_arcs(u)) consider(Move{idx, net.arcs()[idx].tail, false});
        path.push_back(*best);
        u = best->to;
    }
    return path;
}

Capacity Residual::saturate(Vertex source, Vertex sink) {
    Capacity added = 0;
    while (true) {
        auto path = shortest_path(source, sink);
        if (path.empty()) return added;
        Capacity bottleneck = std::numeric_limits<Capacity>::max();
        for (const Move& m : path) bottleneck = std::min(bottleneck, headroom(m));
        for (const Move& m : path) push(m, bottleneck);
        added += bottleneck;
    }
}

Capacity max_flow_value_with(const Network& network, std::vector<Capacity> capacity, Vertex source,
                             Vertex sink) {
    Residual r(network, std::move(capacity));
    return r.saturate(source, sink);
}

}  // namespace detail

namespace {

void check_endpoints(const Network& network, Vertex source, Vertex sink) {
    network.require(source);
    network.require(sink);
    if (source == sink) {
        throw Error(ErrorKind::SameEndpoints, "source and sink are both '" + network.name(source) + "'");
    }
}

detail::Residual residual_of(const Network& network, const Flow& flow) {
    if (auto violation = validate_flow(network, flow)) throw Error(ErrorKind::InvalidFlow, violation->message);
    detail::Residual r(network);
    for (const auto& [arc, value] : flow.assignment()) r.flow()[*network.arc_index(arc)] = value;
    return r;
}

Flow flow_of(const detail::Residual& r, Vertex source, Vertex sink) {
    std::map<Arc, Capacity> assignment;
    const auto arcs = r.network().arcs();
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        if (r.flow()[i] > 0) assignment.emplace(arcs[i], r.flow()[i]);
    }
    return Flow(source, sink, assignment);
}

}  // namespace

std::optional<GeneralizedPath> find_augmenting_path(const Network& network, const Flow& flow) {
    check_endpoints(network, flow.source(), flow.sink());
    auto r = residual_of(network, flow);
    auto moves = r.shortest_path(flow.source(), flow.sink());
    if (moves.empty()) return std::nullopt;
    std::vector<Vertex> vertices{flow.source()};
    std::vector<Direction> directions;
    for (const auto& m : moves) {
        vertices.push_back(m.to);
        directions.push_back(m.forward ? Direction::Forward : Direction::Backward);
    }
    return GeneralizedPath(std::move(vertices), std::move(directions));
}

Flow augment(const Network& network, const Flow& flow, const GeneralizedPath& path) {
    if (path.source() != flow.source() || path.sink() != flow.sink()) {
        throw Error(ErrorKind::NotAugmenting, "path endpoints differ from the flow's source and sink");
    }
    for (std::size_t i = 0; i < path.directions().size(); ++i) {
        Arc a = path.arc(i);
        bool ok = path.directions()[i] == Direction::Forward ? network.capacity(a) - flow.at(a) >= 1
                                                             : flow.at(a) >= 1;
        if (!ok) {
            throw Error(ErrorKind::NotAugmenting, "no residual room on " + network.arc_name(a) +
                                                      (path.directions()[i] == Direction::Forward
                                                           ? " (forward)"
                                                           : " (backward)"));
        }
    }
    return flow.plus(chi(path));
}

MaxFlowResult max_flow(const Network& network, Vertex source, Vertex sink) {
    check_endpoints(network, source, sink);
    detail::Residual r(network);
    Capacity value = r.saturate(source, sink);
    return MaxFlowResult{value, flow_of(r, source, sink)};
}

Capacity max_flow_value(const Network& network, Vertex source, Vertex sink) {
    check_endpoints(network, source, sink);
    detail::Residual r(network);
    return r.saturate(source, sink);
}

MinCostFlowResult min_cost_max_flow(const Network& network, Vertex source, Vertex sink,
                                    const ArcCost& cost) {
    check_endpoints(network, source, sink);
    const auto arcs = network.arcs();
    std::vector<std::int64_t> arc_cost(arcs.size(), 0);
    for (const auto& [arc, c] : cost) {
        if (c < 0) throw Error(ErrorKind::InvalidSpec, "negative cost on " + network.arc_name(arc));
        if (auto idx = network.arc_index(arc)) arc_cost[*idx] = c;
    }

    detail::Residual r(network);
    const std::size_t n = network.vertex_count();
    constexpr std::int64_t inf = std::numeric_limits<std::int64_t>::max();
    Capacity value = 0;
    std::int64_t total_cost = 0;

    while (true) {
        // Label-correcting shortest paths; residual costs may be negative.
        std::vector<std::int64_t> dist(n, inf);
        std::vector<std::optional<detail::Move>> parent(n);
        std::vector<bool> queued(n, false);
        std::deque<Vertex> queue{source};
        dist[source.index] = 0;
        queued[source.index] = true;
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop_front();
            queued[u.index] = false;
            auto relax = [&](const detail::Move& m, std::int64_t step) {
                if (r.headroom(m) <= 0) return;
                std::int64_t nd = dist[u.index] + step;
                if (nd < dist[m.to.index]) {
                    dist[m.to.index] = nd;
                    parent[m.to.index] = m;
                    if (!queued[m.to.index]) {
                        queued[m.to.index] = true;
                        queue.push_back(m.to);
                    }
                }
            };
            for (std::size_t idx : network.out_arcs(u)) relax({idx, arcs[idx].head, true}, arc_cost[idx]);
            for (std::size_t idx : network.in_arcs(u)) relax({idx, arcs[idx].tail, false}, -arc_cost[idx]);
        }
        if (dist[sink.index] == inf) break;

        std::vector<detail::Move> path;
        for (Vertex v = sink; v != source;) {
            const auto& m = *parent[v.index];
            path.push_back(m);
            v = m.forward ? arcs[m.arc].tail : arcs[m.arc].head;
        }
        Capacity bottleneck = std::numeric_limits<Capacity>::max();
        for (const auto& m : path) bottleneck = std::min(bottleneck, r.headroom(m));
        for (const auto& m : path) r.push(m, bottleneck);
        value += bottleneck;
        total_cost += bottleneck * dist[sink.index];
    }
    return MinCostFlowResult{value, total_cost, flow_of(r, source, sink)};
}

}  // namespace flowcent

#include "flowcent/decomposition.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <random>

namespace flowcent {

namespace {

class Extractor {
public:
    Extractor(const Network& network, const Flow& flow, std::optional<std::uint64_t> seed)
        : net_(network), remaining_(network.arcs().size(), 0) {
        if (seed) rng_.emplace(*seed);
        for (const auto& [arc, value] : flow.assignment()) remaining_[*net_.arc_index(arc)] = value;
    }

    Decomposition run(Vertex source, Vertex sink, Capacity value) {
        std::vector<Path> paths;
        for (Capacity j = 0; j < value; ++j) {
            auto found = find_path(source, sink);
            if (!found) throw Error(ErrorKind::InvalidFlow, "flow support has no path from source to sink");
            for (std::size_t i = 0; i + 1 < found->size(); ++i) {
                --remaining_[*net_.arc_index(Arc{(*found)[i], (*found)[i + 1]})];
            }
            paths.emplace_back(std::move(*found));
        }
        std::vector<Cycle> cycles;
        while (auto c = find_cycle()) {
            for (std::size_t i = 0; i + 1 < c->size(); ++i) {
                --remaining_[*net_.arc_index(Arc{(*c)[i], (*c)[i + 1]})];
            }
            cycles.emplace_back(std::move(*c));
        }
        return Decomposition{ArcDisjointSequence(source, sink, std::move(paths)), std::move(cycles)};
    }

private:
    std::vector<std::size_t> candidates(Vertex u) {
        std::vector<std::size_t> out;
        for (std::size_t idx : net_.out_arcs(u)) {
            if (remaining_[idx] > 0) out.push_back(idx);
        }
        if (rng_) std::shuffle(out.begin(), out.end(), *rng_);
        return out;
    }

    std::optional<std::vector<Vertex>> find_path(Vertex source, Vertex sink) {
        std::vector<bool> visited(net_.vertex_count(), false);
        std::vector<Vertex> stack{source};
        visited[source.index] = true;
        if (dfs(source, sink, visited, stack)) return stack;
        return std::nullopt;
    }

    bool dfs(Vertex u, Vertex sink, std::vector<bool>& visited, std::vector<Vertex>& stack) {
        if (u == sink) return true;
        for (std::size_t idx : candidates(u)) {
            Vertex w = net_.arcs()[idx].head;
            if (visited[w.index]) continue;
            visited[w.index] = true;
            stack.push_back(w);
            if (dfs(w, sink, visited, stack)) return true;
            stack.pop_back();
        }
        return false;
    }

    // Remaining assignment is a circulation here, so every walk closes.
    std::optional<std::vector<Vertex>> find_cycle() {
        std::optional<Vertex> start;
        for (std::size_t idx = 0; idx < remaining_.size(); ++idx) {
            if (remaining_[idx] > 0) {
                start = net_.arcs()[idx].tail;
                break;
            }
        }
        if (!start) return std::nullopt;
        std::vector<Vertex> walk{*start};
        std::vector<std::size_t> position(net_.vertex_count(), SIZE_MAX);
        position[start->index] = 0;
        Vertex u = *start;
        while (true) {
            auto next = candidates(u);
            if (next.empty()) throw Error(ErrorKind::InvalidFlow, "residual assignment is not a circulation");
            Vertex w = net_.arcs()[next.front()].head;
            if (position[w.index] != SIZE_MAX) {
                std::vector<Vertex> cycle(walk.begin() + static_cast<std::ptrdiff_t>(position[w.index]), walk.end());
                cycle.push_back(w);
                return cycle;
            }
            position[w.index] = walk.size();
            walk.push_back(w);
            u = w;
        }
    }

    const Network& net_;
    std::vector<Capacity> remaining_;
    std::optional<std::mt19937_64> rng_;
};

Decomposition decompose_impl(const Network& network, const Flow& flow, std::optional<std::uint64_t> seed) {
    if (auto violation = validate_flow(network, flow)) throw Error(ErrorKind::InvalidFlow, violation->message);
    const Capacity value = flow_value(flow);
    if (value < 0) throw Error(ErrorKind::InvalidFlow, "flow has negative value");
    return Extractor(network, flow, seed).run(flow.source(), flow.sink(), value);
}

}  // namespace

Decomposition decompose(const Network& network, const Flow& flow) {
    return decompose_impl(network, flow, std::nullopt);
}

Decomposition decompose_shuffled(const Network& network, const Flow& flow, std::uint64_t seed) {
    return decompose_impl(network, flow, seed);
}

Flow recompose(const Decomposition& d) {
    std::map<Arc, Capacity> total;
    for (const auto& p : d.paths.paths()) {
        for (const Arc& a : p.arcs()) ++total[a];
    }
    for (const auto& c : d.cycles) {
        for (const Arc& a : c.arcs()) ++total[a];
    }
    return Flow(d.paths.source(), d.paths.sink(), total);
}

}  // namespace flowcent

#include "flowcent/network.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace flowcent {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DuplicateArc: return "DuplicateArc";
        case ErrorKind::SelfLoop: return "SelfLoop";
        case ErrorKind::UnknownVertex: return "UnknownVertex";
        case ErrorKind::TooFewVertices: return "TooFewVertices";
        case ErrorKind::DuplicateVertex: return "DuplicateVertex";
        case ErrorKind::InvalidToken: return "InvalidToken";
        case ErrorKind::NegativeCapacity: return "NegativeCapacity";
        case ErrorKind::CapacityTooLarge: return "CapacityTooLarge";
        case ErrorKind::Parse: return "ParseError";
        case ErrorKind::MalformedPath: return "MalformedPath";
        case ErrorKind::MixedEndpoints: return "MixedEndpoints";
        case ErrorKind::NotArcDisjoint: return "NotArcDisjoint";
        case ErrorKind::InvalidFlow: return "InvalidFlow";
        case ErrorKind::SameEndpoints: return "SameEndpoints";
        case ErrorKind::NotAugmenting: return "NotAugmenting";
        case ErrorKind::ShortcutInvalid: return "ShortcutInvalid";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::InvalidSpec: return "InvalidSpec";
        case ErrorKind::InvariantViolation: return "InvariantViolation";
    }
    return "Error";
}

VertexId::VertexId(std::string token) : token_(std::move(token)) {
    if (!is_valid_token(token_)) {
        throw Error(ErrorKind::InvalidToken, "vertex token '" + token_ + "' must match [A-Za-z0-9_]+");
    }
}

bool VertexId::is_valid_token(std::string_view token) noexcept {
    if (token.empty()) return false;
    return std::all_of(token.begin(), token.end(), [](char ch) {
        return (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') || (ch >= '0' && ch <= '9') ||
               ch == '_';
    });
}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool VertexSet::contains(Vertex v) const noexcept {
    return std::binary_search(members_.begin(), members_.end(), v);
}

bool VertexSet::is_subset_of(const VertexSet& other) const noexcept {
    return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                         members_.end());
}

VertexSet VertexSet::united(const VertexSet& other) const {
    std::vector<Vertex> out;
    std::set_union(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                   std::back_inserter(out));
    return VertexSet(std::move(out));
}

Network::Network(std::vector<VertexId> names, std::vector<std::pair<Arc, Capacity>> entries)
    : names_(std::move(names)), out_(names_.size()), in_(names_.size()) {
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [arc, cap] : entries) {
        if (cap == 0) continue;
        arcs_.push_back(arc);
        capacities_.push_back(cap);
    }
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
        out_[arcs_[i].tail.index].push_back(i);
    }
    // in-lists ordered by tail: arcs_ is sorted by tail first, so a single pass keeps that order
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
        in_[arcs_[i].head.index].push_back(i);
    }
}

Network Network::build(std::vector<std::string> vertices, std::span<const CapacityEntry> entries) {
    std::vector<VertexId> names;
    names.reserve(vertices.size());
    for (auto& token : vertices) names.emplace_back(std::move(token));
    std::sort(names.begin(), names.end());
    for (std::size_t i = 1; i < names.size(); ++i) {
        if (names[i] == names[i - 1]) {
            throw Error(ErrorKind::DuplicateVertex, "vertex '" + names[i].token() + "' declared twice");
        }
    }
    if (names.size() < 2) {
        throw Error(ErrorKind::TooFewVertices,
                    "a network needs at least 2 vertices, got " + std::to_string(names.size()));
    }

    auto lookup = [&](const std::string& token) {
        auto it = std::lower_bound(names.begin(), names.end(), token,
                                   [](const VertexId& id, const std::string& t) { return id.token() < t; });
        if (it == names.end() || it->token() != token) {
            throw Error(ErrorKind::UnknownVertex, "vertex '" + token + "' is not declared");
        }
        return Vertex{static_cast<std::uint32_t>(it - names.begin())};
    };

    std::vector<std::pair<Arc, Capacity>> resolved;
    std::set<Arc> seen;
    for (const auto& e : entries) {
        if (e.tail == e.head) {
            throw Error(ErrorKind::SelfLoop, "arc (" + e.tail + "," + e.head + ") is a self-loop");
        }
        Arc arc{lookup(e.tail), lookup(e.head)};
        if (e.capacity < 0) {
            throw Error(ErrorKind::NegativeCapacity,
                        "arc (" + e.tail + "," + e.head + ") has negative capacity");
        }
        if (!seen.insert(arc).second) {
            throw Error(ErrorKind::DuplicateArc, "arc (" + e.tail + "," + e.head + ") listed twice");
        }
        resolved.emplace_back(arc, e.capacity);
    }
    return Network(std::move(names), std::move(resolved));
}

Network Network::from_sorted(std::vector<VertexId> names,
                             std::span<const std::pair<Arc, Capacity>> entries) {
    if (names.size() < 2) {
        throw Error(ErrorKind::TooFewVertices,
                    "a network needs at least 2 vertices, got " + std::to_string(names.size()));
    }
    for (std::size_t i = 1; i < names.size(); ++i) {
        if (!(names[i - 1] < names[i])) {
            throw Error(ErrorKind::DuplicateVertex,
                        "vertex names must be strictly increasing at '" + names[i].token() + "'");
        }
    }
    std::set<Arc> seen;
    for (const auto& [arc, cap] : entries) {
        if (arc.tail.index >= names.size() || arc.head.index >= names.size()) {
            throw Error(ErrorKind::UnknownVertex, "arc endpoint index out of range");
        }
        if (arc.tail == arc.head) {
            throw Error(ErrorKind::SelfLoop, "arc at '" + names[arc.tail.index].token() + "' is a self-loop");
        }
        if (cap < 0) throw Error(ErrorKind::NegativeCapacity, "negative capacity");
        if (!seen.insert(arc).second) throw Error(ErrorKind::DuplicateArc, "arc listed twice");
    }
    return Network(std::move(names), {entries.begin(), entries.end()});
}

std::optional<Vertex> Network::find(std::string_view token) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), token,
                               [](const VertexId& id, std::string_view t) { return id.token() < t; });
    if (it == names_.end() || it->token() != token) return std::nullopt;
    return Vertex{static_cast<std::uint32_t>(it - names_.begin())};
}

Vertex Network::vertex(std::string_view token) const {
    if (auto v = find(token)) return *v;
    throw Error(ErrorKind::UnknownVertex, "vertex '" + std::string(token) + "' is not in the network");
}

VertexSet Network::resolve(std::span<const std::string> tokens) const {
    std::vector<Vertex> members;
    members.reserve(tokens.size());
    for (const auto& t : tokens) members.push_back(vertex(t));
    return VertexSet(std::move(members));
}

void Network::require(Vertex v) const {
    if (v.index >= names_.size()) {
        throw Error(ErrorKind::UnknownVertex,
                    "vertex index " + std::to_string(v.index) + " is not in the network");
    }
}

void Network::require(const VertexSet& set) const {
    for (Vertex v : set) require(v);
}

VertexSet Network::all_vertices() const {
    std::vector<Vertex> all(names_.size());
    for (std::uint32_t i = 0; i < all.size(); ++i) all[i] = Vertex{i};
    return VertexSet(std::move(all));
}

std::optional<std::size_t> Network::arc_index(Arc a) const {
    auto it = std::lower_bound(arcs_.begin(), arcs_.end(), a);
    if (it == arcs_.end() || *it != a) return std::nullopt;
    return static_cast<std::size_t>(it - arcs_.begin());
}

Capacity Network::capacity(Arc a) const {
    auto idx = arc_index(a);
    return idx ? capacities_[*idx] : 0;
}

Capacity Network::total_capacity() const noexcept {
    return std::accumulate(capacities_.begin(), capacities_.end(), Capacity{0});
}

Network Network::with_capacity(Arc a, Capacity c) const {
    require(a.tail);
    require(a.head);
    if (a.tail == a.head) throw Error(ErrorKind::SelfLoop, "arc at '" + name(a.tail) + "' is a self-loop");
    if (c < 0) throw Error(ErrorKind::NegativeCapacity, "arc " + arc_name(a) + " has negative capacity");
    std::vector<std::pair<Arc, Capacity>> entries;
    bool replaced = false;
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
        if (arcs_[i] == a) {
            entries.emplace_back(a, c);
            replaced = true;
        } else {
            entries.emplace_back(arcs_[i], capacities_[i]);
        }
    }
    if (!replaced) entries.emplace_back(a, c);
    return Network(names_, std::move(entries));
}

Network restrict(const Network& network, const VertexSet& set) {
    network.require(set);
    std::vector<std::pair<Arc, Capacity>> kept;
    auto arcs = network.arcs();
    auto caps = network.arc_capacities();
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        if (set.contains(arcs[i].tail) || set.contains(arcs[i].head)) continue;
        kept.emplace_back(arcs[i], caps[i]);
    }
    return Network::from_sorted({network.ids().begin(), network.ids().end()}, kept);
}

BoundaryArcs boundary_arcs(const Network& network, const VertexSet& set) {
    network.require(set);
    BoundaryArcs result;
    for (Vertex x : set) {
        for (std::uint32_t u = 0; u < network.vertex_count(); ++u) {
            Vertex other{u};
            if (set.contains(other)) continue;
            result.outgoing.push_back(Arc{x, other});
            result.incoming.push_back(Arc{other, x});
        }
    }
    std::sort(result.outgoing.begin(), result.outgoing.end());
    std::sort(result.incoming.begin(), result.incoming.end());
    return result;
}

Capacity capacity_of_set(const Network& network, const VertexSet& set) {
    network.require(set);
    Capacity total = 0;
    for (Vertex x : set) {
        for (std::size_t idx : network.out_arcs(x)) {
            if (!set.contains(network.arcs()[idx].head)) total += network.arc_capacities()[idx];
        }
    }
    return total;
}

VertexSet complement(const Network& network, const VertexSet& set) {
    std::vector<Vertex> rest;
    for (std::uint32_t u = 0; u < network.vertex_count(); ++u) {
        if (!set.contains(Vertex{u})) rest.push_back(Vertex{u});
    }
    return VertexSet(std::move(rest));
}

std::string format_set(const Network& network, const VertexSet& set) {
    std::string out = "{";
    bool first = true;
    for (Vertex v : set) {
        if (!first) out += ',';
        out += network.name(v);
        first = false;
    }
    out += '}';
    return out;
}

}  // namespace flowcent

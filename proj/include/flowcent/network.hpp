#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "flowcent/error.hpp"

namespace flowcent {

using Capacity = std::int64_t;

// Vertex name as it appears in files and on the command line: [A-Za-z0-9_]+.
class VertexId {
public:
    explicit VertexId(std::string token);

    const std::string& token() const noexcept { return token_; }

    static bool is_valid_token(std::string_view token) noexcept;

    friend auto operator<=>(const VertexId&, const VertexId&) = default;

private:
    std::string token_;
};

// Position of a vertex in the network's canonical (lexicographic) order.
struct Vertex {
    std::uint32_t index = 0;

    friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

struct Arc {
    Vertex tail;
    Vertex head;

    friend auto operator<=>(const Arc&, const Arc&) = default;
};

// Sorted, duplicate-free subset of vertices.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::vector<Vertex> members);

    static VertexSet singleton(Vertex v) { return VertexSet({v}); }

    bool contains(Vertex v) const noexcept;
    bool empty() const noexcept { return members_.empty(); }
    std::size_t size() const noexcept { return members_.size(); }
    bool is_subset_of(const VertexSet& other) const noexcept;
    VertexSet united(const VertexSet& other) const;

    std::span<const Vertex> members() const noexcept { return members_; }
    auto begin() const noexcept { return members_.begin(); }
    auto end() const noexcept { return members_.end(); }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::vector<Vertex> members_;
};

struct CapacityEntry {
    std::string tail;
    std::string head;
    Capacity capacity = 0;
};

// Integer-capacitated complete digraph. Only positive capacities are stored;
// every other ordered pair of distinct vertices has capacity 0.
class Network {
public:
    // Vertices are reordered lexicographically; zero-capacity entries are dropped.
    static Network build(std::vector<std::string> vertices, std::span<const CapacityEntry> entries);

    // Index-level constructor used by generators. `names` must already be sorted.
    static Network from_sorted(std::vector<VertexId> names,
                               std::span<const std::pair<Arc, Capacity>> entries);

    std::size_t vertex_count() const noexcept { return names_.size(); }
    const VertexId& id(Vertex v) const { return names_.at(v.index); }
    const std::string& name(Vertex v) const { return names_.at(v.index).token(); }
    std::span<const VertexId> ids() const noexcept { return names_; }

    std::optional<Vertex> find(std::string_view token) const;
    // Throws UnknownVertex naming the token.
    Vertex vertex(std::string_view token) const;
    VertexSet resolve(std::span<const std::string> tokens) const;
    void require(Vertex v) const;
    void require(const VertexSet& set) const;
    VertexSet all_vertices() const;

    Capacity capacity(Arc a) const;

    // Positive-capacity arcs in canonical (tail, head) order.
    std::span<const Arc> arcs() const noexcept { return arcs_; }
    std::span<const Capacity> arc_capacities() const noexcept { return capacities_; }
    std::optional<std::size_t> arc_index(Arc a) const;
    // Indices into arcs(), ordered by head (out) or by tail (in).
    std::span<const std::size_t> out_arcs(Vertex v) const { return out_.at(v.index); }
    std::span<const std::size_t> in_arcs(Vertex v) const { return in_.at(v.index); }

    Capacity total_capacity() const noexcept;

    // Copy with one arc's capacity replaced (0 removes the arc).
    Network with_capacity(Arc a, Capacity c) const;

    std::string arc_name(Arc a) const { return "(" + name(a.tail) + "," + name(a.head) + ")"; }

    friend bool operator==(const Network& a, const Network& b) {
        return a.names_ == b.names_ && a.arcs_ == b.arcs_ && a.capacities_ == b.capacities_;
    }

private:
    Network(std::vector<VertexId> names, std::vector<std::pair<Arc, Capacity>> entries);

    std::vector<VertexId> names_;
    std::vector<Arc> arcs_;
    std::vector<Capacity> capacities_;
    std::vector<std::vector<std::size_t>> out_;
    std::vector<std::vector<std::size_t>> in_;
};

// N_X: zero every arc with at least one endpoint in X.
Network restrict(const Network& network, const VertexSet& set);

struct BoundaryArcs {
    std::vector<Arc> outgoing;  // X -> V\X
    std::vector<Arc> incoming;  // V\X -> X
};

// All arcs of the complete digraph crossing the boundary of X, zero-capacity ones included.
BoundaryArcs boundary_arcs(const Network& network, const VertexSet& set);

// c(X): total capacity leaving X.
Capacity capacity_of_set(const Network& network, const VertexSet& set);

VertexSet complement(const Network& network, const VertexSet& set);

std::string format_set(const Network& network, const VertexSet& set);

}  // namespace flowcent

#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "flowcent/flow.hpp"
#include "flowcent/network.hpp"

namespace flowcent {

// Vertex-distinct walk with forward arcs only. Validity against capacities is
// checked where a network is involved, not here.
class Path {
public:
    explicit Path(std::vector<Vertex> vertices);

    std::span<const Vertex> vertices() const noexcept { return vertices_; }
    Vertex source() const noexcept { return vertices_.front(); }
    Vertex sink() const noexcept { return vertices_.back(); }
    std::vector<Arc> arcs() const;

    friend auto operator<=>(const Path&, const Path&) = default;

private:
    std::vector<Vertex> vertices_;
};

// Closed walk x1 .. xm with xm == x1, m >= 3 and x1 .. x(m-1) distinct.
class Cycle {
public:
    explicit Cycle(std::vector<Vertex> vertices);

    std::span<const Vertex> vertices() const noexcept { return vertices_; }
    std::vector<Arc> arcs() const;

    friend auto operator<=>(const Cycle&, const Cycle&) = default;

private:
    std::vector<Vertex> vertices_;
};

enum class Direction { Forward, Backward };

// Vertex-distinct sequence whose i-th arc is (x_i, x_{i+1}) when forward and
// (x_{i+1}, x_i) when backward.
class GeneralizedPath {
public:
    GeneralizedPath(std::vector<Vertex> vertices, std::vector<Direction> directions);

    std::span<const Vertex> vertices() const noexcept { return vertices_; }
    std::span<const Direction> directions() const noexcept { return directions_; }
    Vertex source() const noexcept { return vertices_.front(); }
    Vertex sink() const noexcept { return vertices_.back(); }
    Arc arc(std::size_t i) const;
    std::vector<Arc> arcs() const;
    bool is_path() const noexcept;

    friend bool operator==(const GeneralizedPath&, const GeneralizedPath&) = default;

private:
    std::vector<Vertex> vertices_;
    std::vector<Direction> directions_;
};

ArcFunction chi(const Path& path);
ArcFunction chi(const Cycle& cycle);
ArcFunction chi(const GeneralizedPath& path);

bool passes_through(std::span<const Vertex> vertices, const VertexSet& set);
inline bool passes_through(const Path& p, const VertexSet& set) { return passes_through(p.vertices(), set); }
inline bool passes_through(const Cycle& c, const VertexSet& set) { return passes_through(c.vertices(), set); }
inline bool passes_through(const GeneralizedPath& g, const VertexSet& set) {
    return passes_through(g.vertices(), set);
}

// Ordered sequence of source-sink paths. Arc-disjointness is relative to a
// network and is checked by is_arc_disjoint / induced_flow.
class ArcDisjointSequence {
public:
    ArcDisjointSequence(Vertex source, Vertex sink, std::vector<Path> paths = {});

    Vertex source() const noexcept { return source_; }
    Vertex sink() const noexcept { return sink_; }
    std::span<const Path> paths() const noexcept { return paths_; }
    std::size_t length() const noexcept { return paths_.size(); }

    // Components sorted lexicographically: the representative of the equivalence class.
    ArcDisjointSequence canonical() const;

    friend bool operator==(const ArcDisjointSequence&, const ArcDisjointSequence&) = default;

private:
    Vertex source_;
    Vertex sink_;
    std::vector<Path> paths_;
};

// Throws MixedEndpoints when the paths do not share source and sink.
bool is_arc_disjoint(const Network& network, std::span<const Path> paths);

// l_X: number of components meeting X.
std::size_t passage_count(const ArcDisjointSequence& seq, const VertexSet& set);

// f_gamma: per-arc multiplicity across the components. Throws NotArcDisjoint.
Flow induced_flow(const Network& network, const ArcDisjointSequence& seq);

bool sequences_equivalent(const ArcDisjointSequence& a, const ArcDisjointSequence& b);

// `y-v-x-z` notation.
std::string format_path(const Network& network, std::span<const Vertex> vertices);
inline std::string format_path(const Network& network, const Path& p) { return format_path(network, p.vertices()); }
std::string format_sequence(const Network& network, const ArcDisjointSequence& seq);
Path parse_path(const Network& network, std::string_view text);
Cycle parse_cycle(const Network& network, std::string_view text);

}  // namespace flowcent

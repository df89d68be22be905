#include "flowcent/path.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace flowcent {

namespace {

bool all_distinct(std::span<const Vertex> vs) {
    std::vector<Vertex> sorted(vs.begin(), vs.end());
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

std::vector<Arc> forward_arcs(std::span<const Vertex> vs) {
    std::vector<Arc> arcs;
    arcs.reserve(vs.size() - 1);
    for (std::size_t i = 0; i + 1 < vs.size(); ++i) arcs.push_back(Arc{vs[i], vs[i + 1]});
    return arcs;
}

std::vector<Vertex> split_tokens(const Network& network, std::string_view text) {
    std::vector<Vertex> out;
    std::size_t start = 0;
    while (true) {
        auto dash = text.find('-', start);
        auto token = text.substr(start, dash == std::string_view::npos ? std::string_view::npos : dash - start);
        if (token.empty()) {
            throw Error(ErrorKind::MalformedPath, "empty vertex token in '" + std::string(text) + "'");
        }
        out.push_back(network.vertex(token));
        if (dash == std::string_view::npos) break;
        start = dash + 1;
    }
    return out;
}

}  // namespace

Path::Path(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.size() < 2) throw Error(ErrorKind::MalformedPath, "a path needs at least 2 vertices");
    if (!all_distinct(vertices_)) throw Error(ErrorKind::MalformedPath, "path repeats a vertex");
}

std::vector<Arc> Path::arcs() const { return forward_arcs(vertices_); }

Cycle::Cycle(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.size() < 3) throw Error(ErrorKind::MalformedPath, "a cycle needs at least 3 vertex entries");
    if (vertices_.front() != vertices_.back()) {
        throw Error(ErrorKind::MalformedPath, "a cycle must end where it starts");
    }
    if (!all_distinct(std::span<const Vertex>(vertices_).first(vertices_.size() - 1))) {
        throw Error(ErrorKind::MalformedPath, "cycle repeats an inner vertex");
    }
}

std::vector<Arc> Cycle::arcs() const { return forward_arcs(vertices_); }

GeneralizedPath::GeneralizedPath(std::vector<Vertex> vertices, std::vector<Direction> directions)
    : vertices_(std::move(vertices)), directions_(std::move(directions)) {
    if (vertices_.size() < 2) throw Error(ErrorKind::MalformedPath, "a generalized path needs at least 2 vertices");
    if (directions_.size() + 1 != vertices_.size()) {
        throw Error(ErrorKind::MalformedPath, "need exactly one direction per consecutive vertex pair");
    }
    if (!all_distinct(vertices_)) throw Error(ErrorKind::MalformedPath, "generalized path repeats a vertex");
}

Arc GeneralizedPath::arc(std::size_t i) const {
    return directions_.at(i) == Direction::Forward ? Arc{vertices_[i], vertices_[i + 1]}
                                                   : Arc{vertices_[i + 1], vertices_[i]};
}

std::vector<Arc> GeneralizedPath::arcs() const {
    std::vector<Arc> out;
    out.reserve(directions_.size());
    for (std::size_t i = 0; i < directions_.size(); ++i) out.push_back(arc(i));
    return out;
}

bool GeneralizedPath::is_path() const noexcept {
    return std::all_of(directions_.begin(), directions_.end(),
                       [](Direction d) { return d == Direction::Forward; });
}

ArcFunction chi(const Path& path) {
    ArcFunction f;
    for (const Arc& a : path.arcs()) f[a] = 1;
    return f;
}

ArcFunction chi(const Cycle& cycle) {
    ArcFunction f;
    for (const Arc& a : cycle.arcs()) f[a] = 1;
    return f;
}

ArcFunction chi(const GeneralizedPath& path) {
    ArcFunction f;
    for (std::size_t i = 0; i < path.directions().size(); ++i) {
        f[path.arc(i)] = path.directions()[i] == Direction::Forward ? 1 : -1;
    }
    return f;
}

bool passes_through(std::span<const Vertex> vertices, const VertexSet& set) {
    return std::any_of(vertices.begin(), vertices.end(), [&](Vertex v) { return set.contains(v); });
}

ArcDisjointSequence::ArcDisjointSequence(Vertex source, Vertex sink, std::vector<Path> paths)
    : source_(source), sink_(sink), paths_(std::move(paths)) {
    if (source_ == sink_) throw Error(ErrorKind::SameEndpoints, "sequence source equals sink");
    for (const auto& p : paths_) {
        if (p.source() != source_ || p.sink() != sink_) {
            throw Error(ErrorKind::MixedEndpoints, "component does not run from the sequence source to its sink");
        }
    }
}

ArcDisjointSequence ArcDisjointSequence::canonical() const {
    std::vector<Path> sorted = paths_;
    std::sort(sorted.begin(), sorted.end());
    return ArcDisjointSequence(source_, sink_, std::move(sorted));
}

bool is_arc_disjoint(const Network& network, std::span<const Path> paths) {
    if (paths.empty()) return true;
    for (const auto& p : paths) {
        if (p.source() != paths.front().source() || p.sink() != paths.front().sink()) {
            throw Error(ErrorKind::MixedEndpoints, "paths do not share source and sink");
        }
        for (Vertex v : p.vertices()) network.require(v);
    }
    std::map<Arc, Capacity> multiplicity;
    for (const auto& p : paths) {
        for (const Arc& a : p.arcs()) ++multiplicity[a];
    }
    return std::all_of(multiplicity.begin(), multiplicity.end(),
                       [&](const auto& entry) { return entry.second <= network.capacity(entry.first); });
}

std::size_t passage_count(const ArcDisjointSequence& seq, const VertexSet& set) {
    return static_cast<std::size_t>(std::count_if(seq.paths().begin(), seq.paths().end(),
                                                  [&](const Path& p) { return passes_through(p, set); }));
}

Flow induced_flow(const Network& network, const ArcDisjointSequence& seq) {
    network.require(seq.source());
    network.require(seq.sink());
    if (!is_arc_disjoint(network, seq.paths())) {
        throw Error(ErrorKind::NotArcDisjoint, "sequence " + format_sequence(network, seq) +
                                                   " exceeds an arc capacity");
    }
    std::map<Arc, Capacity> counts;
    for (const auto& p : seq.paths()) {
        for (const Arc& a : p.arcs()) ++counts[a];
    }
    return Flow(seq.source(), seq.sink(), counts);
}

bool sequences_equivalent(const ArcDisjointSequence& a, const ArcDisjointSequence& b) {
    if (a.length() != b.length()) return false;
    if (a.length() == 0) return true;
    const auto ca = a.canonical();
    const auto cb = b.canonical();
    return std::ranges::equal(ca.paths(), cb.paths());
}

std::string format_path(const Network& network, std::span<const Vertex> vertices) {
    std::string out;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (i) out += '-';
        out += network.name(vertices[i]);
    }
    return out;
}

std::string format_sequence(const Network& network, const ArcDisjointSequence& seq) {
    if (seq.length() == 0) return "()";
    std::string out;
    for (std::size_t i = 0; i < seq.length(); ++i) {
        if (i) out += ';';
        out += format_path(network, seq.paths()[i]);
    }
    return out;
}

Path parse_path(const Network& network, std::string_view text) { return Path(split_tokens(network, text)); }

Cycle parse_cycle(const Network& network, std::string_view text) { return Cycle(split_tokens(network, text)); }

}  // namespace flowcent

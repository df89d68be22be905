#include <doctest.h>

#include "flowcent/oracle.hpp"
#include "helpers.hpp"

using namespace flowcent;
using testing::arc;
using testing::fixture;
using testing::set_of;

TEST_CASE("fig1 capacities") {
    const auto n = fixture("fig1.net");
    CHECK(n.vertex_count() == 5);
    CHECK(n.capacity(arc(n, "y", "v")) == 2);
    CHECK(n.capacity(arc(n, "y", "u")) == 1);
    CHECK(n.capacity(arc(n, "v", "x")) == 1);
    CHECK(n.capacity(arc(n, "v", "u")) == 1);
    CHECK(n.capacity(arc(n, "u", "x")) == 2);
    CHECK(n.capacity(arc(n, "u", "z")) == 1);
    CHECK(n.capacity(arc(n, "x", "z")) == 2);
    CHECK(n.capacity(arc(n, "z", "y")) == 0);
    CHECK(n.arcs().size() == 7);
    CHECK(n.total_capacity() == 10);
}

TEST_CASE("build orders vertices and drops zero entries") {
    std::vector<CapacityEntry> entries{{"b", "a", 3}, {"a", "b", 0}};
    const auto n = Network::build({"b", "a"}, entries);
    CHECK(n.name(Vertex{0}) == "a");
    CHECK(n.name(Vertex{1}) == "b");
    CHECK(n.arcs().size() == 1);
    CHECK(n.capacity(Arc{Vertex{1}, Vertex{0}}) == 3);
}

TEST_CASE("two vertices without entries") {
    const auto n = Network::build({"a", "b"}, {});
    CHECK(n.arcs().empty());
    CHECK(n.capacity(Arc{Vertex{0}, Vertex{1}}) == 0);
    CHECK(n.capacity(Arc{Vertex{1}, Vertex{0}}) == 0);
}

TEST_CASE("build errors") {
    auto kind = [](auto&& f) {
        try {
            f();
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::InvariantViolation;
    };
    std::vector<CapacityEntry> loop{{"a", "a", 1}};
    CHECK(kind([&] { Network::build({"a", "b"}, loop); }) == ErrorKind::SelfLoop);
    std::vector<CapacityEntry> dup{{"a", "b", 1}, {"a", "b", 2}};
    CHECK(kind([&] { Network::build({"a", "b"}, dup); }) == ErrorKind::DuplicateArc);
    std::vector<CapacityEntry> unknown{{"a", "q", 1}};
    CHECK(kind([&] { Network::build({"a", "b"}, unknown); }) == ErrorKind::UnknownVertex);
    std::vector<CapacityEntry> negative{{"a", "b", -1}};
    CHECK(kind([&] { Network::build({"a", "b"}, negative); }) == ErrorKind::NegativeCapacity);
    CHECK(kind([&] { Network::build({"a"}, {}); }) == ErrorKind::TooFewVertices);
    CHECK(kind([&] { Network::build({"a", "a"}, {}); }) == ErrorKind::DuplicateVertex);
    CHECK(kind([&] { Network::build({"a", "b-c"}, {}); }) == ErrorKind::InvalidToken);
}

TEST_CASE("unknown vertex error names the token") {
    const auto n = fixture("fig1.net");
    try {
        n.vertex("nope");
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnknownVertex);
        CHECK(std::string(e.what()).find("nope") != std::string::npos);
    }
}

TEST_CASE("restrict on fig1 and fig6") {
    const auto n = fixture("fig1.net");
    const auto r = restrict(n, set_of(n, {"x"}));
    CHECK(r.arcs().size() == 4);
    CHECK(r.capacity(arc(n, "y", "v")) == 2);
    CHECK(r.capacity(arc(n, "y", "u")) == 1);
    CHECK(r.capacity(arc(n, "v", "u")) == 1);
    CHECK(r.capacity(arc(n, "u", "z")) == 1);
    CHECK(r.capacity(arc(n, "u", "x")) == 0);

    const auto six = fixture("fig6.net");
    CHECK(restrict(six, set_of(six, {"x1", "x2"})).arcs().empty());
    CHECK(restrict(n, VertexSet{}) == n);
}

TEST_CASE("boundary arcs") {
    const auto n = fixture("fig1.net");
    const auto b = boundary_arcs(n, set_of(n, {"x"}));
    CHECK(b.outgoing.size() == 4);
    CHECK(b.incoming.size() == 4);
    for (auto h : {"y", "v", "u", "z"}) {
        CHECK(std::find(b.outgoing.begin(), b.outgoing.end(), arc(n, "x", h)) != b.outgoing.end());
        CHECK(std::find(b.incoming.begin(), b.incoming.end(), arc(n, h, "x")) != b.incoming.end());
    }
    const auto all = boundary_arcs(n, n.all_vertices());
    CHECK(all.outgoing.empty());
    CHECK(all.incoming.empty());
    const auto none = boundary_arcs(n, VertexSet{});
    CHECK(none.outgoing.empty());
    CHECK(none.incoming.empty());
}

TEST_CASE("capacity of a set") {
    const auto n = fixture("fig1.net");
    const auto x = set_of(n, {"x"});
    CHECK(capacity_of_set(n, x) == 2);
    CHECK(capacity_of_set(n, complement(n, x)) == 3);
    CHECK(capacity_of_set(n, n.all_vertices()) == 0);
}

TEST_CASE("restrict properties on random networks") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        oracle::InstanceSpec spec{5, 3, 1, 2, seed};
        const auto n = oracle::generate(spec);
        std::vector<Vertex> a;
        std::vector<Vertex> b;
        for (std::uint32_t i = 0; i < 5; ++i) {
            if ((seed >> i) & 1U) a.push_back(Vertex{i});
            if (((seed >> i) & 1U) || i == seed % 5) b.push_back(Vertex{i});
        }
        const VertexSet small(a);
        const VertexSet big(b);
        REQUIRE(small.is_subset_of(big));
        const auto rs = restrict(n, small);
        const auto rb = restrict(n, big);
        CHECK(restrict(rs, small) == rs);
        for (std::uint32_t t = 0; t < 5; ++t) {
            for (std::uint32_t h = 0; h < 5; ++h) {
                if (t == h) continue;
                const Arc e{Vertex{t}, Vertex{h}};
                CHECK(rs.capacity(e) <= n.capacity(e));
                CHECK(rb.capacity(e) <= rs.capacity(e));
            }
        }
        for (std::uint32_t x = 0; x < 5; ++x) {
            Capacity tail_sum = 0;
            for (std::size_t i = 0; i < n.arcs().size(); ++i) {
                if (n.arcs()[i].tail == Vertex{x}) tail_sum += n.arc_capacities()[i];
            }
            CHECK(capacity_of_set(n, VertexSet::singleton(Vertex{x})) == tail_sum);
            CHECK(tail_sum <= n.total_capacity());
        }
        CHECK(parse_network(serialize_network(n)) == n);
    }
}

TEST_CASE("vertex set basics") {
    VertexSet s({Vertex{3}, Vertex{1}, Vertex{3}});
    CHECK(s.size() == 2);
    CHECK(s.contains(Vertex{1}));
    CHECK_FALSE(s.contains(Vertex{2}));
    CHECK(VertexSet::singleton(Vertex{1}).is_subset_of(s));
    CHECK(s.united(VertexSet::singleton(Vertex{0})).size() == 3);
}

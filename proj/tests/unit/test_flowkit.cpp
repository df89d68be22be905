#include <doctest.h>

#include "flowcent/decomposition.hpp"
#include "flowcent/oracle.hpp"
#include "flowcent/quantities.hpp"
#include "flowcent/solvers.hpp"
#include "helpers.hpp"

using namespace flowcent;
using testing::arc;
using testing::fixture;
using testing::fixture_text;
using testing::seq;
using testing::set_of;

namespace {

Flow fig2_flow(const Network& n) { return parse_flow(n, fixture_text("fig2.flow"), "fig2.flow"); }

Flow fig6_unit(const Network& n) {
    return Flow(n.vertex("y"), n.vertex("z"),
                {{arc(n, "y", "x1"), 1}, {arc(n, "x1", "u"), 1}, {arc(n, "u", "x2"), 1}, {arc(n, "x2", "z"), 1}});
}

}  // namespace

TEST_CASE("validate flow") {
    const auto two = fixture("fig2.net");
    CHECK_FALSE(validate_flow(two, fig2_flow(two)));
    const auto one = fixture("fig1.net");
    CHECK_FALSE(validate_flow(one, Flow(one.vertex("y"), one.vertex("z"))));
    const auto bad = validate_flow(one, Flow(one.vertex("y"), one.vertex("z"), {{arc(one, "y", "v"), 3}}));
    REQUIRE(bad);
    CHECK(bad->kind == FlowViolation::Kind::Compatibility);
    CHECK(bad->arc == arc(one, "y", "v"));
    const auto leak = validate_flow(one, Flow(one.vertex("y"), one.vertex("z"), {{arc(one, "y", "v"), 1}}));
    REQUIRE(leak);
    CHECK(leak->kind == FlowViolation::Kind::Conservation);
    CHECK(leak->vertex == one.vertex("v"));
}

TEST_CASE("flow value and flow through") {
    const auto two = fixture("fig2.net");
    const auto f = fig2_flow(two);
    CHECK(flow_value(f) == 2);
    CHECK(flow_through(two, f, set_of(two, {"v"})) == 2);
    CHECK(flow_through(two, f, set_of(two, {"y"})) == 2);
    CHECK(flow_value(Flow(two.vertex("y"), two.vertex("z"))) == 0);
    const auto one = fixture("fig1.net");
    CHECK(flow_value(induced_flow(one, seq(one, {"y-v-u-x-z", "y-v-x-z", "y-u-z"}))) == 3);

    const auto six = fixture("fig6.net");
    CHECK(flow_through(six, fig6_unit(six), set_of(six, {"x1", "x2"})) == 2);
}

TEST_CASE("flow construction") {
    const auto n = fixture("fig1.net");
    CHECK_THROWS_AS(Flow(n.vertex("y"), n.vertex("y")), Error);
    CHECK_THROWS_AS(Flow(n.vertex("y"), n.vertex("z"), {{arc(n, "y", "v"), -1}}), Error);
    Flow f(n.vertex("y"), n.vertex("z"), {{arc(n, "y", "v"), 0}});
    CHECK(f.assignment().empty());
}

TEST_CASE("augmenting paths") {
    const auto one = fixture("fig1.net");
    const auto p = find_augmenting_path(one, Flow(one.vertex("y"), one.vertex("z")));
    REQUIRE(p);
    CHECK(p->is_path());
    CHECK(format_path(one, p->vertices()) == "y-u-z");

    const auto two = fixture("fig2.net");
    CHECK_FALSE(find_augmenting_path(two, fig2_flow(two)));
    const auto empty = Network::build({"y", "z"}, {});
    CHECK_FALSE(find_augmenting_path(empty, Flow(empty.vertex("y"), empty.vertex("z"))));

    const auto six = fixture("fig6.net");
    GeneralizedPath g({six.vertex("y"), six.vertex("x1"), six.vertex("u"), six.vertex("x2"), six.vertex("z")},
                      std::vector<Direction>(4, Direction::Forward));
    CHECK(augment(six, Flow(six.vertex("y"), six.vertex("z")), g) == fig6_unit(six));
    CHECK_THROWS_AS(augment(six, fig6_unit(six), g), Error);
}

TEST_CASE("augmenting along a backward arc") {
    // y->a->b->z and y->b, a->z; push y-a-b-z, then y-b-a-z must undo (a,b).
    std::vector<CapacityEntry> e{{"y", "a", 1}, {"a", "b", 1}, {"b", "z", 1}, {"y", "b", 1}, {"a", "z", 1}};
    const auto n = Network::build({"y", "a", "b", "z"}, e);
    Flow f(n.vertex("y"), n.vertex("z"), {{arc(n, "y", "a"), 1}, {arc(n, "a", "b"), 1}, {arc(n, "b", "z"), 1}});
    const auto p = find_augmenting_path(n, f);
    REQUIRE(p);
    CHECK_FALSE(p->is_path());
    const auto g = augment(n, f, *p);
    CHECK(flow_value(g) == 2);
    CHECK(g.at(arc(n, "a", "b")) == 0);
    CHECK_FALSE(validate_flow(n, g));
}

TEST_CASE("max flow values") {
    const auto one = fixture("fig1.net");
    CHECK(max_flow(one, one.vertex("y"), one.vertex("z")).value == 3);
    const auto five = fixture("fig5.net");
    CHECK(max_flow_value(five, five.vertex("y"), five.vertex("z")) == 3);
    const auto six = fixture("fig6.net");
    CHECK(max_flow_value(six, six.vertex("y"), six.vertex("z")) == 1);
    CHECK_THROWS_AS(max_flow(one, one.vertex("y"), one.vertex("y")), Error);
}

TEST_CASE("min cost max flow") {
    const auto six = fixture("fig6.net");
    ArcCost cost{{arc(six, "x1", "u"), 1}, {arc(six, "x2", "z"), 1}};
    const auto r = min_cost_max_flow(six, six.vertex("y"), six.vertex("z"), cost);
    CHECK(r.value == 1);
    CHECK(r.cost == 2);

    const auto two = fixture("fig2.net");
    ArcCost leave_v;
    for (const auto& a : two.arcs()) {
        if (a.tail == two.vertex("v")) leave_v[a] = 1;
    }
    const auto q = min_cost_max_flow(two, two.vertex("y"), two.vertex("z"), leave_v);
    CHECK(q.value == 2);
    CHECK(q.cost == 1);

    const auto zero = min_cost_max_flow(two, two.vertex("y"), two.vertex("z"), {});
    CHECK(zero.value == 2);
    CHECK(zero.cost == 0);
    CHECK_THROWS_AS(min_cost_max_flow(two, two.vertex("y"), two.vertex("z"), {{arc(two, "y", "v"), -1}}), Error);
}

TEST_CASE("decompose fixtures") {
    const auto two = fixture("fig2.net");
    const auto f = fig2_flow(two);
    const auto d = decompose(two, f);
    CHECK(recompose(d) == f);
    CHECK(d.paths.length() == 2);

    Decomposition with_cycle{seq(two, {"y-v-x-z", "y-u-z"}), {parse_cycle(two, "v-x-u-v")}};
    Decomposition without_cycle{seq(two, {"y-v-x-u-z", "y-u-v-x-z"}), {}};
    CHECK(recompose(with_cycle) == f);
    CHECK(recompose(without_cycle) == f);

    const auto null = decompose(two, Flow(two.vertex("y"), two.vertex("z")));
    CHECK(null.paths.length() == 0);
    CHECK(null.cycles.empty());
    CHECK(recompose(Decomposition{seq(two, {}), {}}) == Flow(two.vertex("y"), two.vertex("z")));

    const auto six = fixture("fig6.net");
    const auto u = decompose(six, fig6_unit(six));
    REQUIRE(u.paths.length() == 1);
    CHECK(format_path(six, u.paths.paths()[0]) == "y-x1-u-x2-z");
    CHECK(u.cycles.empty());
    CHECK(recompose(u) == fig6_unit(six));
}

TEST_CASE("decompose rejects invalid flows") {
    const auto one = fixture("fig1.net");
    CHECK_THROWS_AS(decompose(one, Flow(one.vertex("y"), one.vertex("z"), {{arc(one, "y", "v"), 1}})), Error);
}

TEST_CASE("decomposition round trip on random flows") {
    for (std::uint64_t s = 0; s < 300; ++s) {
        const auto n = oracle::generate(oracle::InstanceSpec{2 + static_cast<std::uint32_t>(s % 5), 3, 1, 2, s});
        const Vertex y{0};
        const Vertex z{static_cast<std::uint32_t>(n.vertex_count() - 1)};
        const auto f = oracle::random_flow(n, y, z, s * 7 + 1);
        REQUIRE_FALSE(validate_flow(n, f));
        for (const auto& d : {decompose(n, f), decompose_shuffled(n, f, s)}) {
            CHECK(recompose(d) == f);
            CHECK(d.paths.length() == static_cast<std::size_t>(flow_value(f)));
            CHECK(is_arc_disjoint(n, d.paths.paths()));
        }
    }
}

TEST_CASE("solver properties against the oracle") {
    for (std::uint64_t s = 0; s < 150; ++s) {
        const auto n = oracle::generate(oracle::InstanceSpec{2 + static_cast<std::uint32_t>(s % 5), 2, 1, 2, s});
        const Vertex y{0};
        const Vertex z{1};
        const auto solved = max_flow(n, y, z);
        CHECK_FALSE(validate_flow(n, solved.flow));
        CHECK(flow_value(solved.flow) == solved.value);
        if (oracle::assignment_space(n) > oracle::kDefaultFlowBudget) continue;
        const auto brute = oracle::brute_force_flows(n, y, z);
        CHECK(brute.max_value == solved.value);

        ArcCost cost;
        for (const auto& a : n.arcs()) cost[a] = static_cast<std::int64_t>((a.tail.index * 3 + a.head.index) % 3);
        const auto mc = min_cost_max_flow(n, y, z, cost);
        CHECK(mc.value == solved.value);
        std::int64_t det_cost = 0;
        for (const auto& [a, v] : solved.flow.assignment()) det_cost += cost[a] * v;
        CHECK(mc.cost <= det_cost);

        // Lowering one capacity: value antitone; flows of the smaller network are flows of the larger.
        if (!n.arcs().empty()) {
            const Arc a = n.arcs()[s % n.arcs().size()];
            const auto smaller = n.with_capacity(a, n.capacity(a) - 1);
            const auto sub = max_flow(smaller, y, z);
            CHECK(sub.value <= solved.value);
            CHECK_FALSE(validate_flow(n, sub.flow));

            // phi' = phi iff every maximum flow of the smaller network is maximum in the larger one.
            const auto small_all = oracle::brute_force_flows(smaller, y, z);
            bool all_maximum = true;
            for (const auto& g : small_all.maximum_flows) {
                all_maximum = all_maximum && !validate_flow(n, g) && flow_value(g) == solved.value;
            }
            CHECK((sub.value == solved.value) == all_maximum);
        }
    }
}

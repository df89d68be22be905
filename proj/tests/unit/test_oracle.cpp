#include <doctest.h>

#include "flowcent/oracle.hpp"
#include "flowcent/solvers.hpp"
#include "helpers.hpp"

using namespace flowcent;
using testing::fixture;
using testing::set_of;

TEST_CASE("generator") {
    const auto empty = oracle::generate(oracle::InstanceSpec{2, 2, 0, 1, 5});
    CHECK(empty.vertex_count() == 2);
    CHECK(empty.arcs().empty());
    const auto full = oracle::generate(oracle::InstanceSpec{2, 1, 1, 1, 5});
    CHECK(full.arcs().size() == 2);
    CHECK(full.arc_capacities()[0] == 1);
    CHECK(full.arc_capacities()[1] == 1);
    CHECK(oracle::generate(oracle::InstanceSpec{5, 3, 1, 2, 99}) == oracle::generate(oracle::InstanceSpec{5, 3, 1, 2, 99}));
    CHECK(full.name(Vertex{1}) == "v1");
    CHECK_THROWS_AS(oracle::generate(oracle::InstanceSpec{7, 2, 1, 2, 0}), Error);
    CHECK_THROWS_AS(oracle::generate(oracle::InstanceSpec{4, 4, 1, 2, 0}), Error);
    CHECK_THROWS_AS(oracle::generate(oracle::InstanceSpec{4, 2, 3, 2, 0}), Error);
}

TEST_CASE("brute force flows") {
    const auto six = fixture("fig6.net");
    const auto a = oracle::brute_force_flows(six, six.vertex("y"), six.vertex("z"));
    CHECK(a.max_value == 1);
    CHECK(a.maximum_flows.size() == 1);

    const auto none = Network::build({"y", "z", "a"}, {});
    const auto b = oracle::brute_force_flows(none, none.vertex("y"), none.vertex("z"));
    CHECK(b.max_value == 0);
    REQUIRE(b.maximum_flows.size() == 1);
    CHECK(b.maximum_flows[0].assignment().empty());

    const auto three = fixture("fig3.net");
    CHECK(oracle::brute_force_flows(three, three.vertex("y"), three.vertex("z")).max_value == 2);
    CHECK(max_flow_value(three, three.vertex("y"), three.vertex("z")) == 2);

    CHECK_THROWS_AS(oracle::brute_force_flows(six, six.vertex("y"), six.vertex("z"), 3), BudgetExceeded);
    CHECK(oracle::assignment_space(six) == 16);
}

TEST_CASE("brute force delta") {
    const auto six = fixture("fig6.net");
    CHECK(oracle::brute_force_delta(six, six.vertex("y"), six.vertex("z"), set_of(six, {"x1", "x2"})) == 2);
    CHECK(oracle::brute_force_delta(six, six.vertex("y"), six.vertex("z"), VertexSet{}) == 0);
    const auto one = fixture("fig1.net");
    CHECK(oracle::brute_force_delta(one, one.vertex("y"), one.vertex("z"), set_of(one, {"x"})) == 2);
}

TEST_CASE("cross check on fixtures shows the strict gaps") {
    const auto five = fixture("fig5.net");
    const auto six = fixture("fig6.net");
    std::vector<oracle::CrossCheckCase> batch{
        {"fig5", five, {set_of(five, {"x1", "x2"})}},
        {"fig6", six, {set_of(six, {"x1", "x2"})}},
    };
    const auto report = oracle::cross_check(batch);
    CHECK(report.ok());
    CHECK(report.strict_phi_lambda_gaps >= 1);
    CHECK(report.strict_lambda_delta_gaps >= 1);
    CHECK(report.text().find("std::mt19937_64") != std::string::npos);
}

TEST_CASE("cross check on a small random batch") {
    const auto batch = oracle::random_batch(40, 5, 2, 3);
    CHECK(batch.size() == 40);
    oracle::CrossCheckOptions options;
    options.random_sets_per_pair = 1;
    const auto report = oracle::cross_check(batch, options);
    CHECK(report.ok());
    CHECK(report.cases == 40);
    CHECK(report.cases_in_budget > 30);
}

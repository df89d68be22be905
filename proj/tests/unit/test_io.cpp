#include <doctest.h>

#include "flowcent/io.hpp"
#include "helpers.hpp"

using namespace flowcent;

namespace {

std::pair<ErrorKind, std::string> failure(const std::string& text) {
    try {
        parse_network(text, {}, "net.txt");
    } catch (const Error& e) {
        return {e.kind(), e.what()};
    }
    return {ErrorKind::InvariantViolation, ""};
}

}  // namespace

TEST_CASE("parse errors carry kind, file and line") {
    auto [k1, m1] = failure("vertices a b\na b 1\na b 2\n");
    CHECK(k1 == ErrorKind::DuplicateArc);
    CHECK(m1.find("net.txt:3:") != std::string::npos);

    auto [k2, m2] = failure("# c\nvertices a b\na c 1\n");
    CHECK(k2 == ErrorKind::UnknownVertex);
    CHECK(m2.find("net.txt:3:") != std::string::npos);
    CHECK(m2.find("'c'") != std::string::npos);

    CHECK(failure("vertices a b\na a 1\n").first == ErrorKind::SelfLoop);
    CHECK(failure("vertices a b\na b -1\n").first == ErrorKind::NegativeCapacity);
    CHECK(failure("vertices a b\na b 2000000000\n").first == ErrorKind::CapacityTooLarge);
    CHECK(failure("vertices a b\na b 99999999999999999999999\n").first == ErrorKind::CapacityTooLarge);
    CHECK(failure("vertices a b\na b x\n").first == ErrorKind::Parse);
    CHECK(failure("vertices a b\na b\n").first == ErrorKind::Parse);
    CHECK(failure("a b 1\n").first == ErrorKind::Parse);
    CHECK(failure("vertices a\n").first == ErrorKind::TooFewVertices);
    CHECK(failure("vertices a a\n").first == ErrorKind::DuplicateVertex);
    CHECK(failure("vertices a b.c\n").first == ErrorKind::InvalidToken);
}

TEST_CASE("capacity cap is configurable") {
    ParseOptions wide;
    wide.max_capacity = 5'000'000'000;
    const auto n = parse_network("vertices a b\na b 2000000000\n", wide);
    CHECK(n.arc_capacities()[0] == 2'000'000'000);
}

TEST_CASE("serialization is canonical") {
    const auto n = parse_network("vertices z y a\n\n# arcs\ny z 2\na y 1\ny a 0\n");
    CHECK(serialize_network(n) == "vertices a y z\na y 1\ny z 2\n");
    CHECK(parse_network(serialize_network(n)) == n);
    for (const auto& [name, body] : embedded_fixtures()) {
        if (!name.ends_with(".net")) continue;
        const auto f = parse_network(body);
        CHECK(parse_network(serialize_network(f)) == f);
    }
}

TEST_CASE("flow text") {
    const auto n = testing::fixture("fig2.net");
    const auto f = parse_flow(n, testing::fixture_text("fig2.flow"));
    CHECK(parse_flow(n, serialize_flow(n, f)) == f);
    CHECK_THROWS_AS(parse_flow(n, "flow y z 3\ny v 1\n"), Error);
    CHECK_THROWS_AS(parse_flow(n, "flow y y 0\n"), Error);
    CHECK_THROWS_AS(parse_flow(n, "flow y q 0\n"), Error);
    CHECK_THROWS_AS(parse_flow(n, "y v 1\n"), Error);
}

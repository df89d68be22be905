#include <doctest.h>

#include <sstream>

#include "flowcent/cli.hpp"
#include "flowcent/examples.hpp"

using namespace flowcent;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string fx(const std::string& name) { return std::string(FLOWCENT_FIXTURE_DIR) + "/" + name; }

bool has(const std::string& text, const std::string& part) { return text.find(part) != std::string::npos; }

}  // namespace

TEST_CASE("pair subcommand") {
    auto r = run({"pair", fx("fig1.net"), "y", "z", "--set", "x"});
    CHECK(r.code == kExitOk);
    CHECK(has(r.out, "phi_X=2 lambda_X=2"));
    CHECK(has(r.out, "delta_X=2"));

    r = run({"pair", fx("fig5.net"), "y", "z", "--set", "x1,x2", "--exact", "--witness"});
    CHECK(r.code == kExitOk);
    CHECK(has(r.out, "phi_X=1 lambda_X=2"));
    CHECK(has(r.out, "witness="));

    r = run({"pair", fx("fig1.net"), "y", "y", "--set", "x"});
    CHECK(r.code == kExitInput);
    CHECK(has(r.err, "SameEndpoints"));

    r = run({"pair", fx("fig1.net"), "y", "z", "--set", "x,nope"});
    CHECK(r.code == kExitInput);
    CHECK(has(r.err, "nope"));

    r = run({"pair", fx("missing.net"), "y", "z"});
    CHECK(r.code == kExitInput);
    CHECK(has(r.err, "missing.net"));

    r = run({"pair", fx("fig1.net"), "y", "z", "--set", "x,v", "--budget", "1"});
    CHECK(r.code == kExitBudget);

    r = run({"pair", fx("fig1.net"), "y", "z", "--dump-flow"});
    CHECK(r.code == kExitOk);
    CHECK(has(r.out, "flow y z 3\n"));
}

TEST_CASE("centrality subcommand") {
    auto r = run({"centrality", fx("fig6.net"), "--set", "x1,x2"});
    CHECK(r.code == kExitOk);
    CHECK(has(r.out, "vitality=10/1 betweenness=10/1"));

    r = run({"centrality", fx("fig1.net")});
    CHECK(r.code == kExitOk);
    for (auto v : {"{u}", "{v}", "{x}", "{y}", "{z}"}) CHECK(has(r.out, std::string("set=") + v));

    const auto serial = run({"centrality", fx("fig5.net"), "--set", "x1,x2", "--set", "y", "--explain", "--format=tsv"});
    const auto wide =
        run({"centrality", fx("fig5.net"), "--set", "x1,x2", "--set", "y", "--explain", "--format=tsv", "--jobs", "4"});
    CHECK(serial.code == kExitOk);
    CHECK(serial.out == wide.out);
    CHECK(has(serial.out, "set\tvitality_num"));

    CHECK(run({"centrality", fx("fig1.net"), "--jobs", "0"}).code == kExitInput);
}

TEST_CASE("argument errors") {
    CHECK(run({}).code == kExitInput);
    CHECK(run({"bogus"}).code == kExitInput);
    CHECK(run({"pair", fx("fig1.net"), "y"}).code == kExitInput);
    CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("examples subcommand is deterministic") {
    const auto a = run({"examples"});
    const auto b = run({"examples"});
    CHECK(a.code == kExitOk);
    CHECK(a.out == b.out);
    CHECK_FALSE(has(a.out, "FAIL"));
}

TEST_CASE("tampered fixture fails the named assertion") {
    auto fixtures = embedded_fixtures();
    auto& five = fixtures.at("fig5.net");
    const auto at = five.find("x1 z 1");
    REQUIRE(at != std::string::npos);
    five.replace(at, 6, "x1 z 0");
    const auto report = run_examples(fixtures);
    CHECK_FALSE(report.ok());
    CHECK(has(report.table(), "FAIL  fig5  phi_yz  expected=3 actual=2"));
}

TEST_CASE("selftest subcommand") {
    const auto r = run({"selftest", "--count", "20", "--seed", "4"});
    CHECK(r.code == kExitOk);
    CHECK(has(r.out, "violations 0"));
}

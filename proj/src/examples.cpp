#include "flowcent/examples.hpp"

#include <functional>
#include <sstream>

#include "fixtures_data.hpp"
#include "flowcent/centrality.hpp"
#include "flowcent/decomposition.hpp"
#include "flowcent/io.hpp"
#include "flowcent/quantities.hpp"
#include "flowcent/solvers.hpp"

namespace flowcent {

namespace {

class Runner {
public:
    explicit Runner(const FixtureSet& fixtures) : fixtures_(fixtures) {}

    // `compute` yields the actual value as text; the check passes when it
    // matches `expected` exactly.
    void check(const std::string& figure, const std::string& assertion, const std::string& expected,
               const std::function<std::string()>& compute) {
        ExampleCheck c{figure, assertion, expected, "", false};
        try {
            c.actual = compute();
            c.passed = c.actual == expected;
        } catch (const std::exception& e) {
            c.actual = std::string("error: ") + e.what();
        }
        report_.checks.push_back(std::move(c));
    }

    Network net(const std::string& name) const {
        auto it = fixtures_.find(name);
        if (it == fixtures_.end()) throw Error(ErrorKind::Parse, "missing fixture " + name);
        return parse_network(it->second, {}, name);
    }

    const std::string& text(const std::string& name) const {
        auto it = fixtures_.find(name);
        if (it == fixtures_.end()) throw Error(ErrorKind::Parse, "missing fixture " + name);
        return it->second;
    }

    ExampleReport take() { return std::move(report_); }

private:
    const FixtureSet& fixtures_;
    ExampleReport report_;
};

VertexSet set_of(const Network& n, std::initializer_list<std::string> tokens) {
    std::vector<std::string> v(tokens);
    return n.resolve(v);
}

std::string num(Capacity v) { return std::to_string(v); }

}  // namespace

bool ExampleReport::ok() const {
    for (const auto& c : checks) {
        if (!c.passed) return false;
    }
    return true;
}

std::string ExampleReport::table() const {
    std::ostringstream out;
    std::size_t passed = 0;
    for (const auto& c : checks) {
        out << (c.passed ? "PASS" : "FAIL") << "  " << c.figure << "  " << c.assertion << "  expected=" << c.expected
            << " actual=" << c.actual << "\n";
        if (c.passed) ++passed;
    }
    out << passed << "/" << checks.size() << " checks passed\n";
    return out.str();
}

FixtureSet embedded_fixtures() {
    FixtureSet out;
    for (const auto& [name, body] : detail::kEmbeddedFixtures) out.emplace(name, body);
    return out;
}

ExampleReport run_examples(const FixtureSet& fixtures) {
    Runner r(fixtures);

    r.check("fig1", "phi_yz", "3", [&] {
        auto n = r.net("fig1.net");
        return num(max_flow_value(n, n.vertex("y"), n.vertex("z")));
    });
    r.check("fig1", "maximum sequence classes", "2", [&] {
        auto n = r.net("fig1.net");
        return std::to_string(enumerate_max_sequences(n, n.vertex("y"), n.vertex("z")).size());
    });
    r.check("fig1", "lambda_yz({x}) exact", "2", [&] {
        auto n = r.net("fig1.net");
        return num(lambda_pair(n, n.vertex("y"), n.vertex("z"), set_of(n, {"x"}), LambdaMode::Exact).value);
    });
    r.check("fig1", "lambda_yz({v,x}) exact", "2", [&] {
        auto n = r.net("fig1.net");
        return num(lambda_pair(n, n.vertex("y"), n.vertex("z"), set_of(n, {"x", "v"}), LambdaMode::Exact).value);
    });
    r.check("fig1", "vitality({x}) == betweenness({x})", "true", [&] {
        auto n = r.net("fig1.net");
        auto x = set_of(n, {"x"});
        return full_flow_vitality(n, x) == full_flow_betweenness(n, x, LambdaMode::Exact) ? "true" : "false";
    });

    auto fig2_flow = [&](const Network& n) { return parse_flow(n, r.text("fig2.flow"), "fig2.flow"); };
    r.check("fig2", "stored flow validates", "true", [&] {
        auto n = r.net("fig2.net");
        auto v = validate_flow(n, fig2_flow(n));
        return v ? "false (" + v->message + ")" : std::string("true");
    });
    r.check("fig2", "v(f)", "2", [&] {
        auto n = r.net("fig2.net");
        return num(flow_value(fig2_flow(n)));
    });
    r.check("fig2", "recompose(decompose(f)) == f", "true", [&] {
        auto n = r.net("fig2.net");
        auto f = fig2_flow(n);
        return recompose(decompose(n, f)) == f ? "true" : "false";
    });
    r.check("fig2", "yvxz + yuz + vxuv == f", "true", [&] {
        auto n = r.net("fig2.net");
        auto f = fig2_flow(n);
        Decomposition d{ArcDisjointSequence(n.vertex("y"), n.vertex("z"),
                                            {parse_path(n, "y-v-x-z"), parse_path(n, "y-u-z")}),
                        {parse_cycle(n, "v-x-u-v")}};
        return recompose(d) == f ? "true" : "false";
    });
    r.check("fig2", "yvxuz + yuvxz == f", "true", [&] {
        auto n = r.net("fig2.net");
        auto f = fig2_flow(n);
        Decomposition d{ArcDisjointSequence(n.vertex("y"), n.vertex("z"),
                                            {parse_path(n, "y-v-x-u-z"), parse_path(n, "y-u-v-x-z")}),
                        {}};
        return recompose(d) == f ? "true" : "false";
    });

    r.check("fig3", "phi_yz({x})", "0", [&] {
        auto n = r.net("fig3.net");
        return num(phi_pair(n, n.vertex("y"), n.vertex("z"), set_of(n, {"x"})));
    });
    r.check("fig4", "phi_yz({x})", "1", [&] {
        auto n = r.net("fig4.net");
        return num(phi_pair(n, n.vertex("y"), n.vertex("z"), set_of(n, {"x"})));
    });

    r.check("fig5", "phi_yz", "3", [&] {
        auto n = r.net("fig5.net");
        return num(max_flow_value(n, n.vertex("y"), n.vertex("z")));
    });
    r.check("fig5", "phi_yz({x1,x2})", "1", [&] {
        auto n = r.net("fig5.net");
        return num(phi_pair(n, n.vertex("y"), n.vertex("z"), set_of(n, {"x1", "x2"})));
    });
    r.check("fig5", "lambda_yz({x1,x2}) exact", "2", [&] {
        auto n = r.net("fig5.net");
        return num(lambda_pair(n, n.vertex("y"), n.vertex("z"), set_of(n, {"x1", "x2"}), LambdaMode::Exact).value);
    });

    r.check("fig6", "lambda_yz({x1,x2}) exact", "1", [&] {
        auto n = r.net("fig6.net");
        return num(lambda_pair(n, n.vertex("y"), n.vertex("z"), set_of(n, {"x1", "x2"}), LambdaMode::Exact).value);
    });
    r.check("fig6", "delta_yz({x1,x2})", "2", [&] {
        auto n = r.net("fig6.net");
        return num(delta_pair(n, n.vertex("y"), n.vertex("z"), set_of(n, {"x1", "x2"})));
    });
    r.check("fig6", "vitality({x1,x2})", "10/1", [&] {
        auto n = r.net("fig6.net");
        return full_flow_vitality(n, set_of(n, {"x1", "x2"})).str();
    });
    r.check("fig6", "betweenness({x1,x2})", "10/1", [&] {
        auto n = r.net("fig6.net");
        return full_flow_betweenness(n, set_of(n, {"x1", "x2"}), LambdaMode::Exact).str();
    });

    return r.take();
}

}  // namespace flowcent

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "flowcent/centrality.hpp"
#include "flowcent/decomposition.hpp"
#include "flowcent/examples.hpp"
#include "flowcent/io.hpp"
#include "flowcent/oracle.hpp"
#include "flowcent/quantities.hpp"
#include "flowcent/solvers.hpp"

namespace py = pybind11;
using namespace flowcent;

namespace {

VertexSet to_set(const Network& n, const std::vector<std::string>& tokens) { return n.resolve(tokens); }

std::vector<std::string> names(const Network& n, const VertexSet& s) {
    std::vector<std::string> out;
    for (Vertex v : s) out.push_back(n.name(v));
    return out;
}

py::object fraction(const Rational& r) {
    static py::object cls = py::module_::import("fractions").attr("Fraction");
    // Python ints parse arbitrary-size decimal strings.
    return cls(py::int_(py::str(r.numerator())), py::int_(py::str(r.denominator())));
}

LambdaMode mode_of(bool exact) { return exact ? LambdaMode::Exact : LambdaMode::Auto; }

py::dict flow_dict(const Network& n, const Flow& f) {
    py::dict d;
    for (const auto& [a, v] : f.assignment()) d[py::make_tuple(n.name(a.tail), n.name(a.head))] = v;
    return d;
}

std::vector<std::string> sequence_text(const Network& n, const ArcDisjointSequence& s) {
    std::vector<std::string> out;
    for (const auto& p : s.paths()) out.push_back(format_path(n, p));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Flow-based group centrality";

    static py::exception<Error> error(m, "FlowcentError", PyExc_ValueError);
    static py::exception<BudgetExceeded> budget(m, "BudgetExceeded", error.ptr());
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const BudgetExceeded& e) {
            py::set_error(budget, e.what());
        } catch (const Error& e) {
            py::set_error(error, e.what());
        }
    });

    py::class_<Network>(m, "Network")
        .def_property_readonly("vertices",
                               [](const Network& n) {
                                   std::vector<std::string> out;
                                   for (const auto& id : n.ids()) out.push_back(id.token());
                                   return out;
                               })
        .def("capacity",
             [](const Network& n, const std::string& t, const std::string& h) {
                 return n.capacity(Arc{n.vertex(t), n.vertex(h)});
             })
        .def_property_readonly("arcs",
                               [](const Network& n) {
                                   std::vector<std::tuple<std::string, std::string, Capacity>> out;
                                   for (std::size_t i = 0; i < n.arcs().size(); ++i) {
                                       out.emplace_back(n.name(n.arcs()[i].tail), n.name(n.arcs()[i].head),
                                                        n.arc_capacities()[i]);
                                   }
                                   return out;
                               })
        .def("restrict", [](const Network& n, const std::vector<std::string>& x) { return restrict(n, to_set(n, x)); })
        .def("serialize", &serialize_network)
        .def("__eq__", [](const Network& a, const Network& b) { return a == b; })
        .def("__repr__", [](const Network& n) {
            return "<Network " + std::to_string(n.vertex_count()) + " vertices, " + std::to_string(n.arcs().size()) +
                   " arcs>";
        });

    m.def(
        "parse_network",
        [](const std::string& text, Capacity max_capacity) { return parse_network(text, ParseOptions{max_capacity}); },
        py::arg("text"), py::arg("max_capacity") = ParseOptions{}.max_capacity);
    m.def(
        "load_network",
        [](const std::string& path, Capacity max_capacity) { return load_network(path, ParseOptions{max_capacity}); },
        py::arg("path"), py::arg("max_capacity") = ParseOptions{}.max_capacity);
    m.def(
        "build_network",
        [](std::vector<std::string> vertices, const std::vector<std::tuple<std::string, std::string, Capacity>>& arcs) {
            std::vector<CapacityEntry> entries;
            for (const auto& [t, h, c] : arcs) entries.push_back(CapacityEntry{t, h, c});
            return Network::build(std::move(vertices), entries);
        },
        py::arg("vertices"), py::arg("arcs"));

    m.def(
        "max_flow",
        [](const Network& n, const std::string& y, const std::string& z) {
            const auto r = max_flow(n, n.vertex(y), n.vertex(z));
            return py::make_tuple(r.value, flow_dict(n, r.flow));
        },
        py::arg("network"), py::arg("y"), py::arg("z"));
    m.def(
        "decompose_max_flow",
        [](const Network& n, const std::string& y, const std::string& z) {
            const auto d = decompose(n, max_flow(n, n.vertex(y), n.vertex(z)).flow);
            std::vector<std::string> cycles;
            for (const auto& c : d.cycles) cycles.push_back(format_path(n, c.vertices()));
            return py::make_tuple(sequence_text(n, d.paths), cycles);
        },
        py::arg("network"), py::arg("y"), py::arg("z"));
    m.def(
        "max_sequences",
        [](const Network& n, const std::string& y, const std::string& z, std::uint64_t budget) {
            std::vector<std::vector<std::string>> out;
            for (const auto& s : enumerate_max_sequences(n, n.vertex(y), n.vertex(z), budget)) {
                out.push_back(sequence_text(n, s));
            }
            return out;
        },
        py::arg("network"), py::arg("y"), py::arg("z"), py::arg("budget") = kDefaultEnumerationBudget);

    m.def(
        "phi",
        [](const Network& n, const std::string& y, const std::string& z, const std::vector<std::string>& x) {
            return phi_pair(n, n.vertex(y), n.vertex(z), to_set(n, x));
        },
        py::arg("network"), py::arg("y"), py::arg("z"), py::arg("X"));
    m.def(
        "lambda_",
        [](const Network& n, const std::string& y, const std::string& z, const std::vector<std::string>& x, bool exact,
           std::uint64_t budget) {
            return lambda_pair(n, n.vertex(y), n.vertex(z), to_set(n, x), mode_of(exact), budget).value;
        },
        py::arg("network"), py::arg("y"), py::arg("z"), py::arg("X"), py::arg("exact") = false,
        py::arg("budget") = kDefaultEnumerationBudget);
    m.def(
        "delta",
        [](const Network& n, const std::string& y, const std::string& z, const std::vector<std::string>& x) {
            return delta_pair(n, n.vertex(y), n.vertex(z), to_set(n, x));
        },
        py::arg("network"), py::arg("y"), py::arg("z"), py::arg("X"));
    m.def(
        "pair_report",
        [](const Network& n, const std::string& y, const std::string& z, const std::vector<std::string>& x, bool exact,
           std::uint64_t budget) {
            const auto q = pair_report(n, n.vertex(y), n.vertex(z), to_set(n, x), PairOptions{mode_of(exact), budget});
            py::dict d;
            d["y"] = y;
            d["z"] = z;
            d["X"] = names(n, q.set);
            d["phi_total"] = q.phi_total;
            d["phi_restricted"] = q.phi_restricted;
            d["phi_X"] = q.phi_set;
            d["lambda_X"] = q.lambda_set;
            d["lambda_exact"] = q.lambda_exact;
            d["delta_X"] = q.delta_set;
            d["witness"] = q.witness ? py::cast(sequence_text(n, *q.witness)) : py::none();
            return d;
        },
        py::arg("network"), py::arg("y"), py::arg("z"), py::arg("X"), py::arg("exact") = false,
        py::arg("budget") = kDefaultEnumerationBudget);

    m.def(
        "vitality",
        [](const Network& n, const std::vector<std::string>& x, unsigned jobs) {
            return fraction(full_flow_vitality(n, to_set(n, x), jobs));
        },
        py::arg("network"), py::arg("X"), py::arg("jobs") = 1);
    m.def(
        "betweenness",
        [](const Network& n, const std::vector<std::string>& x, bool exact, unsigned jobs) {
            return fraction(full_flow_betweenness(n, to_set(n, x), mode_of(exact), kDefaultEnumerationBudget, jobs));
        },
        py::arg("network"), py::arg("X"), py::arg("exact") = false, py::arg("jobs") = 1);

    m.def("run_examples", [](std::optional<std::map<std::string, std::string>> fixtures) {
        const auto report = run_examples(fixtures ? *fixtures : embedded_fixtures());
        return py::make_tuple(report.ok(), report.table());
    }, py::arg("fixtures") = py::none());
    m.def("embedded_fixtures", &embedded_fixtures);
    m.def(
        "selftest",
        [](std::size_t count, std::uint64_t seed) {
            const auto report = oracle::cross_check(oracle::random_batch(count, 5, 2, seed));
            return py::make_tuple(report.ok(), report.text());
        },
        py::arg("count") = 50, py::arg("seed") = 1);
}

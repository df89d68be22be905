#include "flowcent/oracle.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <random>
#include <sstream>

#include "flowcent/decomposition.hpp"
#include "flowcent/io.hpp"
#include "flowcent/path.hpp"
#include "flowcent/quantities.hpp"
#include "flowcent/solvers.hpp"

namespace flowcent::oracle {

namespace {

void check_spec(const InstanceSpec& spec) {
    if (spec.vertex_count < 2 || spec.vertex_count > 6) {
        throw Error(ErrorKind::InvalidSpec, "vertex_count must be in 2..6, got " + std::to_string(spec.vertex_count));
    }
    if (spec.max_capacity < 0 || spec.max_capacity > 3) {
        throw Error(ErrorKind::InvalidSpec, "max_capacity must be in 0..3, got " + std::to_string(spec.max_capacity));
    }
    if (spec.arc_probability_den == 0 || spec.arc_probability_num > spec.arc_probability_den) {
        throw Error(ErrorKind::InvalidSpec, "arc probability must be a fraction in [0, 1]");
    }
}

// Depth-first over arcs in canonical order; a non-terminal vertex is checked
// for conservation as soon as its last incident arc is assigned.
class FlowEnumerator {
public:
    FlowEnumerator(const Network& network, Vertex source, Vertex sink)
        : net_(network), source_(source), sink_(sink), value_(network.arcs().size(), 0),
          balance_(network.vertex_count(), 0), last_arc_(network.vertex_count(), SIZE_MAX) {
        const auto arcs = network.arcs();
        for (std::size_t i = 0; i < arcs.size(); ++i) {
            last_arc_[arcs[i].tail.index] = i;
            last_arc_[arcs[i].head.index] = i;
        }
        for (std::size_t i = 0; i < arcs.size(); ++i) closes_.emplace_back();
        for (std::uint32_t v = 0; v < network.vertex_count(); ++v) {
            if (Vertex{v} == source || Vertex{v} == sink) continue;
            if (last_arc_[v] == SIZE_MAX) continue;
            closes_[last_arc_[v]].push_back(Vertex{v});
        }
    }

    BruteForceFlows run() {
        dfs(0);
        return std::move(result_);
    }

private:
    void dfs(std::size_t i) {
        const auto arcs = net_.arcs();
        if (i == arcs.size()) {
            record();
            return;
        }
        const Arc a = arcs[i];
        for (Capacity x = 0; x <= net_.arc_capacities()[i]; ++x) {
            value_[i] = x;
            balance_[a.tail.index] -= x;
            balance_[a.head.index] += x;
            const bool ok = std::all_of(closes_[i].begin(), closes_[i].end(),
                                        [&](Vertex v) { return balance_[v.index] == 0; });
            if (ok) dfs(i + 1);
            balance_[a.tail.index] += x;
            balance_[a.head.index] -= x;
        }
        value_[i] = 0;
    }

    void record() {
        const Capacity v = -balance_[source_.index];
        if (!have_ || v > result_.max_value) {
            have_ = true;
            result_.max_value = v;
            result_.maximum_flows.clear();
        }
        if (v == result_.max_value) {
            std::map<Arc, Capacity> assignment;
            for (std::size_t i = 0; i < value_.size(); ++i) {
                if (value_[i] > 0) assignment.emplace(net_.arcs()[i], value_[i]);
            }
            result_.maximum_flows.emplace_back(source_, sink_, assignment);
        }
    }

    const Network& net_;
    Vertex source_;
    Vertex sink_;
    std::vector<Capacity> value_;
    std::vector<Capacity> balance_;
    std::vector<std::size_t> last_arc_;
    std::vector<std::vector<Vertex>> closes_;
    bool have_ = false;
    BruteForceFlows result_;
};

// Random residual step list from `from`; empty if stuck.
struct Step {
    Arc arc;
    Vertex to;
    bool forward;
};

std::vector<Step> residual_steps(const Network& network, const Flow& flow, Vertex u) {
    std::vector<Step> out;
    for (std::size_t idx : network.out_arcs(u)) {
        const Arc a = network.arcs()[idx];
        if (flow.at(a) < network.arc_capacities()[idx]) out.push_back(Step{a, a.head, true});
    }
    for (std::size_t idx : network.in_arcs(u)) {
        const Arc a = network.arcs()[idx];
        if (flow.at(a) > 0) out.push_back(Step{a, a.tail, false});
    }
    return out;
}

std::optional<GeneralizedPath> random_augmenting_path(const Network& network, const Flow& flow,
                                                      std::mt19937_64& rng) {
    std::vector<bool> visited(network.vertex_count(), false);
    std::vector<Vertex> vertices{flow.source()};
    std::vector<Direction> directions;
    visited[flow.source().index] = true;
    auto dfs = [&](auto&& self, Vertex u) -> bool {
        if (u == flow.sink()) return true;
        auto steps = residual_steps(network, flow, u);
        std::shuffle(steps.begin(), steps.end(), rng);
        for (const auto& s : steps) {
            if (visited[s.to.index]) continue;
            visited[s.to.index] = true;
            vertices.push_back(s.to);
            directions.push_back(s.forward ? Direction::Forward : Direction::Backward);
            if (self(self, s.to)) return true;
            vertices.pop_back();
            directions.pop_back();
        }
        return false;
    };
    if (!dfs(dfs, flow.source())) return std::nullopt;
    return GeneralizedPath(std::move(vertices), std::move(directions));
}

std::string describe(const CrossCheckCase& c, Vertex y, Vertex z, const VertexSet* set) {
    std::ostringstream out;
    out << c.label << " pair (" << c.network.name(y) << "," << c.network.name(z) << ")";
    if (set) out << " X=" << format_set(c.network, *set);
    out << "\n" << serialize_network(c.network);
    return out.str();
}

}  // namespace

Network generate(const InstanceSpec& spec) {
    check_spec(spec);
    std::mt19937_64 rng(spec.seed);
    std::vector<VertexId> names;
    for (std::uint32_t i = 0; i < spec.vertex_count; ++i) names.emplace_back("v" + std::to_string(i));
    std::vector<std::pair<Arc, Capacity>> entries;
    std::uniform_int_distribution<std::uint32_t> coin(0, spec.arc_probability_den - 1);
    for (std::uint32_t t = 0; t < spec.vertex_count; ++t) {
        for (std::uint32_t h = 0; h < spec.vertex_count; ++h) {
            if (t == h) continue;
            const bool present = coin(rng) < spec.arc_probability_num;
            if (!present || spec.max_capacity == 0) continue;
            std::uniform_int_distribution<Capacity> cap(1, spec.max_capacity);
            entries.emplace_back(Arc{Vertex{t}, Vertex{h}}, cap(rng));
        }
    }
    return Network::from_sorted(std::move(names), entries);
}

std::uint64_t assignment_space(const Network& network) {
    std::uint64_t total = 1;
    for (Capacity c : network.arc_capacities()) {
        const auto factor = static_cast<std::uint64_t>(c) + 1;
        if (total > std::numeric_limits<std::uint64_t>::max() / factor) return std::numeric_limits<std::uint64_t>::max();
        total *= factor;
    }
    return total;
}

BruteForceFlows brute_force_flows(const Network& network, Vertex source, Vertex sink, std::uint64_t budget) {
    network.require(source);
    network.require(sink);
    if (source == sink) throw Error(ErrorKind::SameEndpoints, "source and sink coincide");
    const auto space = assignment_space(network);
    if (space > budget) throw BudgetExceeded("brute-force flow enumeration", budget, space);
    return FlowEnumerator(network, source, sink).run();
}

Capacity brute_force_delta(const Network& network, Vertex source, Vertex sink, const VertexSet& set,
                           std::uint64_t budget) {
    network.require(set);
    const auto all = brute_force_flows(network, source, sink, budget);
    Capacity best = std::numeric_limits<Capacity>::max();
    for (const auto& f : all.maximum_flows) best = std::min(best, flow_through(network, f, set));
    return best;
}

Flow random_flow(const Network& network, Vertex source, Vertex sink, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Flow flow(source, sink);
    const Capacity phi = max_flow_value(network, source, sink);
    std::uniform_int_distribution<Capacity> steps(0, phi);
    for (Capacity k = steps(rng); k > 0; --k) {
        auto path = random_augmenting_path(network, flow, rng);
        if (!path) break;
        flow = augment(network, flow, *path);
    }
    // A few unit pushes around residual cycles: value unchanged, cycles likely in the support.
    std::uniform_int_distribution<int> pushes(0, 3);
    std::uniform_int_distribution<std::uint32_t> pick_vertex(0, static_cast<std::uint32_t>(network.vertex_count() - 1));
    for (int p = pushes(rng); p > 0; --p) {
        Vertex u{pick_vertex(rng)};
        std::vector<Step> walk;
        std::vector<std::size_t> position(network.vertex_count(), SIZE_MAX);
        position[u.index] = 0;
        std::vector<Vertex> at{u};
        while (true) {
            auto options = residual_steps(network, flow, u);
            if (options.empty()) break;
            std::uniform_int_distribution<std::size_t> choose(0, options.size() - 1);
            const Step s = options[choose(rng)];
            walk.push_back(s);
            if (position[s.to.index] != SIZE_MAX) {
                ArcFunction delta;
                for (std::size_t i = position[s.to.index]; i < walk.size(); ++i) {
                    delta[walk[i].arc] += walk[i].forward ? 1 : -1;
                }
                // A residual cycle may use an arc twice in opposite roles; keep only valid pushes.
                try {
                    Flow next = flow.plus(delta);
                    if (!validate_flow(network, next)) flow = std::move(next);
                } catch (const Error&) {
                }
                break;
            }
            position[s.to.index] = at.size();
            at.push_back(s.to);
            u = s.to;
        }
    }
    return flow;
}

std::vector<CrossCheckCase> random_batch(std::size_t count, std::uint32_t max_vertices, Capacity max_capacity,
                                         std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> size(2, max_vertices);
    std::uniform_int_distribution<std::uint32_t> density(1, 3);  // 1/4, 2/4, 3/4
    std::vector<CrossCheckCase> batch;
    for (std::size_t i = 0; i < count; ++i) {
        InstanceSpec spec;
        spec.vertex_count = size(rng);
        spec.max_capacity = max_capacity;
        spec.arc_probability_num = density(rng);
        spec.arc_probability_den = 4;
        spec.seed = rng();
        batch.push_back(CrossCheckCase{"instance " + std::to_string(i) + " seed " + std::to_string(spec.seed),
                                       generate(spec), {}});
    }
    return batch;
}

std::string CrossCheckReport::text() const {
    std::ostringstream out;
    out << "generator " << kGeneratorName << "\n";
    out << "cases " << cases << " in_budget " << cases_in_budget << " checks " << checks << "\n";
    out << "strict_gaps phi<lambda " << strict_phi_lambda_gaps << " lambda<delta " << strict_lambda_delta_gaps << "\n";
    out << "violations " << violations.size() << "\n";
    if (!violations.empty()) out << "first counterexample:\n" << violations.front();
    return out.str();
}

CrossCheckReport cross_check(std::span<const CrossCheckCase> batch, const CrossCheckOptions& options) {
    CrossCheckReport report;
    std::mt19937_64 rng(options.seed);
    for (const auto& c : batch) {
        ++report.cases;
        const Network& net = c.network;
        const bool in_budget = assignment_space(net) <= options.flow_budget;
        if (in_budget) ++report.cases_in_budget;
        auto fail = [&](const std::string& what, Vertex y, Vertex z, const VertexSet* set) {
            report.violations.push_back(what + " at " + describe(c, y, z, set));
        };

        const auto n = static_cast<std::uint32_t>(net.vertex_count());
        for (std::uint32_t yi = 0; yi < n; ++yi) {
            for (std::uint32_t zi = 0; zi < n; ++zi) {
                if (yi == zi) continue;
                const Vertex y{yi};
                const Vertex z{zi};
                const auto solved = max_flow(net, y, z);
                std::optional<BruteForceFlows> brute;
                if (in_budget) brute = brute_force_flows(net, y, z, options.flow_budget);

                ++report.checks;
                if (brute && brute->max_value != solved.value) {
                    fail("max flow " + std::to_string(solved.value) + " != oracle " + std::to_string(brute->max_value), y, z, nullptr);
                }
                if (validate_flow(net, solved.flow)) fail("solver max flow does not validate", y, z, nullptr);
                if (brute) {
                    for (const auto& f : brute->maximum_flows) {
                        if (validate_flow(net, f)) fail("oracle flow does not validate", y, z, nullptr);
                    }
                }
                ++report.checks;
                const auto d = decompose(net, solved.flow);
                if (recompose(d) != solved.flow || d.paths.length() != static_cast<std::size_t>(solved.value) ||
                    !is_arc_disjoint(net, d.paths.paths())) {
                    fail("decomposition round trip", y, z, nullptr);
                }

                std::vector<VertexSet> sets = c.sets;
                if (options.singletons) {
                    for (std::uint32_t x = 0; x < n; ++x) sets.push_back(VertexSet::singleton(Vertex{x}));
                }
                for (std::size_t k = 0; k < options.random_sets_per_pair; ++k) {
                    std::vector<Vertex> members;
                    for (std::uint32_t x = 0; x < n; ++x) {
                        if (rng() & 1U) members.push_back(Vertex{x});
                    }
                    sets.emplace_back(std::move(members));
                }

                for (const auto& set : sets) {
                    ++report.checks;
                    const Capacity phi_x = phi_pair(net, y, z, set);
                    const Capacity lambda_x = lambda_pair(net, y, z, set, LambdaMode::Exact, options.enumeration_budget).value;
                    const Capacity delta_x = delta_pair(net, y, z, set);
                    if (brute) {
                        Capacity oracle_delta = std::numeric_limits<Capacity>::max();
                        for (const auto& f : brute->maximum_flows) oracle_delta = std::min(oracle_delta, flow_through(net, f, set));
                        if (oracle_delta != delta_x) {
                            fail("delta " + std::to_string(delta_x) + " != oracle " + std::to_string(oracle_delta), y, z, &set);
                        }
                    }
                    if (!(0 <= phi_x && phi_x <= lambda_x && lambda_x <= std::min(delta_x, solved.value))) {
                        fail("inequality chain phi_X=" + std::to_string(phi_x) + " lambda_X=" + std::to_string(lambda_x) +
                                 " delta_X=" + std::to_string(delta_x) + " phi=" + std::to_string(solved.value),
                             y, z, &set);
                    }
                    if (set.size() == 1 && !(lambda_x == phi_x && phi_x == delta_x)) {
                        fail("singleton identity phi_X=" + std::to_string(phi_x) + " lambda_X=" + std::to_string(lambda_x) +
                                 " delta_X=" + std::to_string(delta_x),
                             y, z, &set);
                    }
                    if (phi_x < lambda_x) ++report.strict_phi_lambda_gaps;
                    if (lambda_x < delta_x) ++report.strict_lambda_delta_gaps;
                }
            }
        }
    }
    return report;
}

}  // namespace flowcent::oracle

#include "flowcent/centrality.hpp"

#include "flowcent/solvers.hpp"
#include "parallel.hpp"

namespace flowcent {

namespace {

struct PairFlow {
    Vertex source;
    Vertex sink;
    Capacity phi = 0;
};

std::vector<PairFlow> positive_pairs(const Network& network, unsigned jobs) {
    std::vector<PairFlow> pairs;
    const auto n = static_cast<std::uint32_t>(network.vertex_count());
    for (std::uint32_t y = 0; y < n; ++y) {
        for (std::uint32_t z = 0; z < n; ++z) {
            if (y != z) pairs.push_back(PairFlow{Vertex{y}, Vertex{z}});
        }
    }
    detail::parallel_for(pairs.size(), jobs, [&](std::size_t i) {
        pairs[i].phi = max_flow_value(network, pairs[i].source, pairs[i].sink);
    });
    std::erase_if(pairs, [](const PairFlow& p) { return p.phi == 0; });
    return pairs;
}

CentralityReport report_for(const Network& network, const std::vector<PairFlow>& pairs, const VertexSet& set,
                            const CentralityOptions& options) {
    network.require(set);
    if (options.mode == LambdaMode::SingletonShortcut && set.size() >= 2) {
        throw Error(ErrorKind::ShortcutInvalid, "singleton shortcut requested for " + format_set(network, set));
    }
    const bool exact = options.mode == LambdaMode::Exact || (options.mode == LambdaMode::Auto && set.size() >= 2);
    const Network restricted = restrict(network, set);

    std::vector<PairTerm> terms(pairs.size());
    detail::parallel_for(pairs.size(), options.jobs, [&](std::size_t i) {
        const auto& p = pairs[i];
        PairTerm& t = terms[i];
        t.source = p.source;
        t.sink = p.sink;
        t.phi_total = p.phi;
        t.phi_set = set.empty() ? 0 : p.phi - max_flow_value(restricted, p.source, p.sink);
        if (options.betweenness) {
            t.lambda_set = exact ? lambda_pair(network, p.source, p.sink, set, LambdaMode::Exact, options.budget).value
                                 : t.phi_set;
        }
    });

    CentralityReport report{set, Rational(0), std::nullopt, {}};
    if (options.betweenness) report.betweenness = Rational(0);
    // Exact accumulation in pair order; the sum is order-independent anyway.
    for (const auto& t : terms) {
        report.vitality += Rational(t.phi_set, t.phi_total);
        if (report.betweenness) *report.betweenness += Rational(*t.lambda_set, t.phi_total);
    }
    if (report.betweenness && report.vitality > *report.betweenness) {
        throw Error(ErrorKind::InvariantViolation, "vitality " + report.vitality.str() + " exceeds betweenness " +
                                                       report.betweenness->str() + " for " +
                                                       format_set(network, set));
    }
    if (options.explain) report.terms = std::move(terms);
    return report;
}

}  // namespace

Rational full_flow_vitality(const Network& network, const VertexSet& set, unsigned jobs) {
    CentralityOptions options;
    options.jobs = jobs;
    options.betweenness = false;
    return report_for(network, positive_pairs(network, jobs), set, options).vitality;
}

Rational full_flow_betweenness(const Network& network, const VertexSet& set, LambdaMode mode,
                               std::uint64_t budget, unsigned jobs) {
    CentralityOptions options;
    options.mode = mode;
    options.budget = budget;
    options.jobs = jobs;
    return *report_for(network, positive_pairs(network, jobs), set, options).betweenness;
}

std::vector<CentralityReport> centrality_report(const Network& network, std::span<const VertexSet> sets,
                                                const CentralityOptions& options) {
    std::vector<CentralityReport> reports;
    if (sets.empty()) return reports;
    const auto pairs = positive_pairs(network, options.jobs);
    for (const auto& set : sets) reports.push_back(report_for(network, pairs, set, options));
    return reports;
}

}  // namespace flowcent

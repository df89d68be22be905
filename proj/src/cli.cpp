#include "flowcent/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <sstream>

#include "flowcent/centrality.hpp"
#include "flowcent/examples.hpp"
#include "flowcent/io.hpp"
#include "flowcent/oracle.hpp"
#include "flowcent/quantities.hpp"
#include "flowcent/solvers.hpp"

namespace flowcent {

namespace {

VertexSet parse_set(const Network& network, const std::string& spec) {
    std::vector<std::string> tokens;
    std::stringstream in(spec);
    std::string token;
    while (std::getline(in, token, ',')) {
        if (token.empty()) throw Error(ErrorKind::Parse, "empty vertex token in set '" + spec + "'");
        tokens.push_back(token);
    }
    return network.resolve(tokens);
}

std::string opt(const std::optional<Capacity>& v) { return v ? std::to_string(*v) : "-"; }

struct PairArgs {
    std::string file;
    std::string source;
    std::string sink;
    std::string set;
    bool exact = false;
    bool witness = false;
    bool dump_flow = false;
    std::string format = "text";
    std::uint64_t budget = kDefaultEnumerationBudget;
    Capacity max_capacity = ParseOptions{}.max_capacity;
};

int cmd_pair(const PairArgs& a, std::ostream& out) {
    const Network network = load_network(a.file, ParseOptions{a.max_capacity});
    const Vertex y = network.vertex(a.source);
    const Vertex z = network.vertex(a.sink);
    if (y == z) throw Error(ErrorKind::SameEndpoints, "source and sink are both '" + a.source + "'");
    const VertexSet set = parse_set(network, a.set);

    PairOptions options;
    options.mode = a.exact || a.witness ? LambdaMode::Exact : LambdaMode::Auto;
    options.budget = a.budget;
    const PairQuantities q = pair_report(network, y, z, set, options);
    const std::string witness = q.witness ? format_sequence(network, *q.witness) : "-";

    if (a.format == "tsv") {
        out << "y\tz\tX\tphi_total\tphi_restricted\tphi_X\tlambda_X\tlambda_exact\tdelta_X";
        if (a.witness) out << "\twitness";
        out << "\n";
        out << a.source << "\t" << a.sink << "\t" << format_set(network, set) << "\t" << q.phi_total << "\t"
            << q.phi_restricted << "\t" << q.phi_set << "\t" << opt(q.lambda_set) << "\t"
            << (q.lambda_exact ? "exact" : "shortcut") << "\t" << opt(q.delta_set);
        if (a.witness) out << "\t" << witness;
        out << "\n";
    } else {
        out << "y=" << a.source << " z=" << a.sink << " X=" << format_set(network, set) << " phi_total=" << q.phi_total
            << " phi_restricted=" << q.phi_restricted << " phi_X=" << q.phi_set << " lambda_X=" << opt(q.lambda_set)
            << " lambda_mode=" << (q.lambda_exact ? "exact" : "shortcut") << " delta_X=" << opt(q.delta_set) << "\n";
        if (a.witness) out << "witness=" << witness << "\n";
    }
    if (a.dump_flow) out << serialize_flow(network, max_flow(network, y, z).flow);
    return kExitOk;
}

struct CentralityArgs {
    std::string file;
    std::vector<std::string> sets;
    bool exact = false;
    bool explain = false;
    unsigned jobs = 1;
    std::string format = "text";
    std::uint64_t budget = kDefaultEnumerationBudget;
    Capacity max_capacity = ParseOptions{}.max_capacity;
};

int cmd_centrality(const CentralityArgs& a, std::ostream& out) {
    const Network network = load_network(a.file, ParseOptions{a.max_capacity});
    std::vector<VertexSet> sets;
    for (const auto& s : a.sets) sets.push_back(parse_set(network, s));
    if (sets.empty()) {
        for (Vertex v : network.all_vertices()) sets.push_back(VertexSet::singleton(v));
    }
    CentralityOptions options;
    options.mode = a.exact ? LambdaMode::Exact : LambdaMode::Auto;
    options.budget = a.budget;
    options.jobs = a.jobs;
    options.explain = a.explain;
    const auto reports = centrality_report(network, sets, options);

    const bool tsv = a.format == "tsv";
    if (tsv) {
        out << "set\tvitality_num\tvitality_den\tbetweenness_num\tbetweenness_den\tvitality_dec\tbetweenness_dec\n";
    }
    for (const auto& r : reports) {
        const Rational& b = *r.betweenness;
        if (tsv) {
            out << format_set(network, r.set) << "\t" << r.vitality.numerator() << "\t" << r.vitality.denominator()
                << "\t" << b.numerator() << "\t" << b.denominator() << "\t" << r.vitality.decimal() << "\t"
                << b.decimal() << "\n";
        } else {
            out << "set=" << format_set(network, r.set) << " vitality=" << r.vitality.str()
                << " betweenness=" << b.str() << " vitality_dec=" << r.vitality.decimal()
                << " betweenness_dec=" << b.decimal() << "\n";
        }
        for (const auto& t : r.terms) {
            out << (tsv ? "#term\t" : "  term ") << network.name(t.source) << (tsv ? "\t" : " ")
                << network.name(t.sink) << (tsv ? "\t" : " phi=") << t.phi_total << (tsv ? "\t" : " phi_X=")
                << t.phi_set << (tsv ? "\t" : " lambda_X=") << opt(t.lambda_set) << "\n";
        }
    }
    return kExitOk;
}

int cmd_examples(std::ostream& out) {
    const auto report = run_examples(embedded_fixtures());
    out << report.table();
    return report.ok() ? kExitOk : kExitInvariant;
}

struct SelftestArgs {
    std::size_t count = 500;
    std::uint32_t max_vertices = 5;
    Capacity max_capacity = 2;
    std::uint64_t seed = 1;
    std::size_t random_sets = 2;
};

int cmd_selftest(const SelftestArgs& a, std::ostream& out) {
    if (a.max_vertices < 2 || a.max_vertices > 6) throw Error(ErrorKind::InvalidSpec, "--max-vertices must be in 2..6");
    const auto batch = oracle::random_batch(a.count, a.max_vertices, a.max_capacity, a.seed);
    oracle::CrossCheckOptions options;
    options.seed = a.seed;
    options.random_sets_per_pair = a.random_sets;
    const auto report = oracle::cross_check(batch, options);
    out << "seed " << a.seed << "\n" << report.text();
    return report.ok() ? kExitOk : kExitInvariant;
}

int exit_code_for(const Error& e) {
    switch (e.kind()) {
        case ErrorKind::BudgetExceeded:
            return kExitBudget;
        case ErrorKind::InvariantViolation:
            return kExitInvariant;
        default:
            return kExitInput;
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Flow-based group centrality", "flowcent"};
    app.require_subcommand(1, 1);

    PairArgs pair;
    auto* pair_cmd = app.add_subcommand("pair", "phi, lambda and delta for one source, sink and vertex set");
    pair_cmd->add_option("file", pair.file, "network file")->required();
    pair_cmd->add_option("y", pair.source, "source vertex")->required();
    pair_cmd->add_option("z", pair.sink, "sink vertex")->required();
    pair_cmd->add_option("--set", pair.set, "comma-separated vertex set (default: empty)");
    pair_cmd->add_flag("--exact,--force-exact", pair.exact, "enumerate maximum sequences even for singletons");
    pair_cmd->add_flag("--witness", pair.witness, "print the least sequence attaining lambda (implies --exact)");
    pair_cmd->add_flag("--dump-flow", pair.dump_flow, "print the maximum flow found by the solver");
    pair_cmd->add_option("--format", pair.format)->check(CLI::IsMember({"text", "tsv"}));
    pair_cmd->add_option("--budget", pair.budget, "search-node budget for exact lambda")->check(CLI::PositiveNumber);
    pair_cmd->add_option("--max-capacity", pair.max_capacity)->check(CLI::NonNegativeNumber);

    CentralityArgs cent;
    auto* cent_cmd = app.add_subcommand("centrality", "full flow vitality and betweenness per vertex set");
    cent_cmd->add_option("file", cent.file, "network file")->required();
    cent_cmd->add_option("--set", cent.sets, "comma-separated vertex set; repeatable (default: every singleton)")
        ->allow_extra_args(false);
    cent_cmd->add_flag("--exact,--force-exact", cent.exact, "exact lambda for singletons too");
    cent_cmd->add_flag("--explain", cent.explain, "print every pair term");
    cent_cmd->add_option("--jobs", cent.jobs, "worker threads")->check(CLI::Range(1U, 256U));
    cent_cmd->add_option("--format", cent.format)->check(CLI::IsMember({"text", "tsv"}));
    cent_cmd->add_option("--budget", cent.budget, "search-node budget for exact lambda")->check(CLI::PositiveNumber);
    cent_cmd->add_option("--max-capacity", cent.max_capacity)->check(CLI::NonNegativeNumber);

    auto* examples_cmd = app.add_subcommand("examples", "check the bundled figure fixtures");

    SelftestArgs self;
    auto* self_cmd = app.add_subcommand("selftest", "cross-check solvers against brute force on random networks");
    self_cmd->add_option("--count", self.count, "number of random networks");
    self_cmd->add_option("--max-vertices", self.max_vertices);
    self_cmd->add_option("--max-capacity", self.max_capacity)->check(CLI::Range(Capacity{0}, Capacity{3}));
    self_cmd->add_option("--seed", self.seed);
    self_cmd->add_option("--random-sets", self.random_sets, "random vertex sets per pair");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    }

    try {
        if (pair_cmd->parsed()) return cmd_pair(pair, out);
        if (cent_cmd->parsed()) return cmd_centrality(cent, out);
        if (examples_cmd->parsed()) return cmd_examples(out);
        if (self_cmd->parsed()) return cmd_selftest(self, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
    return kExitInput;
}

}  // namespace flowcent

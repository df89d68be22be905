#include "flowcent/quantities.hpp"

#include <algorithm>
#include <limits>

#include "flowcent/solvers.hpp"
#include "residual.hpp"

namespace flowcent {

namespace {

void check_pair(const Network& network, Vertex source, Vertex sink, const VertexSet& set) {
    network.require(source);
    network.require(sink);
    network.require(set);
    if (source == sink) {
        throw Error(ErrorKind::SameEndpoints, "source and sink are both '" + network.name(source) + "'");
    }
}

class PathLister {
public:
    PathLister(const Network& network, Vertex sink, std::uint64_t budget)
        : net_(network), sink_(sink), budget_(budget), on_path_(network.vertex_count(), false) {}

    std::vector<Path> run(Vertex source) {
        stack_ = {source};
        on_path_[source.index] = true;
        dfs(source);
        return std::move(found_);
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    void dfs(Vertex u) {
        if (++nodes_ > budget_) {
            throw BudgetExceeded("simple path enumeration", budget_, nodes_, found_.size());
        }
        if (u == sink_) {
            found_.emplace_back(stack_);
            return;
        }
        for (std::size_t idx : net_.out_arcs(u)) {
            Vertex w = net_.arcs()[idx].head;
            if (on_path_[w.index]) continue;
            on_path_[w.index] = true;
            stack_.push_back(w);
            dfs(w);
            stack_.pop_back();
            on_path_[w.index] = false;
        }
    }

    const Network& net_;
    Vertex sink_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<bool> on_path_;
    std::vector<Vertex> stack_;
    std::vector<Path> found_;
};

// Backtracking over non-decreasing path indices, so each multiset of paths
// (one equivalence class) is reached once and in lexicographic order.
class SequenceSearch {
public:
    // `enter(i)` may veto adding path i; `leaf()` returns false to stop.
    struct Hooks {
        std::function<bool(std::size_t)> enter;
        std::function<void(std::size_t)> leave;
        std::function<bool()> prune;
        std::function<bool(std::span<const std::size_t>)> leaf;
    };

    SequenceSearch(const Network& network, Vertex source, Vertex sink, std::uint64_t budget)
        : net_(network), source_(source), sink_(sink), budget_(budget),
          residual_(network.arc_capacities().begin(), network.arc_capacities().end()) {
        PathLister lister(network, sink, budget);
        paths_ = lister.run(source);
        nodes_ = lister.nodes();
        for (const auto& p : paths_) {
            std::vector<std::size_t> ids;
            for (const Arc& a : p.arcs()) ids.push_back(*network.arc_index(a));
            path_arcs_.push_back(std::move(ids));
        }
        target_ = static_cast<std::size_t>(max_flow_value(network, source, sink));
    }

    std::size_t target() const { return target_; }
    const std::vector<Path>& paths() const { return paths_; }
    std::span<const Capacity> residual() const { return residual_; }
    std::size_t chosen_count() const { return chosen_.size(); }
    std::uint64_t leaves() const { return leaves_; }

    void run(const Hooks& hooks) {
        hooks_ = &hooks;
        step(0);
    }

    ArcDisjointSequence sequence(std::span<const std::size_t> chosen) const {
        std::vector<Path> ps;
        for (std::size_t i : chosen) ps.push_back(paths_[i]);
        return ArcDisjointSequence(source_, sink_, std::move(ps));
    }

private:
    bool fits(std::size_t i) const {
        return std::all_of(path_arcs_[i].begin(), path_arcs_[i].end(),
                           [&](std::size_t a) { return residual_[a] > 0; });
    }

    bool step(std::size_t start) {
        if (++nodes_ > budget_) throw BudgetExceeded("sequence enumeration", budget_, nodes_, leaves_);
        if (chosen_.size() == target_) {
            ++leaves_;
            return hooks_->leaf(chosen_);
        }
        const auto needed = static_cast<Capacity>(target_ - chosen_.size());
        if (detail::max_flow_value_with(net_, residual_, source_, sink_) < needed) return true;
        if (hooks_->prune && hooks_->prune()) return true;
        for (std::size_t i = start; i < paths_.size(); ++i) {
            if (!fits(i)) continue;
            if (hooks_->enter && !hooks_->enter(i)) continue;
            for (std::size_t a : path_arcs_[i]) --residual_[a];
            chosen_.push_back(i);
            const bool keep_going = step(i);
            chosen_.pop_back();
            for (std::size_t a : path_arcs_[i]) ++residual_[a];
            if (hooks_->leave) hooks_->leave(i);
            if (!keep_going) return false;
        }
        return true;
    }

    const Network& net_;
    Vertex source_;
    Vertex sink_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::uint64_t leaves_ = 0;
    std::vector<Capacity> residual_;
    std::vector<Path> paths_;
    std::vector<std::vector<std::size_t>> path_arcs_;
    std::size_t target_ = 0;
    std::vector<std::size_t> chosen_;
    const Hooks* hooks_ = nullptr;
};

LambdaResult lambda_exact(const Network& network, Vertex source, Vertex sink, const VertexSet& set,
                          std::uint64_t budget) {
    const Capacity lower = phi_pair(network, source, sink, set);
    SequenceSearch search(network, source, sink, budget);

    std::vector<bool> meets(search.paths().size());
    for (std::size_t i = 0; i < meets.size(); ++i) meets[i] = passes_through(search.paths()[i], set);

    // Arcs that survive in N_X; used for the bound on how many more paths can avoid X.
    std::vector<bool> outside(network.arcs().size());
    for (std::size_t a = 0; a < outside.size(); ++a) {
        outside[a] = !set.contains(network.arcs()[a].tail) && !set.contains(network.arcs()[a].head);
    }

    Capacity count = 0;
    Capacity best = std::numeric_limits<Capacity>::max();
    std::optional<ArcDisjointSequence> witness;

    SequenceSearch::Hooks hooks;
    hooks.enter = [&](std::size_t i) {
        if (count + (meets[i] ? 1 : 0) >= best) return false;
        count += meets[i] ? 1 : 0;
        return true;
    };
    hooks.leave = [&](std::size_t i) { count -= meets[i] ? 1 : 0; };
    hooks.prune = [&] {
        if (best == std::numeric_limits<Capacity>::max()) return false;
        // At most max-flow-in-(residual restricted to N_X) further paths can avoid X.
        std::vector<Capacity> avoid(search.residual().begin(), search.residual().end());
        for (std::size_t a = 0; a < avoid.size(); ++a) {
            if (!outside[a]) avoid[a] = 0;
        }
        const auto needed = static_cast<Capacity>(search.target() - search.chosen_count());
        const Capacity avoiders = detail::max_flow_value_with(network, std::move(avoid), source, sink);
        return count + std::max<Capacity>(0, needed - avoiders) >= best;
    };
    hooks.leaf = [&](std::span<const std::size_t> chosen) {
        best = count;
        witness = search.sequence(chosen);
        return best > lower;
    };
    search.run(hooks);

    return LambdaResult{best, true, std::move(witness)};
}

}  // namespace

std::vector<Path> simple_paths(const Network& network, Vertex source, Vertex sink, std::uint64_t budget) {
    check_pair(network, source, sink, {});
    return PathLister(network, sink, budget).run(source);
}

std::uint64_t for_each_max_sequence(const Network& network, Vertex source, Vertex sink,
                                    const std::function<bool(const ArcDisjointSequence&)>& visit,
                                    std::uint64_t budget) {
    check_pair(network, source, sink, {});
    SequenceSearch search(network, source, sink, budget);
    std::uint64_t visited = 0;
    SequenceSearch::Hooks hooks;
    hooks.leaf = [&](std::span<const std::size_t> chosen) {
        ++visited;
        return visit(search.sequence(chosen));
    };
    search.run(hooks);
    return visited;
}

std::vector<ArcDisjointSequence> enumerate_max_sequences(const Network& network, Vertex source, Vertex sink,
                                                         std::uint64_t budget) {
    std::vector<ArcDisjointSequence> out;
    for_each_max_sequence(
        network, source, sink,
        [&](const ArcDisjointSequence& s) {
            out.push_back(s);
            return true;
        },
        budget);
    return out;
}

Capacity phi_pair(const Network& network, Vertex source, Vertex sink, const VertexSet& set) {
    check_pair(network, source, sink, set);
    if (set.empty()) return 0;
    return max_flow_value(network, source, sink) - max_flow_value(restrict(network, set), source, sink);
}

LambdaResult lambda_pair(const Network& network, Vertex source, Vertex sink, const VertexSet& set,
                         LambdaMode mode, std::uint64_t budget) {
    check_pair(network, source, sink, set);
    if (mode == LambdaMode::SingletonShortcut && set.size() >= 2) {
        throw Error(ErrorKind::ShortcutInvalid, "singleton shortcut requested for a set of size " +
                                                    std::to_string(set.size()));
    }
    const bool shortcut = mode == LambdaMode::SingletonShortcut || (mode == LambdaMode::Auto && set.size() <= 1);
    if (shortcut) return LambdaResult{phi_pair(network, source, sink, set), false, std::nullopt};
    return lambda_exact(network, source, sink, set, budget);
}

Capacity delta_pair(const Network& network, Vertex source, Vertex sink, const VertexSet& set) {
    check_pair(network, source, sink, set);
    ArcCost cost;
    Capacity terminals = 0;
    for (Vertex x : set) {
        if (x == source || x == sink) {
            ++terminals;
            continue;
        }
        for (std::size_t idx : network.out_arcs(x)) cost[network.arcs()[idx]] = 1;
    }
    auto result = min_cost_max_flow(network, source, sink, cost);
    return terminals * result.value + result.cost;
}

PairQuantities pair_report(const Network& network, Vertex source, Vertex sink, const VertexSet& set,
                           const PairOptions& options) {
    check_pair(network, source, sink, set);
    PairQuantities q;
    q.source = source;
    q.sink = sink;
    q.set = set;
    q.phi_total = max_flow_value(network, source, sink);
    q.phi_restricted = set.empty() ? q.phi_total : max_flow_value(restrict(network, set), source, sink);
    q.phi_set = q.phi_total - q.phi_restricted;
    auto lambda = lambda_pair(network, source, sink, set, options.mode, options.budget);
    q.lambda_set = lambda.value;
    q.lambda_exact = lambda.exact;
    q.witness = std::move(lambda.witness);
    q.delta_set = delta_pair(network, source, sink, set);

    const bool chain = 0 <= q.phi_set && q.phi_set <= *q.lambda_set &&
                       *q.lambda_set <= std::min(*q.delta_set, q.phi_total);
    if (!chain) {
        throw Error(ErrorKind::InvariantViolation,
                    "inequality chain broken for (" + network.name(source) + "," + network.name(sink) +
                        ") X=" + format_set(network, set) + ": phi_X=" + std::to_string(q.phi_set) +
                        " lambda_X=" + std::to_string(*q.lambda_set) + " delta_X=" +
                        std::to_string(*q.delta_set) + " phi=" + std::to_string(q.phi_total));
    }
    return q;
}

}  // namespace flowcent

#include "trimcon/engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "trimcon/condition.hpp"

namespace trimcon {

double averaging_weight(int in_degree, int f) {
    if (f < 0) throw DomainError("fault bound must be non-negative, got " + std::to_string(f));
    if (in_degree < 2 * f)
        throw DomainError("in-degree " + std::to_string(in_degree) +
                          " is below 2f = " + std::to_string(2 * f) + "; cannot trim");
    return 1.0 / (in_degree + 1 - 2 * f);
}

UpdateResult update_value(double own, std::span<const std::pair<int, double>> received, int f) {
    if (f < 0) throw DomainError("fault bound must be non-negative, got " + std::to_string(f));
    const int m = static_cast<int>(received.size());
    if (m < 2 * f)
        throw DomainError("received " + std::to_string(m) + " values, need at least 2f = " +
                          std::to_string(2 * f) + " to trim");
    if (!std::isfinite(own)) throw DomainError("own value is not finite");

    std::vector<std::pair<double, int>> order;
    order.reserve(static_cast<std::size_t>(m));
    NodeSet seen;
    for (const auto& [sender, value] : received) {
        if (!std::isfinite(value))
            throw DomainError("value from node " + std::to_string(sender) + " is not finite");
        if (seen.contains(sender))
            throw DomainError("duplicate sender " + std::to_string(sender));
        seen.insert(sender);
        order.emplace_back(value, sender);
    }
    std::sort(order.begin(), order.end());

    UpdateResult out;
    // survivors re-sorted by sender id so the accumulation order is fixed
    std::vector<std::pair<int, double>> survivors;
    survivors.reserve(static_cast<std::size_t>(m - 2 * f));
    for (int k = f; k < m - f; ++k) survivors.emplace_back(order[k].second, order[k].first);
    std::sort(survivors.begin(), survivors.end());

    double sum = own;
    for (const auto& [sender, value] : survivors) {
        out.kept.insert(sender);
        sum += value;
    }
    out.value = sum / (m + 1 - 2 * f);
    return out;
}

namespace {

struct GoodInputStats {
    double min = std::numeric_limits<double>::infinity();
    double max = -std::numeric_limits<double>::infinity();
    int count = 0;
};

GoodInputStats good_input_stats(const SimConfig& c) {
    GoodInputStats s;
    const int n = c.graph.node_count();
    for (int i = 0; i < n; ++i) {
        if (c.faulty.contains(i)) continue;
        ++s.count;
        double x = c.inputs[static_cast<std::size_t>(i)];
        s.min = std::min(s.min, x);
        s.max = std::max(s.max, x);
    }
    return s;
}

void validate_adversary(const SimConfig& c, bool inputs_ok, std::vector<Diagnostic>& ds) {
    auto err = [&](std::string m) { ds.push_back({Diagnostic::Level::error, std::move(m)}); };
    auto warn = [&](std::string m) { ds.push_back({Diagnostic::Level::warning, std::move(m)}); };
    const int n = c.graph.node_count();

    if (const auto* split = std::get_if<SplitAdversary>(&c.adversary)) {
        NodeSet all = c.faulty | split->left | split->center | split->right;
        int total = c.faulty.size() + split->left.size() + split->center.size() +
                    split->right.size();
        if (!(all == NodeSet::range(n)) || total != n)
            err("split partition (with the faulty set) must cover every node exactly once");
        if (!std::isfinite(split->low_value) || !std::isfinite(split->high_value))
            err("split values must be finite");
        else if (inputs_ok && c.faulty.within(n)) {
            GoodInputStats s = good_input_stats(c);
            if (s.count > 0) {
                if (split->low_value >= s.min)
                    err("split low value " + std::to_string(split->low_value) +
                        " must stay below every fault-free input (min " + std::to_string(s.min) +
                        ")");
                if (split->high_value <= s.max)
                    err("split high value " + std::to_string(split->high_value) +
                        " must stay above every fault-free input (max " + std::to_string(s.max) +
                        ")");
            }
        }
    } else if (const auto* fixed = std::get_if<FixedAdversary>(&c.adversary)) {
        if (c.faulty.within(n)) {
            c.faulty.for_each([&](int i) {
                if (fixed->value_per_faulty.count(i) == 0)
                    err("fixed adversary has no value for faulty node " + std::to_string(i));
            });
        }
        for (const auto& [node, value] : fixed->value_per_faulty) {
            if (!std::isfinite(value))
                err("fixed adversary value for node " + std::to_string(node) + " is not finite");
            if (!c.faulty.contains(node))
                warn("fixed adversary value for node " + std::to_string(node) +
                     " is unused (node is not faulty)");
        }
    }
}

}  // namespace

std::vector<Diagnostic> validate_config(const SimConfig& c) {
    std::vector<Diagnostic> ds;
    auto err = [&](std::string m) { ds.push_back({Diagnostic::Level::error, std::move(m)}); };
    auto warn = [&](std::string m) { ds.push_back({Diagnostic::Level::warning, std::move(m)}); };

    const int n = c.graph.node_count();
    const int f = c.fault_bound;

    if (f < 0) err("fault bound must be non-negative, got " + std::to_string(f));
    bool faulty_ok = c.faulty.within(n);
    if (!faulty_ok)
        err("faulty node " + std::to_string(c.faulty.last()) + " out of range for " +
            std::to_string(n) + " nodes");
    if (f >= 0 && c.faulty.size() > f)
        err(std::to_string(c.faulty.size()) + " faulty nodes exceed the fault bound f = " +
            std::to_string(f));

    bool inputs_ok = static_cast<int>(c.inputs.size()) == n;
    if (!inputs_ok)
        err("expected one input per node (" + std::to_string(n) + "), got " +
            std::to_string(c.inputs.size()));
    else
        for (int i = 0; i < n; ++i)
            if (!std::isfinite(c.inputs[static_cast<std::size_t>(i)])) {
                err("input for node " + std::to_string(i) + " is not finite");
                inputs_ok = false;
            }

    if (faulty_ok && c.faulty.size() == n) err("every node is faulty; nothing to iterate");

    if (f > 0 && faulty_ok) {
        for (int i = 0; i < n; ++i) {
            if (c.faulty.contains(i)) continue;
            if (c.graph.in_degree(i) < 2 * f)
                err("fault-free node " + std::to_string(i) + " has in-degree " +
                    std::to_string(c.graph.in_degree(i)) + ", below the trim minimum 2f = " +
                    std::to_string(2 * f));
        }
    }

    if (c.max_rounds < 1) err("max_rounds must be at least 1, got " + std::to_string(c.max_rounds));
    if (!std::isfinite(c.epsilon) || c.epsilon <= 0)
        err("epsilon must be positive and finite");

    validate_adversary(c, inputs_ok, ds);

    if (f > 0 && c.graph.min_in_degree() < 2 * f + 1)
        warn("some node has in-degree below 2f+1 = " + std::to_string(2 * f + 1) +
             "; the resilience condition cannot hold");
    if (f >= 0 && n <= kEnumerationGuard &&
        !check_condition(c.graph, f).satisfies())
        warn("graph fails the f = " + std::to_string(f) +
             " resilience partition condition; an adversary can prevent convergence");

    return ds;
}

namespace {
double spread(const std::map<int, double>& states) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (const auto& [node, value] : states) {
        lo = std::min(lo, value);
        hi = std::max(hi, value);
    }
    return hi - lo;
}
}  // namespace

Trace run(const SimConfig& config) {
    auto diagnostics = validate_config(config);
    bool bad = std::any_of(diagnostics.begin(), diagnostics.end(), [](const Diagnostic& d) {
        return d.level == Diagnostic::Level::error;
    });
    if (bad) throw ConfigError(std::move(diagnostics));

    const Digraph& g = config.graph;
    const int n = g.node_count();
    const int f = config.fault_bound;

    std::map<int, double> prev;
    for (int i = 0; i < n; ++i)
        if (!config.faulty.contains(i)) prev[i] = config.inputs[static_cast<std::size_t>(i)];

    GoodInputStats stats = good_input_stats(config);

    Trace trace{config, config.inputs, {}};
    for (int t = 1; t <= config.max_rounds; ++t) {
        AdversaryContext ctx{t,           &prev,         &g,
                             f,           config.seed,   stats.min - 1.0,
                             stats.max + 1.0};
        RoundRecord rec;
        rec.t = t;

        config.faulty.for_each([&](int from) {
            auto& msgs = rec.adversary_msgs[from];
            g.out_neighbors(from).for_each([&](int to) {
                double value = emit(config.adversary, ctx, from, to);
                if (!std::isfinite(value))
                    throw DomainError("adversary emitted a non-finite value");
                msgs.emplace_back(to, value);
            });
        });

        for (const auto& [i, own] : prev) {
            std::vector<std::pair<int, double>> rcv;
            rcv.reserve(static_cast<std::size_t>(g.in_degree(i)));
            g.in_neighbors(i).for_each([&](int s) {
                double value = config.faulty.contains(s) ? emit(config.adversary, ctx, s, i)
                                                         : prev.at(s);
                rcv.emplace_back(s, value);
            });
            UpdateResult up = update_value(own, rcv, f);
            rec.received[i] = std::move(rcv);
            rec.kept[i] = up.kept;
            rec.states[i] = up.value;
        }

        prev = rec.states;
        trace.rounds.push_back(std::move(rec));
        if (spread(prev) <= config.epsilon) break;
    }
    return trace;
}

}  // namespace trimcon

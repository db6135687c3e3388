#include "trimcon/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "trimcon/condition.hpp"

namespace trimcon {

double min_averaging_weight(const Digraph& g, int f) {
    double w = 1.0;
    for (int i = 0; i < g.node_count(); ++i)
        w = std::min(w, averaging_weight(g.in_degree(i), f));
    return w;
}

double contraction_factor(const Digraph& g, int f) {
    double w = min_averaging_weight(g, f);
    int span = g.node_count() - f - 1;
    return 1.0 - std::pow(w, span) / 2.0;
}

namespace {

std::vector<int> fault_free_nodes(const Trace& trace) {
    std::vector<int> good;
    for (int i = 0; i < trace.config.graph.node_count(); ++i)
        if (!trace.config.faulty.contains(i)) good.push_back(i);
    return good;
}

// States of the fault-free nodes at round t (t = 0 reads the inputs).
// Throws when the trace does not carry a state for some fault-free node.
std::map<int, double> states_at(const Trace& trace, const std::vector<int>& good, int t) {
    std::map<int, double> out;
    if (t == 0) {
        if (trace.initial.size() != static_cast<std::size_t>(trace.config.graph.node_count()))
            throw DomainError("trace initial states do not cover every node");
        for (int i : good) out[i] = trace.initial[static_cast<std::size_t>(i)];
        return out;
    }
    const RoundRecord& rec = trace.rounds[static_cast<std::size_t>(t - 1)];
    if (rec.t != t) throw DomainError("trace rounds are not consecutive from 1");
    for (int i : good) {
        auto it = rec.states.find(i);
        if (it == rec.states.end())
            throw DomainError("round " + std::to_string(t) + " is missing the state of node " +
                              std::to_string(i));
        out[i] = it->second;
    }
    return out;
}

struct Extremes {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
};

Extremes extremes(const std::map<int, double>& states) {
    Extremes e;
    for (const auto& [node, value] : states) {
        e.lo = std::min(e.lo, value);
        e.hi = std::max(e.hi, value);
    }
    return e;
}

}  // namespace

bool check_validity(const Trace& trace) {
    auto good = fault_free_nodes(trace);
    if (good.empty()) throw DomainError("trace has no fault-free nodes");
    auto prev = states_at(trace, good, 0);
    for (int t = 1; t <= static_cast<int>(trace.rounds.size()); ++t) {
        auto cur = states_at(trace, good, t);
        Extremes e = extremes(prev);
        double tol = 1e-12 * std::max(1.0, e.hi - e.lo);
        for (const auto& [node, value] : cur)
            if (value < e.lo - tol || value > e.hi + tol) return false;
        prev = std::move(cur);
    }
    return true;
}

EnvelopeCheck check_envelope_bounds(const Trace& trace) {
    auto good = fault_free_nodes(trace);
    if (good.empty()) throw DomainError("trace has no fault-free nodes");
    const int f = trace.config.fault_bound;
    EnvelopeCheck out{true, true};

    auto prev = states_at(trace, good, 0);
    for (int t = 1; t <= static_cast<int>(trace.rounds.size()); ++t) {
        auto cur = states_at(trace, good, t);
        const RoundRecord& rec = trace.rounds[static_cast<std::size_t>(t - 1)];
        Extremes e = extremes(prev);
        double tol = 1e-12 * std::max(1.0, e.hi - e.lo);

        for (int i : good) {
            auto kept_it = rec.kept.find(i);
            if (kept_it == rec.kept.end())
                throw DomainError("round " + std::to_string(t) +
                                  " is missing the kept set of node " + std::to_string(i));
            double weight = averaging_weight(trace.config.graph.in_degree(i), f);
            double vi = cur.at(i);

            auto check_j = [&](int j) {
                auto pj = prev.find(j);
                if (pj == prev.end()) return;  // faulty sender: no recorded state
                double vj = pj->second;
                if (vi - e.lo < weight * (vj - e.lo) - tol) out.lower_ok = false;
                if (e.hi - vi < weight * (e.hi - vj) - tol) out.upper_ok = false;
            };
            check_j(i);
            kept_it->second.for_each(check_j);
        }
        prev = std::move(cur);
    }
    return out;
}

bool check_geometric_bound(const Trace& trace) {
    auto good = fault_free_nodes(trace);
    if (good.empty()) throw DomainError("trace has no fault-free nodes");
    const Digraph& g = trace.config.graph;
    const int f = trace.config.fault_bound;
    const double factor = contraction_factor(g, f);
    const int block = g.node_count() - f - 1;

    auto gap_at = [&](int t) {
        Extremes e = extremes(states_at(trace, good, t));
        return e.hi - e.lo;
    };
    const double gap0 = gap_at(0);
    const double tol = 1e-9 * std::max(1.0, gap0);
    const int total = static_cast<int>(trace.rounds.size());

    double bound = gap0;
    for (int k = 1; k * block <= total; ++k) {
        bound *= factor;
        if (gap_at(k * block) > bound + tol) return false;
    }
    return true;
}

AnalysisReport report(const Trace& trace) {
    auto good = fault_free_nodes(trace);
    if (good.empty()) throw DomainError("trace has no fault-free nodes");
    const Digraph& g = trace.config.graph;
    const int f = trace.config.fault_bound;

    AnalysisReport rep;
    for (int t = 0; t <= static_cast<int>(trace.rounds.size()); ++t) {
        Extremes e = extremes(states_at(trace, good, t));
        rep.max_series.push_back(e.hi);
        rep.min_series.push_back(e.lo);
        rep.gap_series.push_back(e.hi - e.lo);
    }

    rep.validity_ok = check_validity(trace);
    EnvelopeCheck env = check_envelope_bounds(trace);
    rep.envelope_lower_ok = env.lower_ok;
    rep.envelope_upper_ok = env.upper_ok;

    try {
        rep.min_weight = min_averaging_weight(g, f);
        rep.contraction_factor = trimcon::contraction_factor(g, f);
    } catch (const DomainError&) {
        // some in-degree below 2f: weight-based bounds are undefined
    }
    if (f >= 0 && g.node_count() <= kEnumerationGuard)
        rep.condition_satisfied = check_condition(g, f).satisfies();
    if (rep.condition_satisfied.value_or(false) && rep.contraction_factor.has_value())
        rep.geometric_bound_ok = check_geometric_bound(trace);

    for (int t = 1; t <= static_cast<int>(trace.rounds.size()); ++t) {
        if (rep.gap_series[static_cast<std::size_t>(t)] <= trace.config.epsilon) {
            rep.converged_round = t;
            break;
        }
    }
    return rep;
}

}  // namespace trimcon

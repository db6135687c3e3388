#pragma once

#include <optional>
#include <vector>

#include "trimcon/engine.hpp"

namespace trimcon {

// Per-trace verdicts. max/min/gap series are indexed by round with entry 0
// for the inputs, so their length is rounds + 1. Optional fields are absent
// when not computable (degenerate degrees) or not applicable (gap bound on a
// run whose graph fails the resilience condition; condition unknown beyond
// the enumeration guard).
struct AnalysisReport {
    std::vector<double> max_series;
    std::vector<double> min_series;
    std::vector<double> gap_series;
    bool validity_ok = false;
    bool envelope_lower_ok = false;
    bool envelope_upper_ok = false;
    std::optional<double> min_weight;
    std::optional<double> contraction_factor;
    std::optional<bool> condition_satisfied;
    std::optional<bool> geometric_bound_ok;
    std::optional<int> converged_round;
};

// Smallest trimmed-averaging weight over all nodes: min of
// 1/(|N_i^-|+1-2f). Lies in (0, 1]. Throws DomainError when any node has
// in-degree below 2f.
double min_averaging_weight(const Digraph& g, int f);

// Worst-case factor by which the fault-free spread shrinks over any n-f-1
// consecutive rounds: 1 - w^(n-f-1)/2 with w = min_averaging_weight. Lies in
// [1/2, 1). Same errors as min_averaging_weight.
double contraction_factor(const Digraph& g, int f);

// True iff every fault-free state stays inside the previous round's
// fault-free [min, max] envelope, within 1e-12 * max(1, previous gap) to
// absorb rounding in the averaging sum.
bool check_validity(const Trace& trace);

struct EnvelopeCheck {
    bool lower_ok = false;
    bool upper_ok = false;
};

// Per-node contraction inequalities underlying the convergence proof: for
// fault-free i and fault-free j in {i} ∪ kept(i),
//   v_i[t] - min[t-1] >= a_i * (v_j[t-1] - min[t-1])   (lower)
//   max[t-1] - v_i[t] >= a_i * (max[t-1] - v_j[t-1])   (upper)
// with a_i the node's averaging weight, within 1e-12 * max(1, previous gap).
// Throws DomainError when the trace lacks kept sets.
EnvelopeCheck check_envelope_bounds(const Trace& trace);

// True iff gap[k*(n-f-1)] <= contraction_factor^k * gap[0] for every complete
// block k in the trace, within 1e-9 * max(1, gap[0]). Meaningful only when
// the graph satisfies the resilience condition (report() gates on that);
// throws DomainError when the factor is not computable.
bool check_geometric_bound(const Trace& trace);

// Assembles every series and verdict above. converged_round is the first
// round t >= 1 whose gap is <= config.epsilon.
AnalysisReport report(const Trace& trace);

}  // namespace trimcon

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "trimcon/condition.hpp"
#include "trimcon/digraph.hpp"

namespace trimcon {

// The impossibility-proof strategy: pull `left` down and `right` up. Sends
// low_value to left recipients, high_value to right ones, the midpoint
// (low_value + high_value) / 2 to center recipients, and low_value to fellow
// faulty nodes (whose state is not modeled, so the value is arbitrary).
// Together with the faulty set, left/center/right must partition all nodes.
// low_value must stay below every fault-free input and high_value above, so
// the extremes are trimmed rather than adopted.
struct SplitAdversary {
    NodeSet left;
    NodeSet center;
    NodeSet right;
    double low_value = 0.0;
    double high_value = 0.0;
};

// Every message from faulty node `from` carries value_per_faulty.at(from),
// regardless of round or recipient.
struct FixedAdversary {
    std::map<int, double> value_per_faulty;
};

// One fresh uniform draw per (round, sender): all recipients of a sender see
// the same value in a round, as if the node were running the protocol with a
// random state.
struct BroadcastRandomAdversary {};

// Independent uniform draw per (round, sender, recipient): recipients of the
// same sender see mismatching values, the two-faced behavior a signed
// broadcast channel would prevent.
struct MismatchRandomAdversary {};

using AdversarySpec =
    std::variant<SplitAdversary, FixedAdversary, BroadcastRandomAdversary, MismatchRandomAdversary>;

// Name used for the strategy in configs and on the command line:
// split | fixed | random | mismatch.
std::string adversary_kind(const AdversarySpec& spec);

// Everything a strategy may inspect when producing a message. The random
// strategies draw from [range_lo, range_hi], fixed by the engine at
// min(fault-free inputs) - 1 and max(fault-free inputs) + 1.
struct AdversaryContext {
    int round = 0;                                       // current round t, >= 1
    const std::map<int, double>* prev_states = nullptr;  // fault-free states v[t-1]
    const Digraph* graph = nullptr;
    int fault_bound = 0;
    std::uint64_t seed = 0;
    double range_lo = 0.0;
    double range_hi = 1.0;
};

// Value faulty node `from` sends to `to` this round. Pure in (spec, ctx,
// from, to). Throws DomainError when (from, to) is not an edge, `from` is not
// faulty (it appears in ctx.prev_states), the split partition misses `to`, or
// the fixed map has no entry for `from`.
double emit(const AdversarySpec& spec, const AdversaryContext& ctx, int from, int to);

struct SplitFromWitness {
    SplitAdversary spec;
    std::vector<std::string> warnings;
};

// Builds the split strategy for a witness partition: low_value = one below
// the smallest input on `left`, high_value = one above the largest input on
// `right`. Warns when the inputs are not arranged low-on-left / high-on-right
// (some left input exceeds a right input, or the two bounds coincide), since
// the freeze argument needs that arrangement. `inputs` must give one finite
// value per node and the witness must partition those nodes.
SplitFromWitness split_from_witness(const PartitionWitness& w, const std::vector<double>& inputs);

}  // namespace trimcon

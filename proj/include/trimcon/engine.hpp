#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "trimcon/adversary.hpp"
#include "trimcon/digraph.hpp"
#include "trimcon/error.hpp"

namespace trimcon {

struct SimConfig {
    Digraph graph;
    int fault_bound = 0;          // f: how many Byzantine nodes the run must tolerate
    NodeSet faulty = {};          // actual faulty nodes, |faulty| <= fault_bound
    std::vector<double> inputs = {};  // one finite value per node (faulty entries unused)
    AdversarySpec adversary = FixedAdversary{};
    int max_rounds = 100;
    double epsilon = 1e-6;        // stop once max - min over fault-free states <= epsilon
    std::uint64_t seed = 0;
};

// Full record of one synchronous round. All maps are keyed by fault-free node
// id except adversary_msgs, keyed by faulty sender.
struct RoundRecord {
    int t = 0;
    // every in-neighbor's message, ascending sender id
    std::map<int, std::vector<std::pair<int, double>>> received;
    // senders surviving the trim (own value always survives and is not listed)
    std::map<int, NodeSet> kept;
    std::map<int, double> states;
    // (recipient, value) per faulty sender, ascending recipient id
    std::map<int, std::vector<std::pair<int, double>>> adversary_msgs;
};

struct Trace {
    SimConfig config;
    std::vector<double> initial;  // states at t = 0 (copy of inputs)
    std::vector<RoundRecord> rounds;
};

// Weight given to each surviving value when a node with `in_degree` incoming
// links trims f from each end: 1/(in_degree + 1 - 2f). Throws DomainError
// when in_degree < 2f.
double averaging_weight(int in_degree, int f);

struct UpdateResult {
    double value = 0.0;
    NodeSet kept;
};

// One trimmed-mean update: sort received ascending by (value, sender id),
// drop the f smallest and f largest, then average the survivors together
// with the node's own value, every term weighted 1/(|received|+1-2f).
// The sum accumulates own value first, then survivors in ascending sender
// order, and divides once — fixed order, so results are bitwise reproducible
// and an all-equal input set yields that value exactly.
UpdateResult update_value(double own, std::span<const std::pair<int, double>> received, int f);

// Checks a config against the model's assumptions. Errors make run() refuse;
// warnings flag setups whose convergence guarantee is void (in-degrees below
// 2f+1, or a graph that fails the partition condition outright).
std::vector<Diagnostic> validate_config(const SimConfig& config);

// Runs synchronous rounds until the fault-free spread drops to epsilon or
// max_rounds is reached (at least one round always executes). Fault-free
// nodes send their previous state on every out-edge; faulty nodes send
// whatever the adversary strategy emits per edge. Deterministic given the
// config, including the seed. Throws ConfigError when validate_config
// reports errors.
Trace run(const SimConfig& config);

}  // namespace trimcon

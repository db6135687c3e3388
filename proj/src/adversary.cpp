#include "trimcon/adversary.hpp"

#include <cmath>
#include <limits>

#include "trimcon/error.hpp"
#include "trimcon/rng.hpp"

namespace trimcon {

std::string adversary_kind(const AdversarySpec& spec) {
    struct Visitor {
        std::string operator()(const SplitAdversary&) const { return "split"; }
        std::string operator()(const FixedAdversary&) const { return "fixed"; }
        std::string operator()(const BroadcastRandomAdversary&) const { return "random"; }
        std::string operator()(const MismatchRandomAdversary&) const { return "mismatch"; }
    };
    return std::visit(Visitor{}, spec);
}

namespace {

double emit_split(const SplitAdversary& s, const AdversaryContext& ctx, int to) {
    if (s.left.contains(to)) return s.low_value;
    if (s.right.contains(to)) return s.high_value;
    if (s.center.contains(to)) return (s.low_value + s.high_value) / 2.0;
    if (ctx.prev_states != nullptr && ctx.prev_states->count(to) > 0)
        throw DomainError("split partition misses fault-free node " + std::to_string(to));
    return s.low_value;  // recipient is faulty; value is arbitrary
}

}  // namespace

double emit(const AdversarySpec& spec, const AdversaryContext& ctx, int from, int to) {
    if (ctx.graph == nullptr || ctx.prev_states == nullptr)
        throw DomainError("adversary context is incomplete");
    if (!ctx.graph->has_edge(from, to))
        throw DomainError("no edge from " + std::to_string(from) + " to " + std::to_string(to));
    if (ctx.prev_states->count(from) > 0)
        throw DomainError("node " + std::to_string(from) + " is fault-free, not adversary-controlled");

    struct Visitor {
        const AdversaryContext& ctx;
        std::uint64_t round, from, to;

        double operator()(const SplitAdversary& s) const {
            return emit_split(s, ctx, static_cast<int>(to));
        }
        double operator()(const FixedAdversary& s) const {
            auto it = s.value_per_faulty.find(static_cast<int>(from));
            if (it == s.value_per_faulty.end())
                throw DomainError("fixed adversary has no value for node " + std::to_string(from));
            return it->second;
        }
        double operator()(const BroadcastRandomAdversary&) const {
            return keyed_uniform(ctx.range_lo, ctx.range_hi,
                                 {kStreamBroadcast, ctx.seed, round, from});
        }
        double operator()(const MismatchRandomAdversary&) const {
            return keyed_uniform(ctx.range_lo, ctx.range_hi,
                                 {kStreamPerEdge, ctx.seed, round, from, to});
        }
    };
    return std::visit(Visitor{ctx, static_cast<std::uint64_t>(ctx.round),
                              static_cast<std::uint64_t>(from), static_cast<std::uint64_t>(to)},
                      spec);
}

SplitFromWitness split_from_witness(const PartitionWitness& w, const std::vector<double>& inputs) {
    const int n = static_cast<int>(inputs.size());
    NodeSet all = w.faulty | w.left | w.center | w.right;
    if (w.left.empty() || w.right.empty())
        throw DomainError("witness left and right sets must be non-empty");
    if (!(all == NodeSet::range(n)) ||
        w.faulty.size() + w.left.size() + w.center.size() + w.right.size() != n)
        throw DomainError("witness sets must partition the " + std::to_string(n) +
                          " nodes covered by the inputs");
    for (double x : inputs)
        if (!std::isfinite(x)) throw DomainError("inputs must be finite");

    double left_min = std::numeric_limits<double>::infinity();
    double left_max = -std::numeric_limits<double>::infinity();
    w.left.for_each([&](int i) {
        left_min = std::min(left_min, inputs[static_cast<std::size_t>(i)]);
        left_max = std::max(left_max, inputs[static_cast<std::size_t>(i)]);
    });
    double right_min = std::numeric_limits<double>::infinity();
    double right_max = -std::numeric_limits<double>::infinity();
    w.right.for_each([&](int i) {
        right_min = std::min(right_min, inputs[static_cast<std::size_t>(i)]);
        right_max = std::max(right_max, inputs[static_cast<std::size_t>(i)]);
    });

    SplitFromWitness out;
    out.spec = SplitAdversary{w.left, w.center, w.right, left_min - 1.0, right_max + 1.0};
    if (left_max > right_min)
        out.warnings.push_back(
            "inputs are not arranged low-on-left / high-on-right (some left input exceeds a "
            "right input); the freeze argument assumes that arrangement");
    if (left_min == right_max)
        out.warnings.push_back(
            "left minimum equals right maximum; the freeze argument needs the two sides apart");
    return out;
}

}  // namespace trimcon

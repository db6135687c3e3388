#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "trimcon/digraph.hpp"

namespace trimcon {

// Four-way partition of the nodes (faulty / left / center / right) witnessing
// that the graph cannot tolerate f faults: no node of `left` has f+1 in-edges
// from center ∪ right, and no node of `right` has f+1 in-edges from
// left ∪ center. With such a split an adversary can hold `left` and `right`
// at different values forever.
struct PartitionWitness {
    NodeSet faulty;  // at most f nodes
    NodeSet left;    // non-empty
    NodeSet center;  // may be empty
    NodeSet right;   // non-empty
};

// True when some node of `dst` has at least f+1 in-edges from `src`, i.e.
// `src` holds enough senders to force one trimmed-mean update inside `dst`.
// Requires src and dst non-empty, disjoint, and within the graph.
bool absorbs(const Digraph& g, int f, const NodeSet& src, const NodeSet& dst);

// The nodes of `dst` with at least f+1 in-edges from `src` (empty when
// absorbs() is false). Same preconditions as absorbs().
NodeSet absorption_set(const Digraph& g, int f, const NodeSet& src, const NodeSet& dst);

// One run of the greedy absorption fixpoint: repeatedly move the absorption
// set of (a, b) from b into a. Either b drains completely or the process
// stalls with a non-empty remainder.
struct PropagationSuccess {
    int steps = 0;               // number of absorption steps taken
    std::vector<NodeSet> a_seq;  // a_seq[0] == src, grows each step
    std::vector<NodeSet> b_seq;  // b_seq[0] == dst, b_seq[steps] is empty
};
struct PropagationStall {
    int steps = 0;  // steps taken before no node could be absorbed
    NodeSet a_k;
    NodeSet b_k;  // non-empty remainder
};
using PropagationResult = std::variant<PropagationSuccess, PropagationStall>;

inline bool propagates(const PropagationResult& r) {
    return std::holds_alternative<PropagationSuccess>(r);
}

PropagationResult propagate(const Digraph& g, int f, const NodeSet& src, const NodeSet& dst);

// True when the given partition certifies a violation. Throws DomainError if
// the four sets do not partition the nodes, |faulty| > f, or left/right is
// empty.
bool is_violating(const Digraph& g, int f, const PartitionWitness& w);

struct CheckVerdict {
    // Engaged iff the graph fails the resilience condition.
    std::optional<PartitionWitness> witness;
    bool satisfies() const { return !witness.has_value(); }
};

// Exhaustive search is exponential; refuse larger graphs unless forced.
inline constexpr int kEnumerationGuard = 15;
// Above this even a forced search is hopeless (and the counters overflow).
inline constexpr int kEnumerationLimit = 40;

// Decides whether the graph tolerates f Byzantine nodes, searching every
// faulty set of size <= f and every left/center/right assignment of the rest.
// Returns the first violating witness in canonical order (faulty sets by
// size then lexicographically; assignments in base-3 order with node ids as
// little-endian digits, left=0 / center=1 / right=2), so the result is
// deterministic. Throws DomainError when n > kEnumerationGuard and !force or
// n > kEnumerationLimit.
CheckVerdict check_condition(const Digraph& g, int f, bool force = false);

// The enumeration behind check_condition without the degree-based shortcut;
// exposed so the shortcut can be cross-checked against the plain search.
std::optional<PartitionWitness> enumerate_violation(const Digraph& g, int f, bool force = false);

// First violating witness whose faulty set is exactly `faulty`, if any.
// Same guard rules as check_condition.
std::optional<PartitionWitness> find_violation_with_faulty(const Digraph& g, int f,
                                                           const NodeSet& faulty,
                                                           bool force = false);

// Necessary degree condition: every node needs in-degree >= 2f+1 when f > 0.
// Cheap screen before the exponential search; true does not imply the full
// condition holds.
bool min_in_degree_ok(const Digraph& g, int f);

}  // namespace trimcon

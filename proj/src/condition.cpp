#include "trimcon/condition.hpp"

#include <bit>
#include <cstdint>
#include <string>

#include "trimcon/error.hpp"

namespace trimcon {

namespace {

void check_pair(const Digraph& g, int f, const NodeSet& src, const NodeSet& dst) {
    if (f < 0) throw DomainError("fault bound must be non-negative, got " + std::to_string(f));
    if (src.empty() || dst.empty()) throw DomainError("source and destination sets must be non-empty");
    if (!src.disjoint_with(dst)) throw DomainError("source and destination sets must be disjoint");
    if (!src.within(g.node_count()) || !dst.within(g.node_count()))
        throw DomainError("set member out of range for " + std::to_string(g.node_count()) + " nodes");
}

// --- mask-based kernels used by the exhaustive search (n <= kEnumerationLimit < 64) ---

std::vector<std::uint64_t> in_masks(const Digraph& g) {
    std::vector<std::uint64_t> in(static_cast<std::size_t>(g.node_count()));
    for (int i = 0; i < g.node_count(); ++i)
        in[static_cast<std::size_t>(i)] = g.in_neighbors(i).to_mask64();
    return in;
}

bool absorbs_masks(const std::vector<std::uint64_t>& in, int f, std::uint64_t src,
                   std::uint64_t dst) {
    while (dst != 0) {
        int v = std::countr_zero(dst);
        if (std::popcount(in[static_cast<std::size_t>(v)] & src) >= f + 1) return true;
        dst &= dst - 1;
    }
    return false;
}

bool violating_masks(const std::vector<std::uint64_t>& in, int f, std::uint64_t l, std::uint64_t c,
                     std::uint64_t r) {
    return !absorbs_masks(in, f, c | r, l) && !absorbs_masks(in, f, l | c, r);
}

// Walks every assignment of `rest` to {left, center, right} in base-3 order
// (rest[0] is the least significant digit; 0=left, 1=center, 2=right) and
// returns the first violating witness the order meets, if any.
std::optional<PartitionWitness> search_assignments(const std::vector<std::uint64_t>& in, int f,
                                                   std::uint64_t faulty_mask,
                                                   const std::vector<int>& rest) {
    const int m = static_cast<int>(rest.size());
    std::vector<int> trit(static_cast<std::size_t>(m), 0);
    std::uint64_t cls[3] = {0, 0, 0};
    for (int id : rest) cls[0] |= std::uint64_t{1} << id;
    for (;;) {
        if (cls[0] != 0 && cls[2] != 0 && violating_masks(in, f, cls[0], cls[1], cls[2]))
            return PartitionWitness{NodeSet::from_mask(faulty_mask), NodeSet::from_mask(cls[0]),
                                    NodeSet::from_mask(cls[1]), NodeSet::from_mask(cls[2])};
        // base-3 odometer increment
        int k = 0;
        while (k < m) {
            std::uint64_t bit = std::uint64_t{1} << rest[static_cast<std::size_t>(k)];
            int& d = trit[static_cast<std::size_t>(k)];
            cls[d] &= ~bit;
            if (++d == 3) {
                d = 0;
                cls[0] |= bit;
                ++k;
            } else {
                cls[d] |= bit;
                break;
            }
        }
        if (k == m) return std::nullopt;
    }
}

void check_search_size(const Digraph& g, bool force) {
    int n = g.node_count();
    if (n > kEnumerationLimit)
        throw DomainError("condition check is infeasible beyond " +
                          std::to_string(kEnumerationLimit) + " nodes, got " + std::to_string(n));
    if (n > kEnumerationGuard && !force)
        throw DomainError("condition check enumerates 3^n assignments and is guarded at n <= " +
                          std::to_string(kEnumerationGuard) + "; got n = " + std::to_string(n) +
                          " (pass force/--force to run anyway)");
}

std::vector<int> complement_of(std::uint64_t mask, int n) {
    std::vector<int> rest;
    for (int i = 0; i < n; ++i)
        if (((mask >> i) & 1) == 0) rest.push_back(i);
    return rest;
}

// Degree shortcut: when f > 0 and some node has in-degree <= 2f, splitting
// its in-neighborhood between faulty nodes and the right side isolates it.
std::optional<PartitionWitness> low_degree_witness(const Digraph& g, int f) {
    if (f <= 0) return std::nullopt;
    const int n = g.node_count();
    for (int i = 0; i < n; ++i) {
        int d = g.in_degree(i);
        if (d > 2 * f) continue;
        std::vector<int> nbrs = g.in_neighbors(i).to_vector();
        NodeSet faulty;
        for (int k = 0; k < (d + 1) / 2; ++k) faulty.insert(nbrs[static_cast<std::size_t>(k)]);
        NodeSet left{i};
        NodeSet right = NodeSet::range(n) - faulty - left;
        if (right.empty()) continue;
        PartitionWitness w{faulty, left, NodeSet{}, right};
        if (is_violating(g, f, w)) return w;
    }
    return std::nullopt;
}

}  // namespace

bool absorbs(const Digraph& g, int f, const NodeSet& src, const NodeSet& dst) {
    return !absorption_set(g, f, src, dst).empty();
}

NodeSet absorption_set(const Digraph& g, int f, const NodeSet& src, const NodeSet& dst) {
    check_pair(g, f, src, dst);
    NodeSet hit;
    dst.for_each([&](int v) {
        if (g.in_neighbors(v).intersection_size(src) >= f + 1) hit.insert(v);
    });
    return hit;
}

PropagationResult propagate(const Digraph& g, int f, const NodeSet& src, const NodeSet& dst) {
    check_pair(g, f, src, dst);
    std::vector<NodeSet> a_seq{src};
    std::vector<NodeSet> b_seq{dst};
    for (;;) {
        const NodeSet& a = a_seq.back();
        const NodeSet& b = b_seq.back();
        if (b.empty()) {
            int steps = static_cast<int>(a_seq.size()) - 1;
            return PropagationSuccess{steps, std::move(a_seq), std::move(b_seq)};
        }
        NodeSet step = absorption_set(g, f, a, b);
        if (step.empty()) {
            int steps = static_cast<int>(a_seq.size()) - 1;
            return PropagationStall{steps, a, b};
        }
        a_seq.push_back(a | step);
        b_seq.push_back(b - step);
    }
}

bool is_violating(const Digraph& g, int f, const PartitionWitness& w) {
    const int n = g.node_count();
    if (f < 0) throw DomainError("fault bound must be non-negative, got " + std::to_string(f));
    if (w.faulty.size() > f)
        throw DomainError("witness has " + std::to_string(w.faulty.size()) +
                          " faulty nodes, more than the fault bound " + std::to_string(f));
    if (w.left.empty() || w.right.empty())
        throw DomainError("witness left and right sets must be non-empty");
    if (!w.faulty.disjoint_with(w.left) || !w.faulty.disjoint_with(w.center) ||
        !w.faulty.disjoint_with(w.right) || !w.left.disjoint_with(w.center) ||
        !w.left.disjoint_with(w.right) || !w.center.disjoint_with(w.right))
        throw DomainError("witness sets must be pairwise disjoint");
    if (!((w.faulty | w.left | w.center | w.right) == NodeSet::range(n)))
        throw DomainError("witness sets must cover all " + std::to_string(n) + " nodes");
    return !absorbs(g, f, w.center | w.right, w.left) &&
           !absorbs(g, f, w.left | w.center, w.right);
}

CheckVerdict check_condition(const Digraph& g, int f, bool force) {
    if (f < 0) throw DomainError("fault bound must be non-negative, got " + std::to_string(f));
    check_search_size(g, force);
    if (auto w = low_degree_witness(g, f)) return CheckVerdict{std::move(w)};
    return CheckVerdict{enumerate_violation(g, f, force)};
}

std::optional<PartitionWitness> enumerate_violation(const Digraph& g, int f, bool force) {
    if (f < 0) throw DomainError("fault bound must be non-negative, got " + std::to_string(f));
    check_search_size(g, force);
    const int n = g.node_count();
    const auto in = in_masks(g);

    // faulty sets by size, then lexicographically by member list
    const int max_size = f < n - 2 ? f : n - 2;
    for (int s = 0; s <= max_size; ++s) {
        std::vector<int> pick(static_cast<std::size_t>(s));
        for (int k = 0; k < s; ++k) pick[static_cast<std::size_t>(k)] = k;
        for (;;) {
            std::uint64_t fmask = 0;
            for (int id : pick) fmask |= std::uint64_t{1} << id;
            if (auto w = search_assignments(in, f, fmask, complement_of(fmask, n))) return w;
            // next lexicographic s-combination of {0..n-1}
            int k = s - 1;
            while (k >= 0 && pick[static_cast<std::size_t>(k)] == n - s + k) --k;
            if (k < 0) break;
            ++pick[static_cast<std::size_t>(k)];
            for (int j = k + 1; j < s; ++j)
                pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return std::nullopt;
}

std::optional<PartitionWitness> find_violation_with_faulty(const Digraph& g, int f,
                                                           const NodeSet& faulty, bool force) {
    if (f < 0) throw DomainError("fault bound must be non-negative, got " + std::to_string(f));
    const int n = g.node_count();
    if (!faulty.within(n))
        throw DomainError("faulty set member out of range for " + std::to_string(n) + " nodes");
    if (faulty.size() > f)
        throw DomainError("faulty set has " + std::to_string(faulty.size()) +
                          " nodes, more than the fault bound " + std::to_string(f));
    check_search_size(g, force);
    const auto in = in_masks(g);
    std::uint64_t fmask = faulty.to_mask64();
    return search_assignments(in, f, fmask, complement_of(fmask, n));
}

bool min_in_degree_ok(const Digraph& g, int f) {
    return f == 0 || g.min_in_degree() >= 2 * f + 1;
}

}  // namespace trimcon

#include <doctest.h>

#include <set>
#include <variant>
#include <vector>

#include "corpus.hpp"
#include "oracle.hpp"
#include "trimcon/condition.hpp"
#include "trimcon/digraph.hpp"
#include "trimcon/generators.hpp"

using trimcon::Digraph;
using trimcon::NodeSet;

namespace {

// walks every way of putting nodes 0..n-1 into `classes` buckets
template <typename Fn>
void for_each_split(int n, int classes, Fn&& fn) {
    std::vector<int> digit(static_cast<std::size_t>(n), 0);
    for (;;) {
        fn(digit);
        int i = 0;
        while (i < n && digit[static_cast<std::size_t>(i)] == classes - 1)
            digit[static_cast<std::size_t>(i++)] = 0;
        if (i == n) break;
        ++digit[static_cast<std::size_t>(i)];
    }
}

NodeSet bucket(const std::vector<int>& digit, int which) {
    NodeSet s;
    for (int i = 0; i < static_cast<int>(digit.size()); ++i)
        if (digit[static_cast<std::size_t>(i)] == which) s.insert(i);
    return s;
}

std::set<int> as_std_set(const NodeSet& s) {
    auto v = s.to_vector();
    return std::set<int>(v.begin(), v.end());
}

}  // namespace

TEST_CASE("absorbs agrees with an edge-list scan on every small split") {
    for (const auto& g : corpus::small_graphs()) {
        for (int f = 0; f <= 2; ++f) {
            for_each_split(g.node_count(), 3, [&](const std::vector<int>& digit) {
                NodeSet src = bucket(digit, 0);
                NodeSet dst = bucket(digit, 1);
                if (src.empty() || dst.empty()) return;
                bool fast = trimcon::absorbs(g, f, src, dst);
                bool slow = oracle::absorbs_scan(g.edges(), f, as_std_set(src), as_std_set(dst));
                CHECK_EQ(fast, slow);
            });
        }
    }
}

TEST_CASE("propagate keeps its bookkeeping straight on every small split") {
    for (const auto& g : corpus::small_graphs()) {
        const int n = g.node_count();
        for (int f = 0; f <= 2; ++f) {
            for_each_split(n, 3, [&](const std::vector<int>& digit) {
                NodeSet src = bucket(digit, 0);
                NodeSet dst = bucket(digit, 1);
                if (src.empty() || dst.empty()) return;
                NodeSet all = src | dst;
                auto r = trimcon::propagate(g, f, src, dst);
                if (auto* ok = std::get_if<trimcon::PropagationSuccess>(&r)) {
                    REQUIRE_EQ(ok->a_seq.size(), static_cast<std::size_t>(ok->steps) + 1);
                    REQUIRE_EQ(ok->b_seq.size(), static_cast<std::size_t>(ok->steps) + 1);
                    CHECK_EQ(ok->a_seq.front(), src);
                    CHECK_EQ(ok->b_seq.front(), dst);
                    CHECK(ok->b_seq.back().empty());
                    // each state re-partitions src ∪ dst, and the source only grows
                    for (int k = 0; k <= ok->steps; ++k) {
                        const auto& a = ok->a_seq[static_cast<std::size_t>(k)];
                        const auto& b = ok->b_seq[static_cast<std::size_t>(k)];
                        CHECK(a.disjoint_with(b));
                        CHECK_EQ(a | b, all);
                        if (k > 0)
                            CHECK(ok->a_seq[static_cast<std::size_t>(k - 1)].is_subset_of(a));
                    }
                    // absorbing anything at all takes f+1 distinct senders
                    CHECK_GE(src.size(), f + 1);
                    CHECK_LE(ok->steps, n - f - 1);
                } else {
                    const auto& stall = std::get<trimcon::PropagationStall>(r);
                    CHECK_FALSE(stall.b_k.empty());
                    CHECK(stall.a_k.disjoint_with(stall.b_k));
                    CHECK_EQ(stall.a_k | stall.b_k, all);
                    CHECK(src.is_subset_of(stall.a_k));
                    CHECK(trimcon::absorption_set(g, f, stall.a_k, stall.b_k).empty());
                }
            });
        }
    }
}

// On a graph passing check_condition, any two-sided split of the fault-free
// nodes where the source side is not itself absorbed must drain completely.
TEST_CASE("splits of resilient graphs always drain one way") {
    for (const auto& g : corpus::small_graphs()) {
        const int n = g.node_count();
        for (int f = 0; f <= 2; ++f) {
            if (!trimcon::check_condition(g, f).satisfies()) continue;
            for_each_split(n, 3, [&](const std::vector<int>& digit) {
                NodeSet a = bucket(digit, 0);
                NodeSet b = bucket(digit, 1);
                NodeSet faulty = bucket(digit, 2);
                if (a.empty() || b.empty() || faulty.size() > f) return;
                if (!trimcon::absorbs(g, f, b, a))
                    CHECK(trimcon::propagates(trimcon::propagate(g, f, a, b)));
                // and in every case at least one direction drains
                CHECK((trimcon::propagates(trimcon::propagate(g, f, a, b)) ||
                       trimcon::propagates(trimcon::propagate(g, f, b, a))));
            });
        }
    }
}

// Growing the source (and shrinking the target by the same nodes) never
// breaks a draining split.
TEST_CASE("propagation is monotone in the source set") {
    for (const auto& g : corpus::small_graphs()) {
        for (int f = 0; f <= 2; ++f) {
            for_each_split(g.node_count(), 4, [&](const std::vector<int>& digit) {
                NodeSet p = bucket(digit, 0);
                NodeSet moved = bucket(digit, 1);
                NodeSet s = bucket(digit, 2);
                // bucket 3 plays the ignored (faulty) set
                if (p.empty() || s.empty()) return;
                if (trimcon::propagates(trimcon::propagate(g, f, p, moved | s)))
                    CHECK(trimcon::propagates(trimcon::propagate(g, f, p | moved, s)));
            });
        }
    }
}

TEST_CASE("check_condition matches the brute-force oracle on small graphs") {
    for (const auto& g : corpus::small_graphs()) {
        for (int f = 0; f <= 2; ++f) {
            auto verdict = trimcon::check_condition(g, f);
            CHECK_EQ(verdict.satisfies(), !oracle::violation_exists(g, f));
            if (!verdict.satisfies()) CHECK(trimcon::is_violating(g, f, *verdict.witness));
        }
    }
}

TEST_CASE("complete graphs need more than 3f nodes") {
    for (int f = 1; f <= 2; ++f) {
        for (int n = 2; n <= 3 * f; ++n) {
            CAPTURE(n);
            CAPTURE(f);
            CHECK_FALSE(trimcon::check_condition(trimcon::complete(n), f).satisfies());
        }
        CHECK(trimcon::check_condition(trimcon::complete(3 * f + 1), f).satisfies());
    }
}

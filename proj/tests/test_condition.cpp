#include <doctest.h>

#include <variant>

#include "trimcon/condition.hpp"
#include "trimcon/digraph.hpp"
#include "trimcon/error.hpp"
#include "trimcon/generators.hpp"

using trimcon::Digraph;
using trimcon::DomainError;
using trimcon::NodeSet;
using trimcon::PartitionWitness;

TEST_CASE("absorbs checks for a node with f+1 in-edges from the source side") {
    Digraph c7 = trimcon::chord(7, 2);
    // each node in {0,2} hears from only 2 of {1,3,4}: not enough against f=2
    CHECK_FALSE(trimcon::absorbs(c7, 2, NodeSet{1, 3, 4}, NodeSet{0, 2}));
    CHECK(trimcon::absorbs(c7, 1, NodeSet{1, 3, 4}, NodeSet{0, 2}));

    Digraph k4 = trimcon::complete(4);
    CHECK(trimcon::absorbs(k4, 1, NodeSet{1, 2}, NodeSet{3}));

    Digraph k6 = trimcon::complete(6);
    // a single source node gives each target exactly one in-edge
    CHECK_FALSE(trimcon::absorbs(k6, 1, NodeSet{5}, NodeSet{0, 1, 2, 3, 4}));
    CHECK(trimcon::absorbs(k6, 0, NodeSet{5}, NodeSet{0, 1, 2, 3, 4}));
}

TEST_CASE("absorbs validates its arguments") {
    Digraph k4 = trimcon::complete(4);
    CHECK_THROWS_AS(trimcon::absorbs(k4, 1, NodeSet{}, NodeSet{1}), DomainError);
    CHECK_THROWS_AS(trimcon::absorbs(k4, 1, NodeSet{0}, NodeSet{}), DomainError);
    CHECK_THROWS_AS(trimcon::absorbs(k4, 1, NodeSet{0, 1}, NodeSet{1, 2}), DomainError);
    CHECK_THROWS_AS(trimcon::absorbs(k4, 1, NodeSet{0}, NodeSet{4}), DomainError);
    CHECK_THROWS_AS(trimcon::absorbs(k4, -1, NodeSet{0}, NodeSet{1}), DomainError);
}

TEST_CASE("absorption_set picks out the nodes that hear enough") {
    Digraph k4 = trimcon::complete(4);
    CHECK_EQ(trimcon::absorption_set(k4, 1, NodeSet{1, 2}, NodeSet{0, 3}), NodeSet{0, 3});

    Digraph c7 = trimcon::chord(7, 2);
    CHECK(trimcon::absorption_set(c7, 2, NodeSet{1, 3, 4}, NodeSet{0, 2}).empty());

    Digraph chain(3, {{0, 1}, {1, 2}});
    CHECK(trimcon::absorption_set(chain, 0, NodeSet{2}, NodeSet{0}).empty());
    CHECK_EQ(trimcon::absorption_set(chain, 0, NodeSet{0}, NodeSet{1, 2}), NodeSet{1});
}

TEST_CASE("propagate drains a complete graph in one step") {
    Digraph k4 = trimcon::complete(4);
    auto r = trimcon::propagate(k4, 1, NodeSet{0, 1}, NodeSet{2, 3});
    REQUIRE(trimcon::propagates(r));
    const auto& ok = std::get<trimcon::PropagationSuccess>(r);
    CHECK_EQ(ok.steps, 1);
    REQUIRE_EQ(ok.a_seq.size(), 2);
    CHECK_EQ(ok.a_seq.front(), NodeSet{0, 1});
    CHECK_EQ(ok.a_seq.back(), NodeSet{0, 1, 2, 3});
    CHECK(ok.b_seq.back().empty());
}

TEST_CASE("propagate stalls when no node ever hears enough") {
    Digraph c7 = trimcon::chord(7, 2);
    auto r = trimcon::propagate(c7, 2, NodeSet{0, 2}, NodeSet{1, 3, 4});
    REQUIRE_FALSE(trimcon::propagates(r));
    const auto& stall = std::get<trimcon::PropagationStall>(r);
    CHECK_EQ(stall.steps, 0);
    CHECK_EQ(stall.a_k, NodeSet{0, 2});
    CHECK_EQ(stall.b_k, NodeSet{1, 3, 4});
}

TEST_CASE("propagate can take several steps along a chain") {
    Digraph chain(3, {{0, 1}, {1, 2}});
    auto r = trimcon::propagate(chain, 0, NodeSet{0}, NodeSet{1, 2});
    REQUIRE(trimcon::propagates(r));
    const auto& ok = std::get<trimcon::PropagationSuccess>(r);
    CHECK_EQ(ok.steps, 2);
    CHECK_EQ(ok.a_seq.back(), NodeSet{0, 1, 2});
}

TEST_CASE("is_violating recognizes the classic seven-node split") {
    Digraph c7 = trimcon::chord(7, 2);
    PartitionWitness w{NodeSet{5, 6}, NodeSet{0, 2}, NodeSet{}, NodeSet{1, 3, 4}};
    CHECK(trimcon::is_violating(c7, 2, w));
    // swapping the sides keeps the violation (the check is symmetric)
    PartitionWitness flipped{NodeSet{5, 6}, NodeSet{1, 3, 4}, NodeSet{}, NodeSet{0, 2}};
    CHECK(trimcon::is_violating(c7, 2, flipped));
}

TEST_CASE("is_violating rejects partitions of well-connected graphs") {
    Digraph k4 = trimcon::complete(4);
    CHECK_FALSE(trimcon::is_violating(k4, 1, {NodeSet{3}, NodeSet{0}, NodeSet{}, NodeSet{1, 2}}));
    CHECK_FALSE(trimcon::is_violating(k4, 1, {NodeSet{}, NodeSet{0, 1}, NodeSet{}, NodeSet{2, 3}}));
    CHECK_FALSE(trimcon::is_violating(k4, 1, {NodeSet{0}, NodeSet{1}, NodeSet{2}, NodeSet{3}}));
}

TEST_CASE("is_violating validates the partition shape") {
    Digraph k4 = trimcon::complete(4);
    // overlap
    CHECK_THROWS_AS(
        trimcon::is_violating(k4, 1, {NodeSet{0}, NodeSet{0}, NodeSet{}, NodeSet{1, 2, 3}}),
        DomainError);
    // not covering every node
    CHECK_THROWS_AS(trimcon::is_violating(k4, 1, {NodeSet{0}, NodeSet{1}, NodeSet{}, NodeSet{2}}),
                    DomainError);
    // empty side
    CHECK_THROWS_AS(
        trimcon::is_violating(k4, 1, {NodeSet{0}, NodeSet{}, NodeSet{1}, NodeSet{2, 3}}),
        DomainError);
    // too many faulty
    CHECK_THROWS_AS(
        trimcon::is_violating(k4, 1, {NodeSet{0, 1}, NodeSet{2}, NodeSet{}, NodeSet{3}}),
        DomainError);
    // out of range
    CHECK_THROWS_AS(
        trimcon::is_violating(k4, 1, {NodeSet{4}, NodeSet{0}, NodeSet{}, NodeSet{1, 2, 3}}),
        DomainError);
}

TEST_CASE("check_condition flags the seven-node chord network") {
    Digraph c7 = trimcon::chord(7, 2);
    auto verdict = trimcon::check_condition(c7, 2);
    REQUIRE_FALSE(verdict.satisfies());
    CHECK(trimcon::is_violating(c7, 2, *verdict.witness));
}

TEST_CASE("check_condition accepts robust graphs") {
    CHECK(trimcon::check_condition(trimcon::chord(5, 1), 1).satisfies());
    CHECK(trimcon::check_condition(trimcon::complete(4), 1).satisfies());
    CHECK(trimcon::check_condition(trimcon::core_network(4, 1), 1).satisfies());
}

TEST_CASE("check_condition is deterministic") {
    Digraph c7 = trimcon::chord(7, 2);
    auto a = trimcon::check_condition(c7, 2);
    auto b = trimcon::check_condition(c7, 2);
    REQUIRE_FALSE(a.satisfies());
    REQUIRE_FALSE(b.satisfies());
    CHECK_EQ(a.witness->faulty, b.witness->faulty);
    CHECK_EQ(a.witness->left, b.witness->left);
    CHECK_EQ(a.witness->center, b.witness->center);
    CHECK_EQ(a.witness->right, b.witness->right);
}

TEST_CASE("first witness for the known faulty pair is canonical") {
    Digraph c7 = trimcon::chord(7, 2);
    auto w = trimcon::find_violation_with_faulty(c7, 2, NodeSet{5, 6});
    REQUIRE(w.has_value());
    CHECK_EQ(w->faulty, NodeSet{5, 6});
    CHECK_EQ(w->left, NodeSet{1, 3, 4});
    CHECK_EQ(w->center, NodeSet{});
    CHECK_EQ(w->right, NodeSet{0, 2});
    CHECK(trimcon::is_violating(c7, 2, *w));

    // robust graph: no witness for any choice of faulty set
    Digraph k4 = trimcon::complete(4);
    for (int i = 0; i < 4; ++i) {
        CHECK_FALSE(trimcon::find_violation_with_faulty(k4, 1, NodeSet{i}).has_value());
    }
    CHECK_FALSE(trimcon::find_violation_with_faulty(k4, 1, NodeSet{}).has_value());
}

TEST_CASE("check_condition guards against oversized searches") {
    Digraph k16 = trimcon::complete(16);
    CHECK_THROWS_WITH_AS(trimcon::check_condition(k16, 1), doctest::Contains("15"), DomainError);
    CHECK_THROWS_AS(trimcon::enumerate_violation(k16, 1), DomainError);
    CHECK_THROWS_AS(trimcon::find_violation_with_faulty(k16, 1, NodeSet{0}), DomainError);
    // forcing runs the full search (kept cheap with f = 0)
    CHECK(trimcon::check_condition(k16, 0, /*force=*/true).satisfies());
}

TEST_CASE("degree shortcut agrees with the plain enumeration") {
    Digraph q3 = trimcon::hypercube(3);
    auto fast = trimcon::check_condition(q3, 2);
    auto plain = trimcon::enumerate_violation(q3, 2);
    REQUIRE_FALSE(fast.satisfies());
    REQUIRE(plain.has_value());
    CHECK(trimcon::is_violating(q3, 2, *plain));

    Digraph q2 = trimcon::hypercube(2);
    REQUIRE_FALSE(trimcon::check_condition(q2, 1).satisfies());
    REQUIRE(trimcon::enumerate_violation(q2, 1).has_value());
}

TEST_CASE("forced checks run on low-degree graphs past the guard") {
    Digraph q4 = trimcon::hypercube(4);
    CHECK_THROWS_AS(trimcon::check_condition(q4, 2), DomainError);
    // the degree shortcut makes this instant even though n = 16
    auto verdict = trimcon::check_condition(q4, 2, /*force=*/true);
    REQUIRE_FALSE(verdict.satisfies());
    CHECK(trimcon::is_violating(q4, 2, *verdict.witness));
}

TEST_CASE("low in-degree graphs yield witnesses") {
    Digraph q3 = trimcon::hypercube(3);
    auto verdict = trimcon::check_condition(q3, 2);
    REQUIRE_FALSE(verdict.satisfies());
    CHECK(trimcon::is_violating(q3, 2, *verdict.witness));

    Digraph q2 = trimcon::hypercube(2);
    auto v2 = trimcon::check_condition(q2, 1);
    REQUIRE_FALSE(v2.satisfies());
    CHECK(trimcon::is_violating(q2, 1, *v2.witness));
}

TEST_CASE("two isolated halves violate even with no faults") {
    Digraph k2 = trimcon::complete(2);
    auto verdict = trimcon::check_condition(k2, 1);
    REQUIRE_FALSE(verdict.satisfies());
    CHECK(trimcon::is_violating(k2, 1, *verdict.witness));

    Digraph split(2, {});
    auto v0 = trimcon::check_condition(split, 0);
    REQUIRE_FALSE(v0.satisfies());
    // first hit in base-3 order: node 0 -> right before node 1 leaves left
    CHECK_EQ(v0.witness->faulty, NodeSet{});
    CHECK_EQ(v0.witness->left, NodeSet{1});
    CHECK_EQ(v0.witness->right, NodeSet{0});
}

TEST_CASE("check_condition rejects negative fault bounds") {
    CHECK_THROWS_AS(trimcon::check_condition(trimcon::complete(4), -1), DomainError);
}

TEST_CASE("min_in_degree_ok") {
    CHECK(trimcon::min_in_degree_ok(trimcon::chord(7, 2), 2));
    CHECK_FALSE(trimcon::min_in_degree_ok(trimcon::hypercube(3), 2));
    CHECK(trimcon::min_in_degree_ok(trimcon::hypercube(3), 1));
    CHECK(trimcon::min_in_degree_ok(Digraph(2, {}), 0));
}

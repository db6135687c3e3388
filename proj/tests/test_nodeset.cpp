#include <doctest.h>

#include <set>
#include <vector>

#include "trimcon/error.hpp"
#include "trimcon/nodeset.hpp"
#include "trimcon/rng.hpp"

using trimcon::DomainError;
using trimcon::NodeSet;

TEST_CASE("nodeset basics") {
    NodeSet s{3, 1, 4};
    CHECK(s.contains(1));
    CHECK(s.contains(3));
    CHECK(s.contains(4));
    CHECK_FALSE(s.contains(0));
    CHECK_FALSE(s.contains(-1));
    CHECK_EQ(s.size(), 3);
    CHECK_EQ(s.first(), 1);
    CHECK_EQ(s.last(), 4);
    CHECK_FALSE(s.empty());
    CHECK_EQ(s.to_vector(), std::vector<int>{1, 3, 4});

    s.erase(3);
    CHECK_EQ(s.to_vector(), std::vector<int>{1, 4});
    s.erase(100);  // absent: no-op
    CHECK_EQ(s.size(), 2);

    CHECK(NodeSet{}.empty());
    CHECK_EQ(NodeSet{}.first(), -1);
    CHECK_EQ(NodeSet{}.last(), -1);
    CHECK_EQ(NodeSet::range(4).to_vector(), std::vector<int>{0, 1, 2, 3});
    CHECK(NodeSet::range(0).empty());
}

TEST_CASE("nodeset equality ignores construction history") {
    NodeSet a{200};
    a.erase(200);
    CHECK_EQ(a, NodeSet{});

    NodeSet b{1, 2};
    NodeSet c{2};
    c.insert(1);
    CHECK_EQ(b, c);
}

TEST_CASE("nodeset masks") {
    NodeSet s = NodeSet::from_mask(0b101001);
    CHECK_EQ(s.to_vector(), std::vector<int>{0, 3, 5});
    CHECK_EQ(s.to_mask64(), 0b101001u);
    CHECK_EQ(NodeSet::from_mask(0), NodeSet{});
    NodeSet big{70};
    CHECK_THROWS_AS(big.to_mask64(), DomainError);
}

TEST_CASE("nodeset rejects negative ids") {
    NodeSet s;
    CHECK_THROWS_AS(s.insert(-1), DomainError);
    CHECK_THROWS_AS(s.erase(-2), DomainError);
}

TEST_CASE("nodeset set algebra") {
    NodeSet a{0, 2, 4};
    NodeSet b{2, 3};
    CHECK_EQ((a | b).to_vector(), std::vector<int>{0, 2, 3, 4});
    CHECK_EQ((a & b).to_vector(), std::vector<int>{2});
    CHECK_EQ((a - b).to_vector(), std::vector<int>{0, 4});
    CHECK_EQ(a.intersection_size(b), 1);
    CHECK_FALSE(a.disjoint_with(b));
    CHECK(a.disjoint_with(NodeSet{1, 3}));
    CHECK(NodeSet{2}.is_subset_of(b));
    CHECK_FALSE(b.is_subset_of(a));
    CHECK(NodeSet{}.is_subset_of(a));
    CHECK(a.within(5));
    CHECK_FALSE(a.within(4));
}

TEST_CASE("nodeset matches a std::set model under random ops") {
    NodeSet s;
    std::set<int> model;
    for (int step = 0; step < 3000; ++step) {
        auto r = trimcon::mix64(static_cast<std::uint64_t>(step) * 2654435761u + 17);
        int id = static_cast<int>(r % 150);
        switch ((r >> 20) % 3) {
            case 0:
                s.insert(id);
                model.insert(id);
                break;
            case 1:
                s.erase(id);
                model.erase(id);
                break;
            default:
                CHECK_EQ(s.contains(id), model.count(id) > 0);
                break;
        }
        if (step % 97 == 0) {
            CHECK_EQ(s.size(), static_cast<int>(model.size()));
            CHECK_EQ(s.to_vector(), std::vector<int>(model.begin(), model.end()));
            CHECK_EQ(s.first(), model.empty() ? -1 : *model.begin());
            CHECK_EQ(s.last(), model.empty() ? -1 : *model.rbegin());
        }
    }
}

TEST_CASE("nodeset algebra matches set operations on random pairs") {
    for (int round = 0; round < 200; ++round) {
        NodeSet a, b;
        std::set<int> ma, mb;
        for (int k = 0; k < 20; ++k) {
            int x = static_cast<int>(trimcon::mix64(round * 41 + k) % 70);
            int y = static_cast<int>(trimcon::mix64(round * 41 + k + 1000) % 70);
            a.insert(x);
            ma.insert(x);
            b.insert(y);
            mb.insert(y);
        }
        std::set<int> mu = ma, mi, md = ma;
        mu.insert(mb.begin(), mb.end());
        for (int x : ma)
            if (mb.count(x)) mi.insert(x);
        for (int x : mb) md.erase(x);
        CHECK_EQ((a | b).to_vector(), std::vector<int>(mu.begin(), mu.end()));
        CHECK_EQ((a & b).to_vector(), std::vector<int>(mi.begin(), mi.end()));
        CHECK_EQ((a - b).to_vector(), std::vector<int>(md.begin(), md.end()));
        CHECK_EQ(a.intersection_size(b), static_cast<int>(mi.size()));
        CHECK_EQ(a.disjoint_with(b), mi.empty());
    }
}

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace trimcon {

// Set of non-negative node ids backed by 64-bit words. Words past the last
// set bit are trimmed after every mutation so equal sets compare equal no
// matter how they were built.
class NodeSet {
public:
    NodeSet() = default;
    NodeSet(std::initializer_list<int> ids);

    // {0, 1, ..., n-1}
    static NodeSet range(int n);
    // Set holding the positions of the set bits of `mask`.
    static NodeSet from_mask(std::uint64_t mask);

    void insert(int id);
    void erase(int id);
    bool contains(int id) const;

    bool empty() const { return words_.empty(); }
    int size() const;

    bool disjoint_with(const NodeSet& other) const;
    bool is_subset_of(const NodeSet& other) const;
    int intersection_size(const NodeSet& other) const;

    // Smallest / largest member, or -1 when empty.
    int first() const;
    int last() const;

    // True when every member is < n.
    bool within(int n) const { return last() < n; }

    // Members packed into one word; requires last() < 64.
    std::uint64_t to_mask64() const;

    // Members in ascending order.
    std::vector<int> to_vector() const;

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t word = words_[w];
            while (word != 0) {
                fn(static_cast<int>(w * 64 + std::countr_zero(word)));
                word &= word - 1;
            }
        }
    }

    NodeSet& operator|=(const NodeSet& other);
    NodeSet& operator&=(const NodeSet& other);
    NodeSet& operator-=(const NodeSet& other);
    friend NodeSet operator|(NodeSet a, const NodeSet& b) { return a |= b; }
    friend NodeSet operator&(NodeSet a, const NodeSet& b) { return a &= b; }
    friend NodeSet operator-(NodeSet a, const NodeSet& b) { return a -= b; }

    bool operator==(const NodeSet& other) const = default;

private:
    std::vector<std::uint64_t> words_;

    void trim();
};

}  // namespace trimcon

#include "trimcon/nodeset.hpp"

#include <algorithm>

#include "trimcon/error.hpp"

namespace trimcon {

namespace {
void check_id(int id) {
    if (id < 0) throw DomainError("node id must be non-negative, got " + std::to_string(id));
}
}  // namespace

NodeSet::NodeSet(std::initializer_list<int> ids) {
    for (int id : ids) insert(id);
}

NodeSet NodeSet::range(int n) {
    NodeSet s;
    for (int i = 0; i < n; ++i) s.insert(i);
    return s;
}

NodeSet NodeSet::from_mask(std::uint64_t mask) {
    NodeSet s;
    if (mask != 0) s.words_.push_back(mask);
    return s;
}

void NodeSet::insert(int id) {
    check_id(id);
    std::size_t w = static_cast<std::size_t>(id) / 64;
    if (w >= words_.size()) words_.resize(w + 1, 0);
    words_[w] |= std::uint64_t{1} << (id % 64);
}

void NodeSet::erase(int id) {
    check_id(id);
    std::size_t w = static_cast<std::size_t>(id) / 64;
    if (w < words_.size()) {
        words_[w] &= ~(std::uint64_t{1} << (id % 64));
        trim();
    }
}

bool NodeSet::contains(int id) const {
    if (id < 0) return false;
    std::size_t w = static_cast<std::size_t>(id) / 64;
    return w < words_.size() && (words_[w] >> (id % 64)) & 1;
}

int NodeSet::size() const {
    int total = 0;
    for (std::uint64_t word : words_) total += std::popcount(word);
    return total;
}

bool NodeSet::disjoint_with(const NodeSet& other) const {
    std::size_t common = std::min(words_.size(), other.words_.size());
    for (std::size_t w = 0; w < common; ++w)
        if (words_[w] & other.words_[w]) return false;
    return true;
}

bool NodeSet::is_subset_of(const NodeSet& other) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t theirs = w < other.words_.size() ? other.words_[w] : 0;
        if (words_[w] & ~theirs) return false;
    }
    return true;
}

int NodeSet::intersection_size(const NodeSet& other) const {
    std::size_t common = std::min(words_.size(), other.words_.size());
    int total = 0;
    for (std::size_t w = 0; w < common; ++w) total += std::popcount(words_[w] & other.words_[w]);
    return total;
}

int NodeSet::first() const {
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w] != 0) return static_cast<int>(w * 64 + std::countr_zero(words_[w]));
    return -1;
}

int NodeSet::last() const {
    if (words_.empty()) return -1;
    std::size_t w = words_.size() - 1;
    return static_cast<int>(w * 64 + 63 - std::countl_zero(words_[w]));
}

std::uint64_t NodeSet::to_mask64() const {
    if (last() >= 64) throw DomainError("set does not fit in a 64-bit mask");
    return words_.empty() ? 0 : words_[0];
}

std::vector<int> NodeSet::to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each([&](int id) { out.push_back(id); });
    return out;
}

NodeSet& NodeSet::operator|=(const NodeSet& other) {
    if (other.words_.size() > words_.size()) words_.resize(other.words_.size(), 0);
    for (std::size_t w = 0; w < other.words_.size(); ++w) words_[w] |= other.words_[w];
    return *this;
}

NodeSet& NodeSet::operator&=(const NodeSet& other) {
    if (words_.size() > other.words_.size()) words_.resize(other.words_.size());
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
    trim();
    return *this;
}

NodeSet& NodeSet::operator-=(const NodeSet& other) {
    std::size_t common = std::min(words_.size(), other.words_.size());
    for (std::size_t w = 0; w < common; ++w) words_[w] &= ~other.words_[w];
    trim();
    return *this;
}

void NodeSet::trim() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

}  // namespace trimcon

#include "trimcon/digraph.hpp"

#include <algorithm>
#include <string>

#include "trimcon/error.hpp"

namespace trimcon {

Digraph::Digraph(int n, std::vector<std::pair<int, int>> edges)
    : n_(n), edges_(std::move(edges)) {
    if (n < 2) throw DomainError("graph needs at least 2 nodes, got " + std::to_string(n));
    std::sort(edges_.begin(), edges_.end());
    in_.resize(static_cast<std::size_t>(n));
    out_.resize(static_cast<std::size_t>(n));
    const std::pair<int, int>* prev = nullptr;
    for (const auto& e : edges_) {
        auto [from, to] = e;
        if (from < 0 || from >= n || to < 0 || to >= n)
            throw DomainError("edge (" + std::to_string(from) + ", " + std::to_string(to) +
                              ") out of range for " + std::to_string(n) + " nodes");
        if (from == to)
            throw DomainError("self-loop at node " + std::to_string(from));
        if (prev != nullptr && *prev == e)
            throw DomainError("duplicate edge (" + std::to_string(from) + ", " +
                              std::to_string(to) + ")");
        prev = &e;
        out_[static_cast<std::size_t>(from)].insert(to);
        in_[static_cast<std::size_t>(to)].insert(from);
    }
}

bool Digraph::has_edge(int from, int to) const {
    return from >= 0 && from < n_ && out_[static_cast<std::size_t>(from)].contains(to);
}

const NodeSet& Digraph::in_neighbors(int i) const {
    check_node(i);
    return in_[static_cast<std::size_t>(i)];
}

const NodeSet& Digraph::out_neighbors(int i) const {
    check_node(i);
    return out_[static_cast<std::size_t>(i)];
}

int Digraph::min_in_degree() const {
    int best = n_;
    for (int i = 0; i < n_; ++i) best = std::min(best, in_degree(i));
    return best;
}

void Digraph::check_node(int i) const {
    if (i < 0 || i >= n_)
        throw DomainError("node " + std::to_string(i) + " out of range for " +
                          std::to_string(n_) + " nodes");
}

}  // namespace trimcon

#pragma once

#include <utility>
#include <vector>

#include "trimcon/nodeset.hpp"

namespace trimcon {

// Simple directed graph on nodes 0..n-1: no self-loops, no duplicate edges.
// An edge (from, to) means `from` sends messages to `to`.
class Digraph {
public:
    // Throws DomainError unless n >= 2 and every edge is in range, not a
    // self-loop and not a duplicate.
    Digraph(int n, std::vector<std::pair<int, int>> edges);

    int node_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    bool has_edge(int from, int to) const;

    // Nodes with an edge into / out of i. Throws DomainError when i is out of
    // range.
    const NodeSet& in_neighbors(int i) const;
    const NodeSet& out_neighbors(int i) const;

    int in_degree(int i) const { return in_neighbors(i).size(); }
    int min_in_degree() const;

    // All edges in ascending (from, to) order.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool operator==(const Digraph& other) const = default;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<NodeSet> in_;
    std::vector<NodeSet> out_;

    void check_node(int i) const;
};

}  // namespace trimcon

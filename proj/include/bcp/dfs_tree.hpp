#pragma once

#include <vector>

#include "bcp/graph.hpp"

namespace bcp {

/// Rooted DFS tree over a vertex subset. parent/children/subtree_weight are
/// indexed by vertex id; entries outside the domain are kept cleared
/// (parent -1, no children, subtree weight 0).
struct DfsTree {
    int root = -1;
    std::vector<int> parent;
    std::vector<std::vector<int>> children;
    std::vector<Weight> subtree_weight;
    VertexSet domain;
    std::vector<char> in_domain;

    bool empty() const { return domain.empty(); }
    Weight total_weight() const { return domain.weight; }

    /// Vertices in post order (children before parent, children in stored order).
    std::vector<int> post_order() const;
};

/// DFS from `root` over the subgraph induced by `subset`, visiting sorted
/// neighbors in ascending order.
DfsTree dfs_tree(const WeightedGraph& g, const VertexSet& subset, int root);

/// Checks all DfsTree invariants: tree edges are graph edges, the tree spans
/// its domain, subtree weights add up, and every non-tree edge of the induced
/// subgraph joins an ancestor-descendant pair.
bool validate_dfs_tree(const WeightedGraph& g, const DfsTree& tree);

} // namespace bcp

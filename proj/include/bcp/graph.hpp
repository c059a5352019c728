#pragma once

#include <span>
#include <utility>
#include <vector>

#include "bcp/errors.hpp"

namespace bcp {

using Weight = long long;
using Edge = std::pair<int, int>;

/// Set of vertex ids with a cached total weight. Members are kept sorted,
/// so equality and iteration order are canonical.
struct VertexSet {
    std::vector<int> members;
    Weight weight = 0;

    bool empty() const { return members.empty(); }
    int size() const { return (int)members.size(); }
    int smallest() const { return members.front(); }
    bool contains(int v) const;

    bool operator==(const VertexSet& o) const { return members == o.members; }
};

/// Immutable simple undirected graph with positive integer vertex weights.
/// Adjacency lists are sorted, which makes every traversal in the library
/// deterministic.
class WeightedGraph {
public:
    WeightedGraph() = default;

    int num_vertices() const { return n_; }
    std::span<const int> neighbors(int v) const { return adjacency_[v]; }
    int degree(int v) const { return (int)adjacency_[v].size(); }
    Weight weight(int v) const { return weights_[v]; }
    Weight total_weight() const { return total_weight_; }
    Weight max_weight() const { return max_weight_; }
    long long num_edges() const { return num_edges_; }
    bool has_edge(int u, int v) const;

    /// Edges as (u,v) with u < v, sorted lexicographically.
    std::vector<Edge> edges() const;

    VertexSet all_vertices() const;
    VertexSet make_set(std::vector<int> members) const;
    Weight weight_of(std::span<const int> members) const;

    friend WeightedGraph build_graph(int n, std::span<const Edge> edges,
                                     std::span<const Weight> weights);

private:
    int n_ = 0;
    std::vector<std::vector<int>> adjacency_;
    std::vector<Weight> weights_;
    Weight total_weight_ = 0;
    Weight max_weight_ = 0;
    long long num_edges_ = 0;
};

/// Validates ids, simplicity and weight positivity, then assembles the graph.
WeightedGraph build_graph(int n, std::span<const Edge> edges, std::span<const Weight> weights);

/// Connected components of the subgraph induced by `subset`, ordered by
/// smallest member id; members of each component sorted.
std::vector<VertexSet> connected_components(const WeightedGraph& g, const VertexSet& subset);

/// True iff the induced subgraph is connected. The empty set is not connected.
bool is_connected(const WeightedGraph& g, const VertexSet& subset);

/// N_G(subset): union of neighborhoods minus the set itself.
VertexSet neighbors_of_set(const WeightedGraph& g, const VertexSet& subset);

/// Union / difference of sorted vertex sets with weight upkeep.
VertexSet set_union(const WeightedGraph& g, const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const WeightedGraph& g, const VertexSet& a, const VertexSet& b);

} // namespace bcp

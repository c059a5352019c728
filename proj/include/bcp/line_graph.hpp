#pragma once

#include <vector>

#include "bcp/graph.hpp"

namespace bcp {

/// Graph together with an explicit edge order and per-edge weights.
/// The edge order defines the line-vertex ids, so callers (notably the file
/// reader) control how line vertices map back to their edges.
struct EdgeWeightedGraph {
    WeightedGraph graph;
    std::vector<Edge> edges;
    std::vector<Weight> edge_weights;
};

struct LineGraphResult {
    WeightedGraph line;
    std::vector<Edge> edge_of_vertex; // line vertex i <-> edge_of_vertex[i]
};

/// One line vertex per edge (weight = edge weight); two line vertices are
/// adjacent iff their edges share an endpoint.
LineGraphResult line_graph(const EdgeWeightedGraph& g);

} // namespace bcp

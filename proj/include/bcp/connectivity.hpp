#pragma once

#include "bcp/graph.hpp"

namespace bcp {

/// Menger check: true iff g has at least k+1 vertices and no vertex cut of
/// size < k. Runs a unit-vertex-capacity max-flow for every non-adjacent
/// pair, so use it for input validation only.
bool vertex_connectivity_at_least(const WeightedGraph& g, int k);

} // namespace bcp

#pragma once

#include <optional>

#include "bcp/graph.hpp"

namespace bcp {

/// Searches for an induced K_{1,c}. Returns a witness (center + c pairwise
/// non-adjacent neighbors) or nullopt if the graph is c-claw-free.
///
/// Enumerates independent c-subsets of each neighborhood with backtracking,
/// so the cost grows quickly with degree and c; intended as a validator, not
/// something to call inside an algorithm loop.
std::optional<ClawWitness> is_claw_free(const WeightedGraph& g, int c);

} // namespace bcp

#pragma once

#include <optional>

#include "bcp/dfs_tree.hpp"
#include "bcp/line_graph.hpp"
#include "bcp/oracle.hpp"

namespace bcp {

struct BcpSolution {
    Partition parts;
    Weight objective = 0;          // max part weight (min_max) / min part weight (max_min)
    Objective mode = Objective::min_max;
    Weight lower_certificate = 0;  // lambda used (min_max) or final search value (max_min)
};

struct ExtractResult {
    VertexSet set;
    std::optional<DfsTree> remainder; // nullopt when the set consumed the whole domain
};

/// Cuts a connected set S with lambda <= w(S) < (c-1)*lambda out of the tree
/// domain, leaving the rest connected together with a valid DFS tree for it.
/// Requires w(domain) >= lambda >= max vertex weight in the domain, and the
/// induced subgraph to be c-claw-free; a violation of the latter can surface
/// as ClawWitnessError, certifying an induced K_{1,c}.
ExtractResult extract_bounded_set(const WeightedGraph& g, const DfsTree& tree, Weight lambda,
                                  int c);

/// Repeated extraction: a connected partition S_1..S_m of `subset` with
/// w(S_i) in [lambda, (c-1)*lambda) for i < m and w(S_m) < (c-1)*lambda.
/// Removing any prefix S_1..S_j leaves the rest connected.
Partition balanced_partition(const WeightedGraph& g, const VertexSet& subset, Weight lambda,
                             int c);

/// (c-1)-approximation for Min-Max BCP on c-claw-free graphs.
BcpSolution min_max_bcp(const WeightedGraph& g, int k, int c);

/// For X <= ceil(w(G)/k): either a k-partition with every part of weight at
/// least floor(X/(c-1)), or nullopt certifying X > OPT(max-min).
std::optional<Partition> max_min_feasible(const WeightedGraph& g, int k, int c, Weight x);

/// (c-1)-approximation for Max-Min BCP: doubling then binary search over X.
BcpSolution max_min_bcp(const WeightedGraph& g, int k, int c);

struct BcepSolution {
    std::vector<std::vector<int>> edge_parts; // indices into the input edge list
    Weight objective = 0;
    BcpSolution line_solution;
};

/// Balanced connected edge partition via the line graph (c = 3, factor 2).
BcepSolution bcep(const EdgeWeightedGraph& g, int k, Objective mode);

/// Merges (quotient-adjacent, lightest-first) or splits (non-cut vertices off
/// multi-vertex parts) until the partition has exactly k parts.
Partition adjust_part_count(const WeightedGraph& g, Partition parts, int k, Objective mode);

} // namespace bcp

#pragma once

#include <functional>
#include <set>
#include <vector>

#include "bcp/frac.hpp"
#include "bcp/graph.hpp"

namespace bcp {

using Partition = std::vector<VertexSet>;

enum class Objective { min_max, max_min };

/// Caps for the exhaustive computations below.
struct OracleBudget {
    int max_vertices = 10;
    int max_parts = 5;
};

/// Visits every partition of V into k non-empty connected blocks exactly
/// once, in restricted-growth-string order. Return false from the visitor to
/// stop early.
void enumerate_connected_k_partitions(const WeightedGraph& g, int k,
                                      const std::function<bool(const Partition&)>& visit,
                                      const OracleBudget& budget = {});

/// Convenience collector for small instances.
std::vector<Partition> collect_connected_k_partitions(const WeightedGraph& g, int k,
                                                      const OracleBudget& budget = {});

/// Exact optimum of Min-Max / Max-Min BCP by enumeration.
Weight oracle_opt_bcp(const WeightedGraph& g, int k, Objective mode,
                      const OracleBudget& budget = {});

struct DivideOracle {
    bool dividable = false;
    std::set<int> separators;
};

/// Exhaustive lambda-dividability and lambda-separator classification of the
/// subgraph induced by `subset`.
DivideOracle oracle_divide(const WeightedGraph& g, const VertexSet& subset, Weight lambda,
                           const OracleBudget& budget = {});

/// True iff some connected k-partition has lower*w_i <= w(T_i) <= upper*w_i
/// for all i under some assignment of blocks to targets.
bool oracle_gl_feasible(const WeightedGraph& g, const std::vector<Weight>& targets,
                        const Frac& lower, const Frac& upper, const OracleBudget& budget = {});

} // namespace bcp

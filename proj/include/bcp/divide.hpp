#pragma once

#include <optional>
#include <utility>

#include "bcp/frac.hpp"
#include "bcp/graph.hpp"

namespace bcp {

/// Either a vertex whose removal leaves only components lighter than lambda,
/// or a 2-way connected split with both sides weighing at least lambda.
struct DivideResult {
    enum class Kind { separator, split };
    Kind kind = Kind::separator;
    int separator = -1;
    VertexSet first;
    VertexSet second;
};

/// Decides lambda-dividability of the induced subgraph: returns a verified
/// Split when one exists along the construction below, otherwise a verified
/// lambda-separator. Requires subset connected, lambda > max vertex weight in
/// subset and w(subset) > 3*(lambda-1).
///
/// Construction (spanning tree based, O(|V|+|E|)):
///   1. if some tree edge splits the tree into two sides of weight >= lambda,
///      that is a Split;
///   2. otherwise every tree edge has exactly one heavy side; following the
///      heavy orientation from the root reaches a sink s whose tree
///      components are all light;
///   3. if the components of G - s are all light, s is a separator; if some
///      component C is heavy but its complement still weighs >= lambda, split
///      off C; otherwise accumulate tree components inside C (connected
///      order) until the accumulated side reaches lambda - the complement
///      stays connected through s and cannot fall below lambda.
DivideResult divide_or_separator(const WeightedGraph& g, const VertexSet& subset, Weight lambda);

/// Same construction with a rational threshold; valid whenever
/// w(subset) >= 3*lambda (the regime in which the partitioners call it).
DivideResult divide_with_threshold(const WeightedGraph& g, const VertexSet& subset,
                                   const Frac& lambda);

/// Claim-style split through a known lambda-separator s of T: if the graph on
/// V(comps) + Q has a component of weight >= lambda, greedily absorbs the
/// components adjacent to Q (smallest member first) until the Q side reaches
/// lambda and returns the split of T + Q; otherwise nullopt, in which case
/// removing the component attached to Q keeps the rest at weight >= 2*lambda.
/// Requires: comps = components of T - s, all lighter than lambda;
/// w(T) >= 2*lambda; w(T + Q) >= 3*lambda; w(Q) < lambda.
std::optional<std::pair<VertexSet, VertexSet>>
try_divide_with_separator(const WeightedGraph& g, const VertexSet& T, int s,
                          const std::vector<VertexSet>& comps, const VertexSet& Q,
                          const Frac& lambda);

} // namespace bcp

#pragma once

#include <optional>
#include <vector>

#include "bcp/divide.hpp"
#include "bcp/frac.hpp"
#include "bcp/graph.hpp"
#include "bcp/oracle.hpp"

namespace bcp {

/// Descending target weights w_1 >= ... >= w_k with the ratio r = w_1/w_k.
struct TargetWeights {
    std::vector<Weight> targets;

    explicit TargetWeights(std::vector<Weight> values);

    int k() const { return (int)targets.size(); }
    Weight operator[](int i) const { return targets[i]; }
    Weight sum() const;
    Frac ratio() const { return Frac(targets.front(), targets.back()); }
};

/// Category cache for one packing set.
struct SetCategory {
    enum class Kind { uncategorized, no_separator, has_separator };
    Kind kind = Kind::uncategorized;
    int separator = -1;
    std::vector<VertexSet> comps; // components of the set minus its separator
};

/// Connected packing indexed by target position. Unfilled slots are empty
/// sets; fixed_singletons records which slots were pinned by preprocessing.
struct GlPacking {
    std::vector<VertexSet> sets;
    std::vector<SetCategory> categories;
    std::vector<int> fixed_singletons; // slot -> vertex, -1 if not fixed

    int k() const { return (int)sets.size(); }
    int filled_count() const;
    VertexSet covered(const WeightedGraph& g) const;
};

struct PreprocessResult {
    VertexSet working;                 // vertices left for the main loop
    std::vector<Weight> reduced;       // surviving targets (descending)
    std::vector<int> reduced_slot;     // position of reduced[i] in the original list
    std::vector<int> fixed_singletons; // original slot -> vertex, -1 if none
};

/// Peels maximum-weight vertices into singleton slots while the heaviest
/// vertex reaches alpha times some target, starting from the largest such
/// target. Afterwards the residual satisfies w_max < alpha * (smallest
/// remaining target).
PreprocessResult preprocess_heavy(const WeightedGraph& g, const TargetWeights& targets,
                                  const Frac& alpha);

/// Counters the callers assert on.
struct GlStats {
    long long outer_iterations = 0;
    long long max_inner_iterations = 0; // max per inner-loop activation
    long long transfer_iterations = 0;  // while-loop rounds of the both-side phase
};

/// Packing with alpha*w_i <= w(T_i) <= 3*alpha*w_i per filled slot; if fewer
/// than k slots fill, the packing covers every vertex.
GlPacking bounded_gl(const WeightedGraph& g, const TargetWeights& targets, const Frac& alpha,
                     GlStats* stats = nullptr);

/// Connected set of weight in [alpha*w_i, 3*alpha*w_i] grown by BFS inside a
/// big-enough component of the subgraph induced by `working`.
VertexSet carve_set(const WeightedGraph& g, const VertexSet& working, Weight target,
                    const Frac& alpha);

enum class GlSide { lower, upper };

/// One-side bounded connected partition: every part weighs >= w_i/3 (lower)
/// or <= 3*w_i (upper).
Partition gl_one_side(const WeightedGraph& g, const TargetWeights& targets, GlSide side,
                      GlStats* stats = nullptr);

struct TransferNode {
    enum class Kind { tb_component, ta_set, t_minus_set, q_set };
    Kind kind;
    int owner; // packing slot for the first three kinds, -1 for q_set
    VertexSet vertices;
};

struct TransferGraph {
    std::vector<TransferNode> nodes;
    std::vector<std::vector<int>> adj;
};

/// Auxiliary routing graph over packing fragments and leftover components.
/// Separator vertices of satisfied-with-separator sets appear in no node.
TransferGraph build_transfer_graph(const WeightedGraph& g, const GlPacking& packing,
                                   const TargetWeights& targets);

/// Shortest path (BFS, smallest-id tie break) from a leftover component to an
/// unsatisfied set; interior nodes are satisfied fragments by minimality.
std::vector<int> find_transfer_path(const TransferGraph& h);

/// Routes vertices along the path; afterwards the packing is pack-satisfied
/// and either the satisfied prefix grew or the same prefix covers more
/// vertices.
void transfer_vertices(const WeightedGraph& g, GlPacking& packing, const TargetWeights& targets,
                       const TransferGraph& h, const std::vector<int>& path);

/// Removes non-cut vertices (smallest id first) while the weight exceeds
/// `upper`; never drops below `lower` because no vertex outweighs it.
VertexSet truncate_set(const WeightedGraph& g, VertexSet t, Weight lower, const Frac& upper);

/// Both-side bounded partition: w_i/3 <= w(T_i) <= max{r,3}*w_i.
Partition double_bounded_gl(const WeightedGraph& g, const TargetWeights& targets,
                            GlStats* stats = nullptr);

/// Near-equal targets floor/ceil of w(G)/k; parts land in
/// [floor(w(G)/k)/3, 3*ceil(w(G)/k)].
Partition balanced_kconnected(const WeightedGraph& g, int k, GlStats* stats = nullptr);

/// Per-iteration invariant assertions (also enabled by the
/// PARTITION_DEBUG_ASSERTS=1 environment variable through the CLI).
void set_debug_asserts(bool enabled);
bool debug_asserts_enabled();

} // namespace bcp

#include "bcp/graph.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace bcp {

const char* errc_name(errc code) {
    switch (code) {
    case errc::loop_edge: return "LoopEdge";
    case errc::duplicate_edge: return "DuplicateEdge";
    case errc::non_positive_weight: return "NonPositiveWeight";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::not_connected: return "NotConnected";
    case errc::root_outside_subset: return "RootOutsideSubset";
    case errc::no_edges: return "NoEdges";
    case errc::too_few_vertices: return "TooFewVertices";
    case errc::too_few_edges: return "TooFewEdges";
    case errc::x_out_of_range: return "XOutOfRange";
    case errc::cannot_reach_k: return "CannotReachK";
    case errc::claw_witness_found: return "ClawWitnessFound";
    case errc::precondition_violated: return "PreconditionViolated";
    case errc::no_big_component: return "NoBigComponent";
    case errc::no_path: return "NoPath";
    case errc::internal_invariant_violation: return "InternalInvariantViolation";
    case errc::inner_loop_cap_exceeded: return "InnerLoopCapExceeded";
    case errc::loop_cap_exceeded: return "LoopCapExceeded";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::no_partition_exists: return "NoPartitionExists";
    case errc::generation_failed: return "GenerationFailed";
    case errc::invalid_spec: return "InvalidSpec";
    case errc::parse_error: return "ParseError";
    case errc::inconsistent_header: return "InconsistentHeader";
    }
    return "UnknownError";
}

bool VertexSet::contains(int v) const {
    return std::binary_search(members.begin(), members.end(), v);
}

bool WeightedGraph::has_edge(int u, int v) const {
    const auto& a = adjacency_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

std::vector<Edge> WeightedGraph::edges() const {
    std::vector<Edge> out;
    out.reserve((size_t)num_edges_);
    for (int u = 0; u < n_; ++u)
        for (int v : adjacency_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

VertexSet WeightedGraph::all_vertices() const {
    VertexSet s;
    s.members.resize(n_);
    for (int v = 0; v < n_; ++v) s.members[v] = v;
    s.weight = total_weight_;
    return s;
}

VertexSet WeightedGraph::make_set(std::vector<int> members) const {
    std::sort(members.begin(), members.end());
    VertexSet s;
    s.members = std::move(members);
    s.weight = weight_of(s.members);
    return s;
}

Weight WeightedGraph::weight_of(std::span<const int> members) const {
    Weight w = 0;
    for (int v : members) w += weights_[v];
    return w;
}

WeightedGraph build_graph(int n, std::span<const Edge> edges, std::span<const Weight> weights) {
    if (n < 0) throw Error(errc::index_out_of_range, "negative vertex count");
    if ((int)weights.size() != n)
        throw Error(errc::index_out_of_range,
                    "expected " + std::to_string(n) + " weights, got " +
                        std::to_string(weights.size()));

    WeightedGraph g;
    g.n_ = n;
    g.adjacency_.assign(n, {});
    g.weights_.assign(weights.begin(), weights.end());
    for (int v = 0; v < n; ++v) {
        if (g.weights_[v] < 1)
            throw Error(errc::non_positive_weight,
                        "vertex " + std::to_string(v) + " has weight " +
                            std::to_string(g.weights_[v]));
        g.total_weight_ += g.weights_[v];
        g.max_weight_ = std::max(g.max_weight_, g.weights_[v]);
    }

    std::set<Edge> seen;
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw Error(errc::index_out_of_range,
                        "edge endpoint outside [0," + std::to_string(n) + ")");
        if (u == v) throw Error(errc::loop_edge, "self-loop at vertex " + std::to_string(u));
        Edge key{std::min(u, v), std::max(u, v)};
        if (!seen.insert(key).second)
            throw Error(errc::duplicate_edge,
                        "edge (" + std::to_string(key.first) + "," +
                            std::to_string(key.second) + ") listed twice");
        g.adjacency_[u].push_back(v);
        g.adjacency_[v].push_back(u);
    }
    for (auto& a : g.adjacency_) std::sort(a.begin(), a.end());
    g.num_edges_ = (long long)seen.size();
    return g;
}

std::vector<VertexSet> connected_components(const WeightedGraph& g, const VertexSet& subset) {
    std::vector<char> in(g.num_vertices(), 0), done(g.num_vertices(), 0);
    for (int v : subset.members) in[v] = 1;

    std::vector<VertexSet> comps;
    std::vector<int> stack;
    for (int start : subset.members) {
        if (done[start]) continue;
        VertexSet comp;
        stack.push_back(start);
        done[start] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.members.push_back(v);
            comp.weight += g.weight(v);
            for (int u : g.neighbors(v))
                if (in[u] && !done[u]) {
                    done[u] = 1;
                    stack.push_back(u);
                }
        }
        std::sort(comp.members.begin(), comp.members.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const WeightedGraph& g, const VertexSet& subset) {
    if (subset.empty()) return false;
    return connected_components(g, subset).size() == 1;
}

VertexSet neighbors_of_set(const WeightedGraph& g, const VertexSet& subset) {
    std::vector<char> in(g.num_vertices(), 0), out(g.num_vertices(), 0);
    for (int v : subset.members) in[v] = 1;
    VertexSet result;
    for (int v : subset.members)
        for (int u : g.neighbors(v))
            if (!in[u] && !out[u]) {
                out[u] = 1;
                result.members.push_back(u);
                result.weight += g.weight(u);
            }
    std::sort(result.members.begin(), result.members.end());
    return result;
}

VertexSet set_union(const WeightedGraph& g, const VertexSet& a, const VertexSet& b) {
    VertexSet r;
    r.members.reserve(a.members.size() + b.members.size());
    std::set_union(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
                   std::back_inserter(r.members));
    r.weight = g.weight_of(r.members);
    return r;
}

VertexSet set_difference(const WeightedGraph& g, const VertexSet& a, const VertexSet& b) {
    VertexSet r;
    std::set_difference(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
                        std::back_inserter(r.members));
    r.weight = g.weight_of(r.members);
    return r;
}

} // namespace bcp

#include "bcp/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace bcp {

namespace {

struct Enumerator {
    const WeightedGraph& g;
    int n;
    int k;
    const std::function<bool(const Partition&)>& visit;
    std::vector<int> block_of; // restricted-growth string
    int used = 0;
    bool stopped = false;

    Enumerator(const WeightedGraph& g, int k, const std::function<bool(const Partition&)>& visit)
        : g(g), n(g.num_vertices()), k(k), visit(visit), block_of(n, -1) {}

    // A partially built block is dead once its vertices span more than one
    // component of G[block + unassigned]: no completion can reconnect it.
    bool block_salvageable(int b, int next) const {
        std::vector<char> eligible(n, 0);
        int start = -1;
        int block_size = 0;
        for (int v = 0; v < next; ++v)
            if (block_of[v] == b) {
                eligible[v] = 1;
                start = v;
                ++block_size;
            }
        if (block_size <= 1) return true;
        for (int v = next; v < n; ++v) eligible[v] = 1;

        std::vector<char> seen(n, 0);
        std::vector<int> stack{start};
        seen[start] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : g.neighbors(v))
                if (eligible[u] && !seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
        }
        for (int v = 0; v < next; ++v)
            if (block_of[v] == b && !seen[v]) return false;
        return true;
    }

    void run(int v) {
        if (stopped) return;
        if (v == n) {
            if (used != k) return;
            Partition parts(k);
            for (int u = 0; u < n; ++u) {
                parts[block_of[u]].members.push_back(u);
                parts[block_of[u]].weight += g.weight(u);
            }
            for (const auto& p : parts)
                if (!is_connected(g, p)) return;
            if (!visit(parts)) stopped = true;
            return;
        }
        // Not enough vertices left to open the remaining blocks.
        if (used + (n - v) < k) return;
        int limit = std::min(used, k - 1); // may join blocks 0..used-1 or open block `used`
        for (int b = 0; b <= limit && !stopped; ++b) {
            block_of[v] = b;
            int prev_used = used;
            if (b == used) ++used;
            if (block_salvageable(b, v + 1)) run(v + 1);
            used = prev_used;
            block_of[v] = -1;
        }
    }
};

} // namespace

void enumerate_connected_k_partitions(const WeightedGraph& g, int k,
                                      const std::function<bool(const Partition&)>& visit,
                                      const OracleBudget& budget) {
    if (g.num_vertices() > budget.max_vertices)
        throw Error(errc::budget_exceeded,
                    std::to_string(g.num_vertices()) + " vertices exceeds oracle budget of " +
                        std::to_string(budget.max_vertices));
    if (k > budget.max_parts)
        throw Error(errc::budget_exceeded, "k=" + std::to_string(k) +
                                               " exceeds oracle budget of " +
                                               std::to_string(budget.max_parts) + " parts");
    if (k < 1 || k > g.num_vertices()) return;
    Enumerator e(g, k, visit);
    e.run(0);
}

std::vector<Partition> collect_connected_k_partitions(const WeightedGraph& g, int k,
                                                      const OracleBudget& budget) {
    std::vector<Partition> out;
    enumerate_connected_k_partitions(
        g, k,
        [&](const Partition& p) {
            out.push_back(p);
            return true;
        },
        budget);
    return out;
}

Weight oracle_opt_bcp(const WeightedGraph& g, int k, Objective mode, const OracleBudget& budget) {
    bool found = false;
    Weight best = 0;
    enumerate_connected_k_partitions(
        g, k,
        [&](const Partition& p) {
            Weight extreme = p[0].weight;
            for (const auto& s : p)
                extreme = mode == Objective::min_max ? std::max(extreme, s.weight)
                                                     : std::min(extreme, s.weight);
            if (!found)
                best = extreme;
            else
                best = mode == Objective::min_max ? std::min(best, extreme)
                                                  : std::max(best, extreme);
            found = true;
            return true;
        },
        budget);
    if (!found)
        throw Error(errc::no_partition_exists,
                    "no connected " + std::to_string(k) + "-partition exists");
    return best;
}

namespace {

// Induced subgraph with a vertex-id mapping, for oracle runs on subsets.
struct SubgraphView {
    WeightedGraph sub;
    std::vector<int> to_orig;
};

SubgraphView induce(const WeightedGraph& g, const VertexSet& subset) {
    SubgraphView view;
    view.to_orig = subset.members;
    std::vector<int> to_sub(g.num_vertices(), -1);
    for (int i = 0; i < subset.size(); ++i) to_sub[subset.members[i]] = i;
    std::vector<Edge> edges;
    std::vector<Weight> weights(subset.size());
    for (int i = 0; i < subset.size(); ++i) {
        int v = subset.members[i];
        weights[i] = g.weight(v);
        for (int u : g.neighbors(v))
            if (to_sub[u] > i) edges.emplace_back(i, to_sub[u]);
    }
    view.sub = build_graph(subset.size(), edges, weights);
    return view;
}

} // namespace

DivideOracle oracle_divide(const WeightedGraph& g, const VertexSet& subset, Weight lambda,
                           const OracleBudget& budget) {
    SubgraphView view = induce(g, subset);
    DivideOracle result;
    if (view.sub.num_vertices() >= 2) {
        enumerate_connected_k_partitions(
            view.sub, 2,
            [&](const Partition& p) {
                if (p[0].weight >= lambda && p[1].weight >= lambda) {
                    result.dividable = true;
                    return false;
                }
                return true;
            },
            budget);
    }
    for (int i = 0; i < view.sub.num_vertices(); ++i) {
        VertexSet rest;
        for (int v = 0; v < view.sub.num_vertices(); ++v)
            if (v != i) {
                rest.members.push_back(v);
                rest.weight += view.sub.weight(v);
            }
        bool all_light = true;
        for (const auto& comp : connected_components(view.sub, rest))
            if (comp.weight >= lambda) {
                all_light = false;
                break;
            }
        if (all_light) result.separators.insert(view.to_orig[i]);
    }
    return result;
}

bool oracle_gl_feasible(const WeightedGraph& g, const std::vector<Weight>& targets,
                        const Frac& lower, const Frac& upper, const OracleBudget& budget) {
    const int k = (int)targets.size();
    bool feasible = false;
    enumerate_connected_k_partitions(
        g, k,
        [&](const Partition& p) {
            std::vector<int> perm(k);
            std::iota(perm.begin(), perm.end(), 0);
            do {
                bool ok = true;
                for (int i = 0; i < k && ok; ++i) {
                    Weight w = p[perm[i]].weight;
                    if (w < lower * targets[i] || w > upper * targets[i]) ok = false;
                }
                if (ok) {
                    feasible = true;
                    return false;
                }
            } while (std::next_permutation(perm.begin(), perm.end()));
            return true;
        },
        budget);
    return feasible;
}

} // namespace bcp

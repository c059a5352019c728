#include "bcp/claw_free_bcp.hpp"

#include <algorithm>
#include <string>

namespace bcp {

namespace {

Weight ceil_div(Weight a, Weight b) { return (a + b - 1) / b; }

Weight max_weight_in(const WeightedGraph& g, const VertexSet& s) {
    Weight m = 0;
    for (int v : s.members) m = std::max(m, g.weight(v));
    return m;
}

std::vector<int> collect_subtree(const DfsTree& tree, int v) {
    std::vector<int> out{v};
    for (size_t i = 0; i < out.size(); ++i)
        for (int c : tree.children[out[i]]) out.push_back(c);
    return out;
}

void clear_entries(DfsTree& tree, const std::vector<int>& removed) {
    for (int v : removed) {
        tree.parent[v] = -1;
        tree.children[v].clear();
        tree.subtree_weight[v] = 0;
        tree.in_domain[v] = 0;
    }
}

void shrink_domain(const WeightedGraph& g, DfsTree& tree, const VertexSet& removed) {
    tree.domain = set_difference(g, tree.domain, removed);
}

} // namespace

ExtractResult extract_bounded_set(const WeightedGraph& g, const DfsTree& tree, Weight lambda,
                                  int c) {
    if (c < 3) throw Error(errc::precondition_violated, "c must be at least 3");
    if (tree.total_weight() < lambda)
        throw Error(errc::precondition_violated, "tree weighs less than lambda");
    if (lambda < max_weight_in(g, tree.domain))
        throw Error(errc::precondition_violated, "lambda below the heaviest domain vertex");

    const Weight upper = (Weight)(c - 1) * lambda;

    // First vertex in post order whose subtree reaches lambda; its children
    // are automatically all below lambda.
    int v = -1;
    for (int u : tree.post_order())
        if (tree.subtree_weight[u] >= lambda) {
            v = u;
            break;
        }
    if (v < 0) throw Error(errc::internal_invariant_violation, "no subtree reaches lambda");

    DfsTree rest = tree;

    if (tree.subtree_weight[v] < upper) {
        // Cut the whole subtree.
        std::vector<int> taken = collect_subtree(tree, v);
        VertexSet s = g.make_set(taken);
        if (v == tree.root) return {std::move(s), std::nullopt};

        int u = tree.parent[v];
        auto& sibs = rest.children[u];
        sibs.erase(std::find(sibs.begin(), sibs.end(), v));
        for (int a = u; a != -1; a = rest.parent[a]) rest.subtree_weight[a] -= s.weight;
        clear_entries(rest, taken);
        shrink_domain(g, rest, s);
        return {std::move(s), std::move(rest)};
    }

    // Heavy case: w(T_v) >= (c-1)*lambda while all child subtrees are light.
    const auto& kids = tree.children[v];
    if ((int)kids.size() >= c) {
        ClawWitness w;
        w.center = v;
        w.leaves.assign(kids.begin(), kids.begin() + c);
        throw ClawWitnessError(std::move(w));
    }
    if ((int)kids.size() != c - 1)
        throw Error(errc::precondition_violated,
                    "heavy subtree with fewer than c-1 children implies a vertex heavier "
                    "than lambda");

    if (v == tree.root) {
        // Keep the last child subtree as the new tree.
        int kept = kids[c - 2];
        std::vector<int> taken{v};
        for (int i = 0; i < c - 2; ++i) {
            auto sub = collect_subtree(tree, kids[i]);
            taken.insert(taken.end(), sub.begin(), sub.end());
        }
        VertexSet s = g.make_set(taken);
        rest.root = kept;
        rest.parent[kept] = -1;
        clear_entries(rest, taken);
        shrink_domain(g, rest, s);
        return {std::move(s), std::move(rest)};
    }

    // v is internal: some child must see v's parent through a non-tree edge,
    // otherwise {v; u, children} is an induced K_{1,c}.
    int u = tree.parent[v];
    int kept = -1;
    for (int child : kids)
        if (g.has_edge(u, child)) {
            kept = child;
            break;
        }
    if (kept < 0) {
        ClawWitness w;
        w.center = v;
        w.leaves.push_back(u);
        w.leaves.insert(w.leaves.end(), kids.begin(), kids.end());
        throw ClawWitnessError(std::move(w));
    }

    std::vector<int> taken{v};
    for (int child : kids)
        if (child != kept) {
            auto sub = collect_subtree(tree, child);
            taken.insert(taken.end(), sub.begin(), sub.end());
        }
    VertexSet s = g.make_set(taken);

    // Splice the kept subtree under u in v's old position.
    auto& sibs = rest.children[u];
    *std::find(sibs.begin(), sibs.end(), v) = kept;
    rest.parent[kept] = u;
    for (int a = u; a != -1; a = rest.parent[a]) rest.subtree_weight[a] -= s.weight;
    clear_entries(rest, taken);
    shrink_domain(g, rest, s);
    return {std::move(s), std::move(rest)};
}

Partition balanced_partition(const WeightedGraph& g, const VertexSet& subset, Weight lambda,
                             int c) {
    if (c < 3) throw Error(errc::precondition_violated, "c must be at least 3");
    if (subset.empty() || !is_connected(g, subset))
        throw Error(errc::precondition_violated, "subset must be connected and non-empty");
    if (lambda < max_weight_in(g, subset))
        throw Error(errc::precondition_violated, "lambda below the heaviest subset vertex");

    const Weight upper = (Weight)(c - 1) * lambda;
    Partition parts;
    DfsTree tree = dfs_tree(g, subset, subset.smallest());
    while (tree.total_weight() >= upper) {
        ExtractResult r = extract_bounded_set(g, tree, lambda, c);
        parts.push_back(std::move(r.set));
        if (!r.remainder)
            throw Error(errc::internal_invariant_violation,
                        "extraction consumed the whole tree above the stop weight");
        tree = std::move(*r.remainder);
    }
    parts.push_back(tree.domain);
    return parts;
}

Partition adjust_part_count(const WeightedGraph& g, Partition parts, int k,
                            [[maybe_unused]] Objective mode) {
    if (k < 1) throw Error(errc::precondition_violated, "k must be at least 1");

    auto lightest_index = [&]() {
        int best = 0;
        for (int i = 1; i < (int)parts.size(); ++i)
            if (parts[i].weight < parts[best].weight ||
                (parts[i].weight == parts[best].weight &&
                 parts[i].smallest() < parts[best].smallest()))
                best = i;
        return best;
    };

    while ((int)parts.size() > k) {
        int from = lightest_index();
        // Lightest quotient-graph neighbor of `from`.
        std::vector<int> part_of(g.num_vertices(), -1);
        for (int i = 0; i < (int)parts.size(); ++i)
            for (int v : parts[i].members) part_of[v] = i;
        int to = -1;
        for (int v : parts[from].members)
            for (int u : g.neighbors(v)) {
                int j = part_of[u];
                if (j < 0 || j == from) continue;
                if (to < 0 || parts[j].weight < parts[to].weight ||
                    (parts[j].weight == parts[to].weight &&
                     parts[j].smallest() < parts[to].smallest()))
                    to = j;
            }
        if (to < 0)
            throw Error(errc::cannot_reach_k, "part has no neighbor to merge with");
        parts[to] = set_union(g, parts[to], parts[from]);
        parts.erase(parts.begin() + from);
    }

    while ((int)parts.size() < k) {
        // Heaviest part with at least 2 vertices donates a non-cut vertex.
        int donor = -1;
        for (int i = 0; i < (int)parts.size(); ++i) {
            if (parts[i].size() < 2) continue;
            if (donor < 0 || parts[i].weight > parts[donor].weight ||
                (parts[i].weight == parts[donor].weight &&
                 parts[i].smallest() < parts[donor].smallest()))
                donor = i;
        }
        if (donor < 0)
            throw Error(errc::cannot_reach_k, "no part with at least 2 vertices to split");
        int cut_free = -1;
        for (int v : parts[donor].members) {
            VertexSet rest = set_difference(g, parts[donor], g.make_set({v}));
            if (is_connected(g, rest)) {
                cut_free = v;
                break;
            }
        }
        if (cut_free < 0)
            throw Error(errc::internal_invariant_violation,
                        "connected part without a non-cut vertex");
        parts.push_back(g.make_set({cut_free}));
        parts[donor] = set_difference(g, parts[donor], parts.back());
    }
    return parts;
}

BcpSolution min_max_bcp(const WeightedGraph& g, int k, int c) {
    if (k < 1) throw Error(errc::precondition_violated, "k must be at least 1");
    if (g.num_vertices() < k)
        throw Error(errc::too_few_vertices, std::to_string(g.num_vertices()) +
                                                " vertices cannot form " + std::to_string(k) +
                                                " parts");
    VertexSet all = g.all_vertices();
    if (!is_connected(g, all)) throw Error(errc::not_connected, "input graph is disconnected");

    const Weight lambda = std::max(g.max_weight(), ceil_div(g.total_weight(), k));
    Partition parts = balanced_partition(g, all, lambda, c);
    if ((int)parts.size() > k)
        throw Error(errc::internal_invariant_violation, "more than k parts from extraction");
    if ((int)parts.size() < k) parts = adjust_part_count(g, std::move(parts), k, Objective::min_max);

    BcpSolution sol;
    sol.mode = Objective::min_max;
    sol.lower_certificate = lambda;
    sol.objective = 0;
    for (const auto& p : parts) sol.objective = std::max(sol.objective, p.weight);
    sol.parts = std::move(parts);
    return sol;
}

std::optional<Partition> max_min_feasible(const WeightedGraph& g, int k, int c, Weight x) {
    if (k < 1) throw Error(errc::precondition_violated, "k must be at least 1");
    if (g.num_vertices() < k)
        throw Error(errc::too_few_vertices, std::to_string(g.num_vertices()) +
                                                " vertices cannot form " + std::to_string(k) +
                                                " parts");
    VertexSet all = g.all_vertices();
    if (!is_connected(g, all)) throw Error(errc::not_connected, "input graph is disconnected");
    if (x < 1 || x > ceil_div(g.total_weight(), k))
        throw Error(errc::x_out_of_range,
                    "X=" + std::to_string(x) + " outside (0, ceil(w(G)/k)]");

    const Weight lambda = x / (Weight)(c - 1);

    std::vector<int> heavy;
    std::vector<int> rest_members;
    for (int v = 0; v < g.num_vertices(); ++v)
        (g.weight(v) > lambda ? heavy : rest_members).push_back(v);

    Partition parts;
    // One part per heavy vertex; light leftover components attach to a
    // neighboring heavy vertex below.
    std::vector<int> part_of_heavy(g.num_vertices(), -1);
    for (int h : heavy) {
        part_of_heavy[h] = (int)parts.size();
        parts.push_back(g.make_set({h}));
    }

    VertexSet rest = g.make_set(rest_members);
    for (const auto& comp : connected_components(g, rest)) {
        if (comp.weight >= lambda) {
            Partition sub = balanced_partition(g, comp, lambda, c);
            if (sub.size() >= 2 && sub.back().weight < lambda) {
                VertexSet merged = set_union(g, sub[sub.size() - 2], sub.back());
                sub.pop_back();
                sub.back() = std::move(merged);
            }
            for (auto& s : sub) parts.push_back(std::move(s));
        } else {
            VertexSet nbrs = neighbors_of_set(g, comp);
            int anchor = -1;
            for (int u : nbrs.members)
                if (part_of_heavy[u] >= 0) {
                    anchor = part_of_heavy[u];
                    break;
                }
            if (anchor < 0)
                throw Error(errc::internal_invariant_violation,
                            "light component with no heavy neighbor");
            parts[anchor] = set_union(g, parts[anchor], comp);
        }
    }

    if ((int)parts.size() < k) return std::nullopt;
    if ((int)parts.size() > k) parts = adjust_part_count(g, std::move(parts), k, Objective::max_min);
    return parts;
}

BcpSolution max_min_bcp(const WeightedGraph& g, int k, int c) {
    const Weight upper = (g.total_weight() + k - 1) / k;

    Weight lo = 1;
    std::optional<Partition> lo_parts = max_min_feasible(g, k, c, 1);
    if (!lo_parts)
        throw Error(errc::internal_invariant_violation, "X=1 must always be feasible");

    Weight hi = upper;
    for (Weight x = 2; x < upper; x *= 2) {
        auto p = max_min_feasible(g, k, c, x);
        if (p) {
            lo = x;
            lo_parts = std::move(p);
        } else {
            hi = x - 1;
            break;
        }
    }
    while (lo < hi) {
        Weight mid = lo + (hi - lo + 1) / 2;
        auto p = max_min_feasible(g, k, c, mid);
        if (p) {
            lo = mid;
            lo_parts = std::move(p);
        } else {
            hi = mid - 1;
        }
    }

    BcpSolution sol;
    sol.mode = Objective::max_min;
    sol.lower_certificate = lo;
    sol.parts = std::move(*lo_parts);
    sol.objective = sol.parts[0].weight;
    for (const auto& p : sol.parts) sol.objective = std::min(sol.objective, p.weight);
    return sol;
}

BcepSolution bcep(const EdgeWeightedGraph& g, int k, Objective mode) {
    if ((int)g.edges.size() < k)
        throw Error(errc::too_few_edges, std::to_string(g.edges.size()) +
                                             " edges cannot form " + std::to_string(k) +
                                             " parts");
    if (!is_connected(g.graph, g.graph.all_vertices()))
        throw Error(errc::not_connected, "input graph is disconnected");

    LineGraphResult lg = line_graph(g);
    BcepSolution sol;
    sol.line_solution = mode == Objective::min_max ? min_max_bcp(lg.line, k, 3)
                                                   : max_min_bcp(lg.line, k, 3);
    sol.objective = sol.line_solution.objective;
    for (const auto& part : sol.line_solution.parts)
        sol.edge_parts.push_back(part.members);
    return sol;
}

} // namespace bcp

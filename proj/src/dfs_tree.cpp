#include "bcp/dfs_tree.hpp"

#include <algorithm>
#include <string>

namespace bcp {

std::vector<int> DfsTree::post_order() const {
    std::vector<int> order;
    if (root < 0) return order;
    order.reserve(domain.members.size());
    // (vertex, index of next child to visit)
    std::vector<std::pair<int, size_t>> stack{{root, 0}};
    while (!stack.empty()) {
        auto& [v, idx] = stack.back();
        if (idx < children[v].size()) {
            int c = children[v][idx++];
            stack.emplace_back(c, 0);
        } else {
            order.push_back(v);
            stack.pop_back();
        }
    }
    return order;
}

DfsTree dfs_tree(const WeightedGraph& g, const VertexSet& subset, int root) {
    if (!subset.contains(root))
        throw Error(errc::root_outside_subset, "root " + std::to_string(root));

    const int n = g.num_vertices();
    DfsTree t;
    t.root = root;
    t.parent.assign(n, -1);
    t.children.assign(n, {});
    t.subtree_weight.assign(n, 0);
    t.domain = subset;
    t.in_domain.assign(n, 0);
    for (int v : subset.members) t.in_domain[v] = 1;

    std::vector<char> visited(n, 0);
    std::vector<std::pair<int, size_t>> stack{{root, 0}};
    visited[root] = 1;
    int seen = 1;
    while (!stack.empty()) {
        auto& [v, idx] = stack.back();
        auto nbrs = g.neighbors(v);
        if (idx < nbrs.size()) {
            int u = nbrs[idx++];
            if (t.in_domain[u] && !visited[u]) {
                visited[u] = 1;
                ++seen;
                t.parent[u] = v;
                t.children[v].push_back(u);
                stack.emplace_back(u, 0);
            }
        } else {
            t.subtree_weight[v] = g.weight(v);
            for (int c : t.children[v]) t.subtree_weight[v] += t.subtree_weight[c];
            stack.pop_back();
        }
    }
    if (seen != subset.size())
        throw Error(errc::not_connected, "subset is not connected; DFS reached " +
                                             std::to_string(seen) + " of " +
                                             std::to_string(subset.size()) + " vertices");
    return t;
}

bool validate_dfs_tree(const WeightedGraph& g, const DfsTree& tree) {
    const int n = g.num_vertices();
    if ((int)tree.parent.size() != n || (int)tree.children.size() != n ||
        (int)tree.subtree_weight.size() != n || (int)tree.in_domain.size() != n)
        return false;
    if (tree.domain.empty()) return tree.root < 0;
    if (tree.root < 0 || !tree.domain.contains(tree.root)) return false;
    if (tree.parent[tree.root] != -1) return false;

    for (int v = 0; v < n; ++v) {
        bool in = tree.in_domain[v];
        if (in != tree.domain.contains(v)) return false;
        if (!in && (tree.parent[v] != -1 || !tree.children[v].empty() ||
                    tree.subtree_weight[v] != 0))
            return false;
    }

    // Parent/children consistency and tree edges must be graph edges.
    for (int v : tree.domain.members) {
        if (v != tree.root) {
            int p = tree.parent[v];
            if (p < 0 || !tree.in_domain[p]) return false;
            if (!g.has_edge(p, v)) return false;
            if (std::count(tree.children[p].begin(), tree.children[p].end(), v) != 1)
                return false;
        }
        for (int c : tree.children[v])
            if (tree.parent[c] != v) return false;
    }

    // Reachability from the root, entry/exit times for ancestry tests.
    std::vector<long long> tin(n, -1), tout(n, -1);
    long long clock = 0;
    std::vector<std::pair<int, size_t>> stack{{tree.root, 0}};
    tin[tree.root] = clock++;
    int seen = 1;
    while (!stack.empty()) {
        auto& [v, idx] = stack.back();
        if (idx < tree.children[v].size()) {
            int c = tree.children[v][idx++];
            if (tin[c] != -1) return false; // child reached twice
            tin[c] = clock++;
            ++seen;
            stack.emplace_back(c, 0);
        } else {
            tout[v] = clock++;
            stack.pop_back();
        }
    }
    if (seen != tree.domain.size()) return false;

    // Subtree weights.
    for (int v : tree.domain.members) {
        Weight w = g.weight(v);
        for (int c : tree.children[v]) w += tree.subtree_weight[c];
        if (tree.subtree_weight[v] != w) return false;
    }

    // Every non-tree edge of the induced subgraph joins an ancestor-descendant pair.
    auto is_ancestor = [&](int a, int d) { return tin[a] <= tin[d] && tout[d] <= tout[a]; };
    for (int v : tree.domain.members)
        for (int u : g.neighbors(v)) {
            if (u < v || !tree.in_domain[u]) continue;
            if (tree.parent[u] == v || tree.parent[v] == u) continue;
            if (!is_ancestor(u, v) && !is_ancestor(v, u)) return false;
        }
    return true;
}

} // namespace bcp

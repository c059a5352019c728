#include "bcp/divide.hpp"

#include <algorithm>
#include <string>

#include "bcp/dfs_tree.hpp"

namespace bcp {

namespace {

void verify_split(const WeightedGraph& g, const VertexSet& subset, const VertexSet& a,
                  const VertexSet& b, Weight t) {
    if (a.weight < t || b.weight < t || a.size() + b.size() != subset.size() ||
        !is_connected(g, a) || !is_connected(g, b))
        throw Error(errc::internal_invariant_violation, "split failed self-verification");
}

DivideResult run_divide(const WeightedGraph& g, const VertexSet& subset, Weight t) {
    const Weight w = subset.weight;

    if (subset.size() == 1) {
        DivideResult r;
        r.kind = DivideResult::Kind::separator;
        r.separator = subset.smallest();
        return r;
    }

    DfsTree tree = dfs_tree(g, subset, subset.smallest());

    // 1. Balanced tree edge.
    for (int v : subset.members) {
        if (v == tree.root) continue;
        Weight sub = tree.subtree_weight[v];
        if (sub >= t && w - sub >= t) {
            std::vector<int> side{v};
            for (size_t i = 0; i < side.size(); ++i)
                for (int c : tree.children[side[i]]) side.push_back(c);
            DivideResult r;
            r.kind = DivideResult::Kind::split;
            r.first = g.make_set(std::move(side));
            r.second = set_difference(g, subset, r.first);
            verify_split(g, subset, r.first, r.second, t);
            return r;
        }
    }

    // 2. No balanced edge: each edge has at most one side >= t, so following
    // heavy subtrees from the root reaches a sink whose tree components are
    // all light.
    int s = tree.root;
    for (int steps = 0;; ++steps) {
        if (steps > subset.size())
            throw Error(errc::internal_invariant_violation, "sink descent did not terminate");
        int heavy_child = -1;
        for (int c : tree.children[s])
            if (tree.subtree_weight[c] >= t) {
                heavy_child = c;
                break;
            }
        if (heavy_child < 0) break;
        s = heavy_child;
    }

    // 3. Components of G - s.
    VertexSet without_s = set_difference(g, subset, g.make_set({s}));
    std::vector<VertexSet> comps = connected_components(g, without_s);

    int heaviest = -1;
    for (int i = 0; i < (int)comps.size(); ++i)
        if (heaviest < 0 || comps[i].weight > comps[heaviest].weight ||
            (comps[i].weight == comps[heaviest].weight &&
             comps[i].smallest() < comps[heaviest].smallest()))
            heaviest = i;

    if (heaviest < 0 || comps[heaviest].weight < t) {
        DivideResult r;
        r.kind = DivideResult::Kind::separator;
        r.separator = s;
        return r;
    }

    const VertexSet& c_heavy = comps[heaviest];
    if (w - c_heavy.weight >= t) {
        DivideResult r;
        r.kind = DivideResult::Kind::split;
        r.first = c_heavy;
        r.second = set_difference(g, subset, c_heavy);
        verify_split(g, subset, r.first, r.second, t);
        return r;
    }

    // The heavy component dominates: accumulate its tree components (each
    // light and hanging off s in the tree) in a connected order until the
    // accumulated side reaches t. The complement keeps s plus whole tree
    // components, all adjacent to s.
    std::vector<VertexSet> pieces;
    for (int c : tree.children[s]) {
        std::vector<int> sub{c};
        for (size_t i = 0; i < sub.size(); ++i)
            for (int x : tree.children[sub[i]]) sub.push_back(x);
        pieces.push_back(g.make_set(std::move(sub)));
    }
    if (s != tree.root) {
        std::vector<int> above;
        std::vector<char> below(g.num_vertices(), 0);
        below[s] = 1;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int c : tree.children[v])
                if (!below[c]) {
                    below[c] = 1;
                    stack.push_back(c);
                }
        }
        for (int v : subset.members)
            if (!below[v]) above.push_back(v);
        pieces.push_back(g.make_set(std::move(above)));
    }

    std::vector<int> piece_of(g.num_vertices(), -1);
    for (int i = 0; i < (int)pieces.size(); ++i)
        for (int v : pieces[i].members) piece_of[v] = i;

    // Restrict to pieces inside the heavy component and BFS over their
    // adjacency, starting from the piece holding the component's smallest
    // vertex.
    std::vector<char> in_heavy(pieces.size(), 0);
    for (int v : c_heavy.members) in_heavy[piece_of[v]] = 1;
    for (int i = 0; i < (int)pieces.size(); ++i)
        if (in_heavy[i] && pieces[i].weight >= t)
            throw Error(errc::internal_invariant_violation, "sink left a heavy tree component");

    std::vector<char> taken(pieces.size(), 0);
    std::vector<int> queue{piece_of[c_heavy.smallest()]};
    taken[queue[0]] = 1;
    VertexSet accum;
    for (size_t qi = 0; qi < queue.size() && accum.weight < t; ++qi) {
        int p = queue[qi];
        accum = set_union(g, accum, pieces[p]);
        if (accum.weight >= t) break;
        std::vector<int> next;
        for (int v : pieces[p].members)
            for (int u : g.neighbors(v)) {
                int pu = piece_of[u];
                if (pu >= 0 && in_heavy[pu] && !taken[pu]) {
                    taken[pu] = 1;
                    next.push_back(pu);
                }
            }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        queue.insert(queue.end(), next.begin(), next.end());
    }
    if (accum.weight < t)
        throw Error(errc::internal_invariant_violation,
                    "heavy component absorbed completely below threshold");

    DivideResult r;
    r.kind = DivideResult::Kind::split;
    r.first = std::move(accum);
    r.second = set_difference(g, subset, r.first);
    verify_split(g, subset, r.first, r.second, t);
    return r;
}

Weight max_weight_in(const WeightedGraph& g, const VertexSet& s) {
    Weight m = 0;
    for (int v : s.members) m = std::max(m, g.weight(v));
    return m;
}

} // namespace

DivideResult divide_or_separator(const WeightedGraph& g, const VertexSet& subset, Weight lambda) {
    if (subset.empty() || !is_connected(g, subset))
        throw Error(errc::precondition_violated, "subset must be connected and non-empty");
    if (lambda <= max_weight_in(g, subset))
        throw Error(errc::precondition_violated, "lambda must exceed the heaviest vertex");
    if (subset.weight <= 3 * (lambda - 1))
        throw Error(errc::precondition_violated, "subset weight must exceed 3*(lambda-1)");
    return run_divide(g, subset, lambda);
}

DivideResult divide_with_threshold(const WeightedGraph& g, const VertexSet& subset,
                                   const Frac& lambda) {
    if (subset.empty() || !is_connected(g, subset))
        throw Error(errc::precondition_violated, "subset must be connected and non-empty");
    if (subset.weight < lambda * 3)
        throw Error(errc::precondition_violated, "subset weight must be at least 3*lambda");
    return run_divide(g, subset, lambda.ceil());
}

std::optional<std::pair<VertexSet, VertexSet>>
try_divide_with_separator(const WeightedGraph& g, const VertexSet& T, int s,
                          const std::vector<VertexSet>& comps, const VertexSet& Q,
                          const Frac& lambda) {
    if (Q.empty() || Q.weight >= lambda || !is_connected(g, Q))
        throw Error(errc::precondition_violated,
                    "Q must be connected, non-empty and lighter than lambda");
    if (T.weight < lambda * 2)
        throw Error(errc::precondition_violated, "T must weigh at least 2*lambda");
    if (T.weight + Q.weight < lambda * 3)
        throw Error(errc::precondition_violated, "T+Q must weigh at least 3*lambda");
    {
        int comp_vertices = 0;
        for (const auto& c : comps) {
            if (c.weight >= lambda)
                throw Error(errc::precondition_violated,
                            "s is not a lambda-separator: heavy component");
            comp_vertices += c.size();
        }
        if (comp_vertices + 1 != T.size() || !T.contains(s))
            throw Error(errc::precondition_violated, "comps do not cover T minus s");
    }

    std::vector<char> next_to_q(g.num_vertices(), 0);
    for (int v : neighbors_of_set(g, Q).members) next_to_q[v] = 1;

    // Components reachable from Q hang directly off Q: they cannot touch each
    // other without s. Absorb the adjacent ones in smallest-member order.
    VertexSet q_side = Q;
    for (const auto& comp : comps) {
        if (q_side.weight >= lambda) break;
        bool adjacent = false;
        for (int v : comp.members)
            if (next_to_q[v]) {
                adjacent = true;
                break;
            }
        if (adjacent) q_side = set_union(g, q_side, comp);
    }
    if (q_side.weight < lambda) return std::nullopt;

    VertexSet rest = set_difference(g, set_union(g, T, Q), q_side);
    if (rest.weight < lambda || !is_connected(g, q_side) || !is_connected(g, rest))
        throw Error(errc::internal_invariant_violation,
                    "separator split failed self-verification");
    return std::make_pair(std::move(q_side), std::move(rest));
}

} // namespace bcp

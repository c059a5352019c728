#include "bcp/gl.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <string>

namespace bcp {

namespace {

bool g_debug_asserts = [] {
    const char* env = std::getenv("PARTITION_DEBUG_ASSERTS");
    return env != nullptr && std::string(env) == "1";
}();

[[noreturn]] void invariant_failure(const std::string& what) {
    throw Error(errc::internal_invariant_violation, what);
}

} // namespace

void set_debug_asserts(bool enabled) { g_debug_asserts = enabled; }
bool debug_asserts_enabled() { return g_debug_asserts; }

TargetWeights::TargetWeights(std::vector<Weight> values) : targets(std::move(values)) {
    if (targets.empty())
        throw Error(errc::precondition_violated, "at least one target required");
    for (Weight w : targets)
        if (w < 1) throw Error(errc::precondition_violated, "targets must be positive");
    std::sort(targets.begin(), targets.end(), std::greater<>());
}

Weight TargetWeights::sum() const {
    Weight s = 0;
    for (Weight w : targets) s += w;
    return s;
}

int GlPacking::filled_count() const {
    int c = 0;
    for (const auto& s : sets)
        if (!s.empty()) ++c;
    return c;
}

VertexSet GlPacking::covered(const WeightedGraph& g) const {
    VertexSet all;
    for (const auto& s : sets) all = set_union(g, all, s);
    return all;
}

namespace {

/// Smallest-id vertex whose removal leaves only components lighter than
/// lambda, with those components; nullopt if the set has no such separator.
std::optional<std::pair<int, std::vector<VertexSet>>>
find_weight_separator(const WeightedGraph& g, const VertexSet& t, const Frac& lambda) {
    for (int s : t.members) {
        VertexSet rest = set_difference(g, t, g.make_set({s}));
        std::vector<VertexSet> comps = connected_components(g, rest);
        bool all_light = true;
        for (const auto& c : comps)
            if (c.weight >= lambda) {
                all_light = false;
                break;
            }
        if (all_light) return std::make_pair(s, std::move(comps));
    }
    return std::nullopt;
}

SetCategory categorize(const WeightedGraph& g, const VertexSet& t, const Frac& lambda) {
    SetCategory cat;
    if (auto sep = find_weight_separator(g, t, lambda)) {
        cat.kind = SetCategory::Kind::has_separator;
        cat.separator = sep->first;
        cat.comps = std::move(sep->second);
    } else {
        cat.kind = SetCategory::Kind::no_separator;
    }
    return cat;
}

bool adjacent_sets(const WeightedGraph& g, const VertexSet& a, const VertexSet& b) {
    std::vector<char> in_b(g.num_vertices(), 0);
    for (int v : b.members) in_b[v] = 1;
    for (int v : a.members)
        for (int u : g.neighbors(v))
            if (in_b[u]) return true;
    return false;
}

} // namespace

PreprocessResult preprocess_heavy(const WeightedGraph& g, const TargetWeights& targets,
                                  const Frac& alpha) {
    if (targets.targets.back() < g.max_weight())
        throw Error(errc::precondition_violated, "min target < w_max");
    if (targets.sum() > g.total_weight())
        throw Error(errc::precondition_violated, "targets exceed total weight");

    PreprocessResult r;
    r.working = g.all_vertices();
    r.fixed_singletons.assign(targets.k(), -1);
    std::vector<int> slots(targets.k());
    for (int i = 0; i < targets.k(); ++i) slots[i] = i;
    std::vector<Weight> reduced = targets.targets;

    while (!reduced.empty() && !r.working.empty()) {
        int vmax = r.working.members.front();
        for (int v : r.working.members)
            if (g.weight(v) > g.weight(vmax)) vmax = v;
        // Largest target the heaviest vertex already reaches (alpha-scaled).
        int pos = -1;
        for (int i = 0; i < (int)reduced.size(); ++i)
            if (g.weight(vmax) >= alpha * reduced[i]) {
                pos = i;
                break;
            }
        if (pos < 0) break;
        r.fixed_singletons[slots[pos]] = vmax;
        r.working = set_difference(g, r.working, g.make_set({vmax}));
        reduced.erase(reduced.begin() + pos);
        slots.erase(slots.begin() + pos);
    }
    r.reduced = std::move(reduced);
    r.reduced_slot = std::move(slots);
    return r;
}

VertexSet carve_set(const WeightedGraph& g, const VertexSet& working, Weight target,
                    const Frac& alpha) {
    const Frac lo = alpha * target;
    std::vector<VertexSet> comps = connected_components(g, working);
    const VertexSet* big = nullptr;
    for (const auto& c : comps)
        if (c.weight >= lo) {
            big = &c;
            break;
        }
    if (!big) throw Error(errc::no_big_component, "no component reaches alpha*w_i");

    std::vector<char> in_comp(g.num_vertices(), 0), taken(g.num_vertices(), 0);
    for (int v : big->members) in_comp[v] = 1;

    VertexSet out;
    std::queue<int> q;
    q.push(big->smallest());
    taken[big->smallest()] = 1;
    while (!q.empty() && out.weight < lo) {
        int v = q.front();
        q.pop();
        out.members.push_back(v);
        out.weight += g.weight(v);
        for (int u : g.neighbors(v))
            if (in_comp[u] && !taken[u]) {
                taken[u] = 1;
                q.push(u);
            }
    }
    std::sort(out.members.begin(), out.members.end());
    if (out.weight < lo || out.weight > alpha * target * 3)
        throw Error(errc::precondition_violated,
                    "carved set missed its window; a vertex outweighs alpha*w_i");
    return out;
}

namespace {

/// The BoundedGL main loop state over the preprocessed residual instance.
struct BoundedGlRun {
    const WeightedGraph& g;
    const Frac& alpha;
    const std::vector<Weight>& targets; // reduced, descending
    VertexSet working;
    std::vector<VertexSet> sets;
    std::vector<SetCategory> cats;
    GlStats* stats;

    BoundedGlRun(const WeightedGraph& g, const Frac& alpha, const std::vector<Weight>& targets,
                 VertexSet working, GlStats* stats)
        : g(g), alpha(alpha), targets(targets), working(std::move(working)), stats(stats) {}

    Frac lambda(int j) const { return alpha * targets[j]; }

    void ensure_category(int j) {
        if (cats[j].kind != SetCategory::Kind::uncategorized) return;
        if (sets[j].weight < lambda(j) * 2) return; // below the categorization threshold
        cats[j] = categorize(g, sets[j], lambda(j));
    }

    void invalidate_category(int j) { cats[j] = SetCategory{}; }

    // Keep a cached separator exact after absorbing Q: Q merges the adjacent
    // components into one. Falls back to a fresh categorization if the merged
    // component reaches the threshold.
    void absorb(int j, const VertexSet& q) {
        sets[j] = set_union(g, sets[j], q);
        if (cats[j].kind == SetCategory::Kind::has_separator) {
            std::vector<char> near_q(g.num_vertices(), 0);
            for (int v : neighbors_of_set(g, q).members) near_q[v] = 1;
            VertexSet merged = q;
            std::vector<VertexSet> rest;
            for (auto& c : cats[j].comps) {
                bool touches = false;
                for (int v : c.members)
                    if (near_q[v]) {
                        touches = true;
                        break;
                    }
                if (touches)
                    merged = set_union(g, merged, c);
                else
                    rest.push_back(std::move(c));
            }
            if (merged.weight < lambda(j)) {
                rest.push_back(std::move(merged));
                std::sort(rest.begin(), rest.end(),
                          [](const VertexSet& a, const VertexSet& b) {
                              return a.smallest() < b.smallest();
                          });
                cats[j].comps = std::move(rest);
            } else {
                invalidate_category(j);
            }
        }
        // no_separator stays valid: a separator of the grown set would have
        // separated the old set as well.
        ensure_category(j);
    }

    void assert_packing_invariant(int filled) const {
        if (!g_debug_asserts) return;
        std::vector<char> seen(g.num_vertices(), 0);
        for (int j = 0; j < filled; ++j) {
            if (sets[j].empty() || !is_connected(g, sets[j]))
                invariant_failure("packing set empty or disconnected");
            if (sets[j].weight < lambda(j) || sets[j].weight > lambda(j) * 3)
                invariant_failure("packing set outside [alpha*w, 3*alpha*w]");
            for (int v : sets[j].members) {
                if (seen[v]) invariant_failure("packing sets overlap");
                seen[v] = 1;
            }
            if (cats[j].kind == SetCategory::Kind::has_separator) {
                VertexSet rest =
                    set_difference(g, sets[j], g.make_set({cats[j].separator}));
                if (connected_components(g, rest) != cats[j].comps)
                    invariant_failure("stale separator cache");
            }
        }
    }

    int run() {
        const int kk = (int)targets.size();
        sets.assign(kk, {});
        cats.assign(kk, {});
        const long long n0 = std::max<long long>(1, working.size());
        const long long inner_cap = n0 * n0;

        int i = 0;
        while (!working.empty()) {
            if (i == kk) break;
            sets[i] = carve_set(g, working, targets[i], alpha);
            working = set_difference(g, working, sets[i]);
            ensure_category(i);
            ++i;
            if (stats) ++stats->outer_iterations;
            assert_packing_invariant(i);
            if (i == kk) break;

            const Frac lo_i = lambda(i);
            long long inner = 0;
            while (!working.empty()) {
                std::vector<VertexSet> comps = connected_components(g, working);
                bool has_big = false;
                for (const auto& c : comps)
                    if (c.weight >= lo_i) {
                        has_big = true;
                        break;
                    }
                if (has_big) break;

                if (++inner > inner_cap)
                    throw Error(errc::inner_loop_cap_exceeded,
                                "inner loop exceeded |V|^2 iterations");
                if (stats)
                    stats->max_inner_iterations = std::max(stats->max_inner_iterations, inner);

                step_inner(comps.front(), i);
                assert_packing_invariant(i);
            }
        }
        return i;
    }

    // One inner-loop iteration on the smallest i-small component.
    void step_inner(const VertexSet& q, int i) {
        std::vector<char> near_q(g.num_vertices(), 0);
        for (int v : neighbors_of_set(g, q).members) near_q[v] = 1;
        auto touches = [&](const VertexSet& s, int skip) {
            for (int v : s.members)
                if (v != skip && near_q[v]) return true;
            return false;
        };

        int case1 = -1, case2 = -1;
        for (int j = 0; j < i; ++j) {
            if (!touches(sets[j], -1)) continue;
            ensure_category(j);
            if (cats[j].kind != SetCategory::Kind::has_separator) {
                if (case1 < 0) case1 = j;
            } else if (case2 < 0 && touches(sets[j], cats[j].separator)) {
                case2 = j;
            }
        }
        int j = case1 >= 0 ? case1 : case2;
        if (j < 0)
            throw Error(errc::precondition_violated,
                        "leftover component only reaches separator vertices; the input "
                        "is not k-connected");

        const Frac lam = lambda(j);
        if (sets[j].weight + q.weight <= lam * 3) {
            absorb(j, q);
            working = set_difference(g, working, q);
            return;
        }

        // Over-weight: the set crossed 2*alpha*w_j, so its category is cached.
        ensure_category(j);
        if (cats[j].kind == SetCategory::Kind::no_separator) {
            VertexSet merged = set_union(g, sets[j], q);
            DivideResult res = divide_with_threshold(g, merged, lam);
            if (res.kind != DivideResult::Kind::split)
                invariant_failure("divide found a separator inside a T_a set");
            working = set_difference(g, working, q);
            working = set_union(g, working, res.first);
            sets[j] = std::move(res.second);
            invalidate_category(j);
            ensure_category(j);
            return;
        }

        // Case 2: known separator.
        auto split = try_divide_with_separator(g, sets[j], cats[j].separator, cats[j].comps, q,
                                               lam);
        if (split) {
            working = set_difference(g, working, q);
            working = set_union(g, working, split->first);
            sets[j] = std::move(split->second);
            invalidate_category(j);
            ensure_category(j);
            return;
        }

        // Not dividable: return the component attached to Q to the pool; the
        // rest keeps weight >= 2*alpha*w_j with the same separator.
        int drop = -1;
        for (int c = 0; c < (int)cats[j].comps.size(); ++c)
            if (touches(cats[j].comps[c], -1)) {
                drop = c;
                break;
            }
        if (drop < 0) invariant_failure("case-2 set lost its component next to Q");
        VertexSet gone = std::move(cats[j].comps[drop]);
        cats[j].comps.erase(cats[j].comps.begin() + drop);
        sets[j] = set_difference(g, sets[j], gone);
        working = set_union(g, working, gone);
        if (sets[j].weight < lambda(j) * 2)
            invariant_failure("case-2 removal dropped the set below 2*alpha*w_j");
    }
};

} // namespace

GlPacking bounded_gl(const WeightedGraph& g, const TargetWeights& targets, const Frac& alpha,
                     GlStats* stats) {
    if (targets.sum() != g.total_weight())
        throw Error(errc::precondition_violated, "targets must sum to the total weight");
    if (targets.targets.back() < g.max_weight())
        throw Error(errc::precondition_violated, "min target < w_max");
    if (!is_connected(g, g.all_vertices()))
        throw Error(errc::not_connected, "input graph is disconnected");

    PreprocessResult pre = preprocess_heavy(g, targets, alpha);

    GlPacking packing;
    packing.sets.assign(targets.k(), {});
    packing.categories.assign(targets.k(), {});
    packing.fixed_singletons = pre.fixed_singletons;
    for (int slot = 0; slot < targets.k(); ++slot)
        if (pre.fixed_singletons[slot] >= 0)
            packing.sets[slot] = g.make_set({pre.fixed_singletons[slot]});

    if (!pre.reduced.empty() && !pre.working.empty()) {
        BoundedGlRun run(g, alpha, pre.reduced, pre.working, stats);
        int filled = run.run();
        for (int j = 0; j < filled; ++j) {
            packing.sets[pre.reduced_slot[j]] = std::move(run.sets[j]);
            packing.categories[pre.reduced_slot[j]] = std::move(run.cats[j]);
        }
    }
    return packing;
}

Partition gl_one_side(const WeightedGraph& g, const TargetWeights& targets, GlSide side,
                      GlStats* stats) {
    const int k = targets.k();
    if (side == GlSide::lower) {
        GlPacking packing = bounded_gl(g, targets, Frac(1, 3), stats);
        if (packing.filled_count() < k)
            throw Error(errc::precondition_violated,
                        "lower-bound run left empty slots; the input cannot satisfy the "
                        "stated preconditions");
        VertexSet leftover = set_difference(g, g.all_vertices(), packing.covered(g));
        for (const auto& comp : connected_components(g, leftover)) {
            int target = -1;
            for (int j = 0; j < k && target < 0; ++j)
                if (adjacent_sets(g, comp, packing.sets[j])) target = j;
            if (target < 0)
                invariant_failure("leftover component with no neighbor in the packing");
            packing.sets[target] = set_union(g, packing.sets[target], comp);
        }
        return packing.sets;
    }

    GlPacking packing = bounded_gl(g, targets, Frac(1), stats);
    if (packing.covered(g).size() != g.num_vertices())
        invariant_failure("upper-bound run must cover every vertex");
    // Fill empty slots by splitting non-cut vertices off multi-vertex sets;
    // singletons respect every upper bound since w_max <= w_k.
    for (int slot = 0; slot < k; ++slot) {
        if (!packing.sets[slot].empty()) continue;
        int donor = -1;
        for (int j = 0; j < k; ++j) {
            if (packing.sets[j].size() < 2) continue;
            if (donor < 0 || packing.sets[j].size() > packing.sets[donor].size() ||
                (packing.sets[j].size() == packing.sets[donor].size() && j < donor))
                donor = j;
        }
        if (donor < 0) throw Error(errc::cannot_reach_k, "no multi-vertex set left to split");
        int pick = -1;
        for (int v : packing.sets[donor].members) {
            VertexSet rest = set_difference(g, packing.sets[donor], g.make_set({v}));
            if (is_connected(g, rest)) {
                pick = v;
                break;
            }
        }
        if (pick < 0) invariant_failure("connected set without a non-cut vertex");
        packing.sets[slot] = g.make_set({pick});
        packing.sets[donor] = set_difference(g, packing.sets[donor], packing.sets[slot]);
    }
    return packing.sets;
}

TransferGraph build_transfer_graph(const WeightedGraph& g, const GlPacking& packing,
                                   const TargetWeights& targets) {
    TransferGraph h;
    std::vector<int> node_of(g.num_vertices(), -1);
    auto add_node = [&](TransferNode::Kind kind, int owner, VertexSet vs) {
        for (int v : vs.members) node_of[v] = (int)h.nodes.size();
        h.nodes.push_back({kind, owner, std::move(vs)});
    };

    // Satisfied sets first: separator components of the ones with a
    // w_i-separator (the separator vertex itself lands in no node), whole
    // sets otherwise.
    std::vector<int> ta_slots, tminus_slots;
    for (int i = 0; i < packing.k(); ++i) {
        const VertexSet& t = packing.sets[i];
        if (t.weight >= targets[i]) {
            if (auto sep = find_weight_separator(g, t, Frac(targets[i]))) {
                for (auto& comp : sep->second)
                    add_node(TransferNode::Kind::tb_component, i, std::move(comp));
            } else {
                ta_slots.push_back(i);
            }
        } else {
            tminus_slots.push_back(i);
        }
    }
    for (int i : ta_slots) add_node(TransferNode::Kind::ta_set, i, packing.sets[i]);
    for (int i : tminus_slots) add_node(TransferNode::Kind::t_minus_set, i, packing.sets[i]);

    VertexSet leftover = set_difference(g, g.all_vertices(), packing.covered(g));
    for (auto& comp : connected_components(g, leftover))
        add_node(TransferNode::Kind::q_set, -1, std::move(comp));

    h.adj.assign(h.nodes.size(), {});
    for (int u = 0; u < g.num_vertices(); ++u)
        for (int v : g.neighbors(u)) {
            if (u > v) continue;
            int a = node_of[u], b = node_of[v];
            if (a < 0 || b < 0 || a == b) continue;
            h.adj[a].push_back(b);
            h.adj[b].push_back(a);
        }
    for (auto& a : h.adj) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    return h;
}

std::vector<int> find_transfer_path(const TransferGraph& h) {
    const int n = (int)h.nodes.size();
    std::vector<int> parent(n, -2);
    std::queue<int> q;
    for (int i = 0; i < n; ++i)
        if (h.nodes[i].kind == TransferNode::Kind::q_set) {
            parent[i] = -1;
            q.push(i);
        }
    if (q.empty()) throw Error(errc::no_path, "no leftover component to route");

    int goal = -1;
    while (!q.empty() && goal < 0) {
        int v = q.front();
        q.pop();
        if (h.nodes[v].kind == TransferNode::Kind::t_minus_set) {
            goal = v;
            break;
        }
        for (int u : h.adj[v])
            if (parent[u] == -2) {
                parent[u] = v;
                if (h.nodes[u].kind == TransferNode::Kind::t_minus_set) {
                    goal = u;
                    break;
                }
                q.push(u);
            }
    }
    if (goal < 0) throw Error(errc::no_path, "no route from leftover components to an "
                                             "unsatisfied set");

    std::vector<int> path;
    for (int v = goal; v != -1; v = parent[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

VertexSet truncate_set(const WeightedGraph& g, VertexSet t, Weight lower, const Frac& upper) {
    if (t.weight < lower)
        throw Error(errc::precondition_violated, "set already below its lower bound");
    while (t.weight > upper) {
        int pick = -1;
        for (int v : t.members) {
            VertexSet rest = set_difference(g, t, g.make_set({v}));
            if (is_connected(g, rest)) {
                pick = v;
                break;
            }
        }
        if (pick < 0) invariant_failure("connected set without a non-cut vertex");
        t = set_difference(g, t, g.make_set({pick}));
    }
    if (t.weight < lower)
        throw Error(errc::precondition_violated,
                    "truncation undershot; a vertex outweighs the lower bound");
    return t;
}

namespace {

bool pack_satisfied(const WeightedGraph& g, const GlPacking& packing,
                    const TargetWeights& targets, const Frac& cap) {
    std::vector<char> seen(g.num_vertices(), 0);
    for (int i = 0; i < packing.k(); ++i) {
        const VertexSet& t = packing.sets[i];
        if (t.empty() || !is_connected(g, t)) return false;
        if (t.weight * 3 < targets[i] || t.weight > cap * targets[i]) return false;
        for (int v : t.members) {
            if (seen[v]) return false;
            seen[v] = 1;
        }
    }
    return true;
}

/// |T*| under the equal-target relabeling convention: within a run of equal
/// targets the satisfied sets count first, and the prefix stops inside the
/// first run that is not fully satisfied.
int tstar_size(const GlPacking& packing, const TargetWeights& targets) {
    int size = 0;
    int i = 0;
    while (i < packing.k()) {
        int j = i;
        int satisfied = 0;
        while (j < packing.k() && targets[j] == targets[i]) {
            if (packing.sets[j].weight >= targets[j]) ++satisfied;
            ++j;
        }
        size += satisfied;
        if (satisfied < j - i) break;
        i = j;
    }
    return size;
}

/// Physically reorder sets within equal-target runs so satisfied sets come
/// first; targets themselves are untouched, so every slot keeps its bound.
void relabel_equal_targets(GlPacking& packing, const TargetWeights& targets) {
    int i = 0;
    while (i < packing.k()) {
        int j = i;
        while (j < packing.k() && targets[j] == targets[i]) ++j;
        std::stable_sort(packing.sets.begin() + i, packing.sets.begin() + j,
                         [&](const VertexSet& a, const VertexSet& b) {
                             return (a.weight >= targets[i]) > (b.weight >= targets[i]);
                         });
        i = j;
    }
    // Slot-indexed caches are rebuilt each round; drop them instead of
    // permuting.
    packing.categories.assign(packing.k(), {});
    packing.fixed_singletons.assign(packing.k(), -1);
}

} // namespace

void transfer_vertices(const WeightedGraph& g, GlPacking& packing, const TargetWeights& targets,
                       const TransferGraph& h, const std::vector<int>& path) {
    const Frac cap = frac_max(targets.ratio(), Frac(3));
    if (path.size() < 2 || h.nodes[path.front()].kind != TransferNode::Kind::q_set ||
        h.nodes[path.back()].kind != TransferNode::Kind::t_minus_set)
        throw Error(errc::precondition_violated, "path must run from a leftover component "
                                                 "to an unsatisfied set");

    int u = -1;
    for (int i = 0; i < packing.k(); ++i)
        if (packing.sets[i].weight < targets[i]) {
            u = i;
            break;
        }
    if (u < 0) invariant_failure("transfer with every set already satisfied");

    auto truncate_if_over = [&](int slot) {
        if (packing.sets[slot].weight > cap * targets[slot])
            packing.sets[slot] =
                truncate_set(g, std::move(packing.sets[slot]), targets[slot],
                             cap * targets[slot]);
    };

    VertexSet x = h.nodes[path.front()].vertices;
    for (size_t step = 1; step < path.size(); ++step) {
        const TransferNode& node = h.nodes[path[step]];
        const int j = node.owner;

        if (x.weight >= targets[u]) {
            packing.sets[u] = std::move(x);
            truncate_if_over(u);
            return;
        }
        if (x.weight + packing.sets[j].weight <= cap * targets[j]) {
            packing.sets[j] = set_union(g, packing.sets[j], x);
            return;
        }
        if (j >= u) { // T_j outside the satisfied prefix: swap through slot u
            VertexSet grown = set_union(g, packing.sets[j], x);
            packing.sets[j] = std::move(packing.sets[u]);
            packing.sets[u] = std::move(grown);
            truncate_if_over(j);
            truncate_if_over(u);
            return;
        }
        if (node.kind == TransferNode::Kind::ta_set) {
            VertexSet merged = set_union(g, packing.sets[j], x);
            DivideResult res = divide_with_threshold(g, merged, Frac(targets[j]));
            if (res.kind != DivideResult::Kind::split)
                invariant_failure("divide found a separator inside a satisfied "
                                  "separator-free set");
            packing.sets[j] = std::move(res.first);
            packing.sets[u] = std::move(res.second);
            truncate_if_over(j);
            truncate_if_over(u);
            return;
        }
        if (node.kind != TransferNode::Kind::tb_component)
            invariant_failure("interior path node of unexpected kind");
        // Accumulate: the component moves from T_j into X.
        x = set_union(g, x, node.vertices);
        packing.sets[j] = set_difference(g, packing.sets[j], node.vertices);
        if (g_debug_asserts && packing.sets[j].weight < targets[j])
            invariant_failure("accumulation dropped a satisfied set below its target");
    }
    invariant_failure("transfer path ended without a terminating step");
}

Partition double_bounded_gl(const WeightedGraph& g, const TargetWeights& targets,
                            GlStats* stats) {
    const int k = targets.k();
    const Frac cap = frac_max(targets.ratio(), Frac(3));

    GlPacking packing = bounded_gl(g, targets, Frac(1, 3), stats);
    if (packing.filled_count() < k)
        throw Error(errc::precondition_violated,
                    "initial run left empty slots; the input cannot satisfy the stated "
                    "preconditions");

    const long long iter_cap = (long long)k * std::max(1, g.num_vertices());
    long long prev_tstar = -1, prev_assigned = -1;
    long long rounds = 0;
    while (true) {
        VertexSet covered = packing.covered(g);
        if (covered.size() == g.num_vertices()) break;
        if (++rounds > iter_cap)
            throw Error(errc::loop_cap_exceeded, "transfer phase exceeded k*|V| iterations");
        if (stats) ++stats->transfer_iterations;

        relabel_equal_targets(packing, targets);
        TransferGraph h = build_transfer_graph(g, packing, targets);
        transfer_vertices(g, packing, targets, h, find_transfer_path(h));

        if (!pack_satisfied(g, packing, targets, cap))
            invariant_failure("packing not pack-satisfied after a transfer");
        long long ts = tstar_size(packing, targets);
        long long assigned = packing.covered(g).size();
        if (prev_tstar >= 0 &&
            !(ts > prev_tstar || (ts == prev_tstar && assigned > prev_assigned)))
            invariant_failure("transfer made no progress");
        prev_tstar = ts;
        prev_assigned = assigned;
    }
    return packing.sets;
}

Partition balanced_kconnected(const WeightedGraph& g, int k, GlStats* stats) {
    if (k < 1) throw Error(errc::precondition_violated, "k must be at least 1");
    if (g.total_weight() < (Weight)k * g.max_weight())
        throw Error(errc::precondition_violated, "w(G) < k*w_max");
    const Weight base = g.total_weight() / k;
    const Weight extra = g.total_weight() % k;
    std::vector<Weight> targets(k, base);
    for (int i = 0; i < extra; ++i) ++targets[i];
    return double_bounded_gl(g, TargetWeights(std::move(targets)), stats);
}

} // namespace bcp

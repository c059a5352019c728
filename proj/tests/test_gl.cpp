#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "bcp/gen.hpp"
#include "bcp/gl.hpp"

using namespace bcp;

namespace {

WeightedGraph unit(int n, std::vector<Edge> edges) {
    std::vector<Weight> w(n, 1);
    return build_graph(n, edges, w);
}

WeightedGraph cycle(int n) {
    std::vector<Edge> e;
    for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
    e.emplace_back(0, n - 1);
    return unit(n, e);
}

WeightedGraph complete(int n) {
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return unit(n, e);
}

void check_cvp(const WeightedGraph& g, const Partition& parts) {
    std::set<int> seen;
    for (const auto& p : parts) {
        REQUIRE(!p.empty());
        CHECK(is_connected(g, p));
        for (int v : p.members) CHECK(seen.insert(v).second);
    }
    CHECK((int)seen.size() == g.num_vertices());
}

struct KInstance {
    WeightedGraph g;
    std::vector<Weight> targets;
    int k;
};

// Seeded k-connected instance with targets that sum to w(G), each at least
// w_max.
KInstance make_instance(std::uint64_t seed, int k, int max_n) {
    GenSpec spec;
    spec.model = GenModel::harary_plus;
    spec.seed = seed;
    spec.k = k;
    spec.n = std::max(3 * k + 2, (int)(seed % (std::uint64_t)max_n) + k + 2);
    if (spec.n > max_n) spec.n = max_n;
    spec.extra_edges = (int)(seed % 4);
    spec.weight_lo = 1;
    spec.weight_hi = 3;
    WeightedGraph g = gen_k_connected(spec);

    Weight wmax = g.max_weight();
    Weight rest = g.total_weight() - (Weight)k * wmax;
    REQUIRE(rest >= 0);
    std::vector<Weight> targets(k, wmax);
    SplitMix64 rng(seed ^ 0xD1CEULL);
    for (int i = 0; i < k - 1; ++i) {
        Weight take = rest > 0 ? (Weight)rng.next_below((std::uint64_t)rest + 1) : 0;
        targets[i] += take;
        rest -= take;
    }
    targets[k - 1] += rest;
    return {std::move(g), std::move(targets), k};
}

} // namespace

TEST_CASE("target weights sort descending and compute the ratio") {
    TargetWeights t({2, 5, 3});
    CHECK(t.targets == std::vector<Weight>{5, 3, 2});
    CHECK(t.ratio() == Frac(5, 2));
    CHECK(t.sum() == 10);
    CHECK_THROWS_AS(TargetWeights({}), Error);
    CHECK_THROWS_AS(TargetWeights({1, 0}), Error);
}

TEST_CASE("preprocess peels singletons for reachable targets") {
    // K_5 with unit weights and targets (3,1,1), alpha=1: the two 1-targets
    // peel into singletons.
    WeightedGraph k5 = complete(5);
    PreprocessResult r = preprocess_heavy(k5, TargetWeights({3, 1, 1}), Frac(1));
    CHECK(r.reduced == std::vector<Weight>{3});
    CHECK(r.reduced_slot == std::vector<int>{0});
    CHECK(r.fixed_singletons[0] == -1);
    CHECK(r.fixed_singletons[1] == 0);
    CHECK(r.fixed_singletons[2] == 1);
    CHECK(r.working.size() == 3);

    // alpha = 1/3 with w_max already below a third of the smallest target.
    WeightedGraph c8 = cycle(8);
    r = preprocess_heavy(c8, TargetWeights({4, 4}), Frac(1, 3));
    CHECK(r.reduced == std::vector<Weight>{4, 4});
    CHECK(r.working.size() == 8);

    // A single vertex consumed entirely.
    WeightedGraph one = build_graph(1, {}, std::vector<Weight>{7});
    r = preprocess_heavy(one, TargetWeights({7}), Frac(1));
    CHECK(r.reduced.empty());
    CHECK(r.working.empty());
    CHECK(r.fixed_singletons[0] == 0);
}

TEST_CASE("preprocess residual invariant") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        KInstance inst = make_instance(seed, 3, 14);
        for (Frac alpha : {Frac(1, 3), Frac(1)}) {
            PreprocessResult r =
                preprocess_heavy(inst.g, TargetWeights(inst.targets), alpha);
            Weight sum = 0;
            for (Weight w : r.reduced) sum += w;
            CHECK(sum <= r.working.weight);
            Weight wmax = 0;
            for (int v : r.working.members) wmax = std::max(wmax, inst.g.weight(v));
            if (!r.reduced.empty()) CHECK(wmax < alpha * r.reduced.back());
        }
    }
}

TEST_CASE("carve_set grows by BFS inside a big component") {
    WeightedGraph c6 = cycle(6);
    VertexSet carved = carve_set(c6, c6.all_vertices(), 2, Frac(1));
    CHECK(carved.weight == 2);
    CHECK(is_connected(c6, carved));

    // Whole component exactly at the bound.
    WeightedGraph two = unit(2, {{0, 1}});
    carved = carve_set(two, two.all_vertices(), 2, Frac(1));
    CHECK(carved.size() == 2);

    CHECK_THROWS_AS(carve_set(two, two.all_vertices(), 9, Frac(1)), Error);
}

TEST_CASE("bounded_gl on C_4 with equal targets") {
    WeightedGraph c4 = cycle(4);
    GlPacking p = bounded_gl(c4, TargetWeights({2, 2}), Frac(1));
    CHECK(p.filled_count() == 2);
    for (int i = 0; i < 2; ++i) {
        CHECK(p.sets[i].weight >= 2);
        CHECK(p.sets[i].weight <= 6);
        CHECK(is_connected(c4, p.sets[i]));
    }
}

TEST_CASE("bounded_gl window postcondition across instances") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        int k = 2 + (int)(seed % 4);
        KInstance inst = make_instance(seed, k, 24);
        TargetWeights targets(inst.targets);
        for (Frac alpha : {Frac(1, 3), Frac(1)}) {
            GlStats stats;
            GlPacking p = bounded_gl(inst.g, targets, alpha, &stats);
            int filled = 0;
            std::set<int> seen;
            for (int i = 0; i < targets.k(); ++i) {
                if (p.sets[i].empty()) continue;
                ++filled;
                CHECK(is_connected(inst.g, p.sets[i]));
                CHECK(p.sets[i].weight >= alpha * targets[i]);
                CHECK(p.sets[i].weight <= alpha * targets[i] * 3);
                for (int v : p.sets[i].members) CHECK(seen.insert(v).second);
            }
            long long n = inst.g.num_vertices();
            CHECK(stats.max_inner_iterations <= n * n);
            if (filled < targets.k())
                CHECK((int)seen.size() == inst.g.num_vertices());
        }
    }
}

TEST_CASE("gl_one_side lower bounds") {
    WeightedGraph c4 = cycle(4);
    Partition parts = gl_one_side(c4, TargetWeights({2, 2}), GlSide::lower);
    check_cvp(c4, parts);
    for (int i = 0; i < 2; ++i) CHECK(3 * parts[i].weight >= 2);

    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        int k = 2 + (int)(seed % 4);
        KInstance inst = make_instance(seed + 100, k, 20);
        TargetWeights targets(inst.targets);
        Partition p = gl_one_side(inst.g, targets, GlSide::lower);
        check_cvp(inst.g, p);
        for (int i = 0; i < k; ++i) CHECK(3 * p[i].weight >= targets[i]);
    }
}

TEST_CASE("gl_one_side upper bounds") {
    WeightedGraph c4 = cycle(4);
    Partition parts = gl_one_side(c4, TargetWeights({2, 2}), GlSide::upper);
    check_cvp(c4, parts);
    for (int i = 0; i < 2; ++i) CHECK(parts[i].weight <= 6);

    WeightedGraph k5 = complete(5);
    parts = gl_one_side(k5, TargetWeights({3, 1, 1}), GlSide::upper);
    check_cvp(k5, parts);
    TargetWeights t534({3, 1, 1});
    for (int i = 0; i < 3; ++i) CHECK(parts[i].weight <= 3 * t534[i]);

    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        int k = 2 + (int)(seed % 4);
        KInstance inst = make_instance(seed + 200, k, 20);
        TargetWeights targets(inst.targets);
        Partition p = gl_one_side(inst.g, targets, GlSide::upper);
        check_cvp(inst.g, p);
        for (int i = 0; i < k; ++i) CHECK(p[i].weight <= 3 * targets[i]);
    }
}

TEST_CASE("transfer graph on a hand-built packing") {
    // C_6 with two assigned pairs and two leftover singletons.
    WeightedGraph c6 = cycle(6);
    GlPacking packing;
    packing.sets = {c6.make_set({0, 1}), c6.make_set({3, 4})};
    packing.categories.assign(2, {});
    packing.fixed_singletons.assign(2, -1);
    TargetWeights targets({3, 3});

    TransferGraph h = build_transfer_graph(c6, packing, targets);
    // Both sets weigh 2 < 3: two t_minus nodes; leftovers {2} and {5}.
    REQUIRE(h.nodes.size() == 4);
    CHECK(h.nodes[0].kind == TransferNode::Kind::t_minus_set);
    CHECK(h.nodes[1].kind == TransferNode::Kind::t_minus_set);
    CHECK(h.nodes[2].kind == TransferNode::Kind::q_set);
    CHECK(h.nodes[3].kind == TransferNode::Kind::q_set);
    // {2} touches both sets; {5} touches both sets. No set-set edge ({0,1}
    // and {3,4} are not adjacent in C_6).
    CHECK(h.adj[2] == std::vector<int>{0, 1});
    CHECK(h.adj[3] == std::vector<int>{0, 1});
    CHECK(h.adj[0] == std::vector<int>{2, 3});

    std::vector<int> path = find_transfer_path(h);
    REQUIRE(path.size() == 2);
    CHECK(h.nodes[path[0]].kind == TransferNode::Kind::q_set);
    CHECK(h.nodes[path[1]].kind == TransferNode::Kind::t_minus_set);
}

TEST_CASE("transfer separator components become nodes without the separator") {
    // Star-with-tail: set {0,1,2,3} where 0 is a 2-separator (unit weights),
    // target 3 satisfied? weight 4 >= 3 yes -> tb components.
    WeightedGraph g = unit(6, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {4, 5}});
    GlPacking packing;
    packing.sets = {g.make_set({0, 1, 2, 3}), g.make_set({4})};
    packing.categories.assign(2, {});
    packing.fixed_singletons.assign(2, -1);
    TargetWeights targets({3, 2});

    TransferGraph h = build_transfer_graph(g, packing, targets);
    // Set 0 (weight 4 >= 3) has 2-separator 0 with components {1},{2},{3};
    // set 1 (weight 1 < 2) is t_minus; leftover {5}.
    int tb = 0, tminus = 0, q = 0;
    bool separator_in_node = false;
    for (const auto& node : h.nodes) {
        if (node.kind == TransferNode::Kind::tb_component) ++tb;
        if (node.kind == TransferNode::Kind::t_minus_set) ++tminus;
        if (node.kind == TransferNode::Kind::q_set) ++q;
        if (node.vertices.contains(0)) separator_in_node = true;
    }
    CHECK(tb == 3);
    CHECK(tminus == 1);
    CHECK(q == 1);
    CHECK(!separator_in_node);
}

TEST_CASE("bounded_gl trivial single target") {
    WeightedGraph c6 = cycle(6);
    GlPacking p = bounded_gl(c6, TargetWeights({6}), Frac(1));
    CHECK(p.filled_count() == 1);
    CHECK(p.sets[0].size() == 6);

    GlPacking third = bounded_gl(c6, TargetWeights({6}), Frac(1, 3));
    CHECK(third.filled_count() == 1);
    CHECK(3 * third.sets[0].weight >= 6);
}

TEST_CASE("bounded_gl K_4 with mixed targets at alpha 1/3") {
    WeightedGraph k4 = complete(4);
    TargetWeights targets({2, 1, 1});
    GlPacking p = bounded_gl(k4, targets, Frac(1, 3));
    int filled = 0;
    for (int i = 0; i < 3; ++i) {
        if (p.sets[i].empty()) continue;
        ++filled;
        CHECK(3 * p.sets[i].weight >= targets[i]);
        CHECK(p.sets[i].weight <= targets[i]);
    }
    CHECK(filled <= 3);
    if (filled < 3) CHECK(p.covered(k4).size() == 4);
}

TEST_CASE("covering packing yields no leftover nodes") {
    WeightedGraph c4 = cycle(4);
    GlPacking packing;
    packing.sets = {c4.make_set({0, 1}), c4.make_set({2, 3})};
    packing.categories.assign(2, {});
    packing.fixed_singletons.assign(2, -1);
    TransferGraph h = build_transfer_graph(c4, packing, TargetWeights({2, 2}));
    for (const auto& node : h.nodes) CHECK(node.kind != TransferNode::Kind::q_set);
}

TEST_CASE("transfer absorb branch on a hand-built packing") {
    WeightedGraph c6 = cycle(6);
    GlPacking packing;
    packing.sets = {c6.make_set({0, 1}), c6.make_set({3, 4})};
    packing.categories.assign(2, {});
    packing.fixed_singletons.assign(2, -1);
    TargetWeights targets({3, 3});
    TransferGraph h = build_transfer_graph(c6, packing, targets);
    std::vector<int> path = find_transfer_path(h);
    REQUIRE(path.size() == 2);
    // Smallest-id tie break: the leftover {2} routes before {5}.
    CHECK(h.nodes[path[0]].vertices.members == std::vector<int>{2});

    transfer_vertices(c6, packing, targets, h, path);
    // {2} merged into the first unsatisfied set it touches.
    Weight total = packing.sets[0].weight + packing.sets[1].weight;
    CHECK(total == 5);
    for (int i = 0; i < 2; ++i) CHECK(is_connected(c6, packing.sets[i]));
}

TEST_CASE("transfer replaces the unsatisfied set once X is heavy enough") {
    // Satisfied separator set {0..11} (target 4, weight 12, separator 0) and
    // unsatisfied singleton {13} (target 2). The leftover {12} must take the
    // first leg with it: accumulate (branch at a separator component), then
    // the grown X replaces the unsatisfied slot.
    std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3},   {0, 4},  {4, 5},  {5, 6}, {0, 7},
                            {7, 8}, {8, 9}, {0, 10}, {10, 11}, {3, 12}, {2, 13}};
    WeightedGraph g = build_graph(14, edges, std::vector<Weight>(14, 1));
    GlPacking packing;
    packing.sets = {g.make_set({0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}), g.make_set({13})};
    packing.categories.assign(2, {});
    packing.fixed_singletons.assign(2, -1);
    TargetWeights targets({4, 2});

    TransferGraph h = build_transfer_graph(g, packing, targets);
    // Set 0 is satisfied with 4-separator 0: legs {1,2,3},{4,5,6},{7,8,9},{10,11}.
    int tb_nodes = 0;
    for (const auto& node : h.nodes)
        if (node.kind == TransferNode::Kind::tb_component) ++tb_nodes;
    CHECK(tb_nodes == 4);

    std::vector<int> path = find_transfer_path(h);
    REQUIRE(path.size() == 3);
    CHECK(h.nodes[path[0]].vertices.members == std::vector<int>{12});
    CHECK(h.nodes[path[1]].kind == TransferNode::Kind::tb_component);
    CHECK(h.nodes[path[2]].vertices.members == std::vector<int>{13});

    transfer_vertices(g, packing, targets, h, path);
    // Slot 1 now holds x = {12} + leg {1,2,3}; slot 0 lost the leg but stays
    // satisfied; the old singleton 13 returns to the pool.
    CHECK(packing.sets[1].members == std::vector<int>{1, 2, 3, 12});
    CHECK(packing.sets[0].weight == 9);
    CHECK(packing.sets[0].weight >= targets[0]);
    CHECK(!packing.sets[0].contains(1));
    CHECK(is_connected(g, packing.sets[0]));
}

TEST_CASE("transfer swaps through an out-of-prefix set") {
    // targets (10, 2): slot 0 unsatisfied (weight 4), slot 1 satisfied
    // (weight 4 > 2) but too small to absorb the weight-8 leftover. The
    // leftover flows through slot 1, which inherits the old slot-0 set.
    std::vector<Edge> edges{{0, 1},  {1, 2},   {2, 3},   {4, 5},   {5, 6},  {6, 7},
                            {8, 9},  {9, 10},  {10, 11}, {11, 12}, {12, 13}, {13, 14},
                            {14, 15}, {8, 4},  {7, 3}};
    WeightedGraph g = build_graph(16, edges, std::vector<Weight>(16, 1));
    GlPacking packing;
    packing.sets = {g.make_set({0, 1, 2, 3}), g.make_set({4, 5, 6, 7})};
    packing.categories.assign(2, {});
    packing.fixed_singletons.assign(2, -1);
    TargetWeights targets({10, 2});

    TransferGraph h = build_transfer_graph(g, packing, targets);
    std::vector<int> path = find_transfer_path(h);
    REQUIRE(path.size() == 3);
    transfer_vertices(g, packing, targets, h, path);
    CHECK(packing.sets[0].members ==
          std::vector<int>{4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15});
    CHECK(packing.sets[1].members == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("transfer divides a separator-free satisfied set") {
    // targets (4, 4): slot 0 is a unit 10-cycle (no 4-separator), slot 1 a
    // light pair. The weight-3 leftover overflows slot 0 (13 > 12), so the
    // divide routine splits cycle+leftover between slot 0 and slot 1.
    std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3}, {3, 4},  {4, 5},  {5, 6},  {6, 7},
                            {7, 8}, {8, 9}, {0, 9}, {10, 11}, {5, 10}, {12, 13}, {13, 14},
                            {12, 0}};
    WeightedGraph g = build_graph(15, edges, std::vector<Weight>(15, 1));
    GlPacking packing;
    packing.sets = {g.make_set({0, 1, 2, 3, 4, 5, 6, 7, 8, 9}), g.make_set({10, 11})};
    packing.categories.assign(2, {});
    packing.fixed_singletons.assign(2, -1);
    TargetWeights targets({4, 4});

    TransferGraph h = build_transfer_graph(g, packing, targets);
    std::vector<int> path = find_transfer_path(h);
    REQUIRE(path.size() == 3);
    CHECK(h.nodes[path[1]].kind == TransferNode::Kind::ta_set);

    transfer_vertices(g, packing, targets, h, path);
    for (int i = 0; i < 2; ++i) {
        CHECK(packing.sets[i].weight >= 4);
        CHECK(packing.sets[i].weight <= 12);
        CHECK(is_connected(g, packing.sets[i]));
    }
    // Both slots are rebuilt from cycle+leftover; the old pair is released.
    VertexSet joined = set_union(g, packing.sets[0], packing.sets[1]);
    CHECK(joined.members == g.make_set({0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 12, 13, 14}).members);
}

TEST_CASE("truncate_set trims from the smallest non-cut vertex") {
    WeightedGraph p10 = unit(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5},
                                  {5, 6}, {6, 7}, {7, 8}, {8, 9}});
    VertexSet t = truncate_set(p10, p10.all_vertices(), 2, Frac(7));
    CHECK(t.weight == 7);
    CHECK(is_connected(p10, t));
    CHECK(t.members == std::vector<int>{3, 4, 5, 6, 7, 8, 9});

    // Already within bounds: identity.
    VertexSet small = p10.make_set({0, 1, 2});
    CHECK(truncate_set(p10, small, 2, Frac(7)).members == small.members);

    CHECK_THROWS_AS(truncate_set(p10, p10.make_set({0}), 2, Frac(7)), Error);
}

TEST_CASE("double_bounded_gl on small graphs") {
    WeightedGraph c4 = cycle(4);
    Partition parts = double_bounded_gl(c4, TargetWeights({2, 2}));
    check_cvp(c4, parts);
    for (int i = 0; i < 2; ++i) {
        CHECK(3 * parts[i].weight >= 2);
        CHECK(parts[i].weight <= 6);
    }

    WeightedGraph k5 = complete(5);
    TargetWeights t311({3, 1, 1});
    parts = double_bounded_gl(k5, t311);
    check_cvp(k5, parts);
    const Frac cap = frac_max(t311.ratio(), Frac(3)); // r = 3
    for (int i = 0; i < 3; ++i) {
        CHECK(3 * parts[i].weight >= t311[i]);
        CHECK(parts[i].weight <= cap * t311[i]);
    }
}

TEST_CASE("double_bounded_gl across seeded k-connected instances") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        int k = 2 + (int)(seed % 4);
        KInstance inst = make_instance(seed + 300, k, 20);
        TargetWeights targets(inst.targets);
        const Frac cap = frac_max(targets.ratio(), Frac(3));
        GlStats stats;
        Partition p = double_bounded_gl(inst.g, targets, &stats);
        check_cvp(inst.g, p);
        for (int i = 0; i < k; ++i) {
            CHECK(3 * p[i].weight >= targets[i]);
            CHECK(p[i].weight <= cap * targets[i]);
        }
        CHECK(stats.transfer_iterations <= (long long)k * inst.g.num_vertices());
    }
}

TEST_CASE("balanced_kconnected bounds") {
    WeightedGraph c4 = cycle(4);
    Partition parts = balanced_kconnected(c4, 2);
    check_cvp(c4, parts);
    for (const auto& p : parts) {
        CHECK(3 * p.weight >= 2);
        CHECK(p.weight <= 6);
    }

    WeightedGraph c6 = cycle(6);
    parts = balanced_kconnected(c6, 3);
    check_cvp(c6, parts);
    for (const auto& p : parts) {
        CHECK(3 * p.weight >= 2);
        CHECK(p.weight <= 6);
    }

    parts = balanced_kconnected(c6, 1);
    REQUIRE(parts.size() == 1);
    CHECK(parts[0].size() == 6);

    WeightedGraph heavy = build_graph(2, std::vector<Edge>{{0, 1}},
                                      std::vector<Weight>{5, 1});
    CHECK_THROWS_AS(balanced_kconnected(heavy, 2), Error);
}

TEST_CASE("gl preconditions rejected") {
    WeightedGraph c4 = cycle(4);
    CHECK_THROWS_AS(bounded_gl(c4, TargetWeights({2, 1}), Frac(1)), Error); // sum != w
    WeightedGraph heavy = build_graph(4,
                                      std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {0, 3}},
                                      std::vector<Weight>{3, 1, 1, 1});
    CHECK_THROWS_AS(bounded_gl(heavy, TargetWeights({2, 4}), Frac(1)), Error); // min < wmax
    WeightedGraph disc = unit(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(bounded_gl(disc, TargetWeights({2, 2}), Frac(1)), Error);
}

TEST_CASE("debug asserts stay quiet on valid runs") {
    bool was = debug_asserts_enabled();
    set_debug_asserts(true);
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        int k = 2 + (int)(seed % 3);
        KInstance inst = make_instance(seed + 900, k, 16);
        Partition p = double_bounded_gl(inst.g, TargetWeights(inst.targets));
        check_cvp(inst.g, p);
    }
    set_debug_asserts(was);
}

#include "bcp/gen.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace bcp {

namespace {

constexpr int kMaxRetries = 100;

std::vector<Edge> base_edges(const GenSpec& spec, SplitMix64& rng) {
    std::vector<Edge> edges;
    switch (spec.model) {
    case GenModel::path:
        for (int v = 0; v + 1 < spec.n; ++v) edges.emplace_back(v, v + 1);
        break;
    case GenModel::cycle:
        for (int v = 0; v + 1 < spec.n; ++v) edges.emplace_back(v, v + 1);
        if (spec.n > 2) edges.emplace_back(0, spec.n - 1);
        break;
    case GenModel::star:
        for (int leaf = 1; leaf <= spec.star_leaves; ++leaf) edges.emplace_back(0, leaf);
        break;
    case GenModel::line_graph_of_gnp:
    case GenModel::harary_plus:
        for (int u = 0; u < spec.n; ++u)
            for (int v = u + 1; v < spec.n; ++v)
                if (rng.next_below(100) < (std::uint64_t)spec.p_percent) edges.emplace_back(u, v);
        break;
    }
    return edges;
}

WeightedGraph unit_graph(int n, const std::vector<Edge>& edges) {
    std::vector<Weight> ones(n, 1);
    return build_graph(n, edges, ones);
}

} // namespace

std::vector<Weight> gen_weights(const GenSpec& spec, int n) {
    if (spec.weight_lo < 1 || spec.weight_hi < spec.weight_lo)
        throw Error(errc::invalid_spec, "weight range must satisfy 1 <= lo <= hi");
    SplitMix64 rng(spec.seed ^ 0xA5A5A5A5A5A5A5A5ULL);
    std::vector<Weight> weights(n);
    const std::uint64_t span = (std::uint64_t)(spec.weight_hi - spec.weight_lo + 1);
    for (int i = 0; i < n; ++i) weights[i] = spec.weight_lo + (Weight)rng.next_below(span);
    return weights;
}

LineGraphResult gen_clawfree(const GenSpec& spec) {
    if (spec.n < 2)
        throw Error(errc::invalid_spec, "base graph needs at least 2 vertices for an edge");
    if (spec.p_percent < 1 || spec.p_percent > 100)
        throw Error(errc::invalid_spec, "edge probability must be in (0,100] percent");

    SplitMix64 rng(spec.seed);
    for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
        std::vector<Edge> edges = base_edges(spec, rng);
        if (edges.empty()) continue;
        WeightedGraph base = unit_graph(spec.n, edges);
        if (!is_connected(base, base.all_vertices())) continue;

        EdgeWeightedGraph ew;
        ew.graph = std::move(base);
        ew.edges = std::move(edges);
        ew.edge_weights = gen_weights(spec, (int)ew.edges.size());
        return line_graph(ew);
    }
    throw Error(errc::generation_failed,
                "no connected base graph after " + std::to_string(kMaxRetries) + " attempts");
}

WeightedGraph gen_k_connected(const GenSpec& spec) {
    const int n = spec.n;
    const int k = spec.k;
    if (n <= k) throw Error(errc::invalid_spec, "harary graph needs n > k");
    if (k < 1) throw Error(errc::invalid_spec, "k must be at least 1");

    std::set<Edge> edge_set;
    auto add = [&](int u, int v) {
        u = ((u % n) + n) % n;
        v = ((v % n) + n) % n;
        if (u == v) return;
        edge_set.insert({std::min(u, v), std::max(u, v)});
    };

    // Circulant core: offsets 1..floor(k/2).
    for (int off = 1; off <= k / 2; ++off)
        for (int v = 0; v < n; ++v) add(v, v + off);
    if (k == 1) {
        for (int v = 0; v + 1 < n; ++v) add(v, v + 1); // path suffices for 1-connected
    } else if (k % 2 == 1) {
        // Diameter chords for odd k.
        if (n % 2 == 0) {
            for (int v = 0; v < n / 2; ++v) add(v, v + n / 2);
        } else {
            add(0, (n - 1) / 2);
            add(0, (n + 1) / 2);
            for (int v = 1; v < (n - 1) / 2; ++v) add(v, v + (n + 1) / 2);
        }
    }

    SplitMix64 rng(spec.seed);
    int added = 0;
    for (int attempt = 0; attempt < kMaxRetries && added < spec.extra_edges; ++attempt) {
        int u = (int)rng.next_below((std::uint64_t)n);
        int v = (int)rng.next_below((std::uint64_t)n);
        if (u == v) continue;
        Edge e{std::min(u, v), std::max(u, v)};
        if (edge_set.insert(e).second) ++added;
    }

    std::vector<Edge> edges(edge_set.begin(), edge_set.end());
    return build_graph(n, edges, gen_weights(spec, n));
}

} // namespace bcp

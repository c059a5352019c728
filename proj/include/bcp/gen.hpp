#pragma once

#include <cstdint>

#include "bcp/line_graph.hpp"

namespace bcp {

/// splitmix64: the PRNG is pinned (not the platform default) so seeded
/// instances are reproducible bit-for-bit everywhere.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound); bound > 0.
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }
};

enum class GenModel { line_graph_of_gnp, harary_plus, path, cycle, star };

struct GenSpec {
    std::uint64_t seed = 1;
    int n = 1;                 // base vertex count (line_graph_of_gnp) or vertex count
    GenModel model = GenModel::line_graph_of_gnp;
    // model parameters
    int p_percent = 50;        // G(n,p) edge probability in percent, (0,100]
    int k = 2;                 // harary_plus connectivity
    int extra_edges = 0;       // harary_plus random extra edges
    int star_leaves = 3;       // star model
    Weight weight_lo = 1;
    Weight weight_hi = 1;
};

/// n seeded integers uniform in [lo, hi].
std::vector<Weight> gen_weights(const GenSpec& spec, int n);

/// Connected claw-free (c=3) graph: the line graph of a connected seeded base
/// graph, with line-vertex weights drawn from the weight range. Also returns
/// the base edge list via LineGraphResult.
LineGraphResult gen_clawfree(const GenSpec& spec);

/// Harary graph H_{k,n} plus `extra_edges` random chords; k-connected by
/// construction.
WeightedGraph gen_k_connected(const GenSpec& spec);

} // namespace bcp

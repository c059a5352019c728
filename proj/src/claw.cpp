#include "bcp/claw.hpp"

#include <string>

namespace bcp {

namespace {

bool extend_independent(const WeightedGraph& g, const std::vector<int>& nbrs, size_t start,
                        std::vector<int>& chosen, int c) {
    if ((int)chosen.size() == c) return true;
    for (size_t i = start; i < nbrs.size(); ++i) {
        int cand = nbrs[i];
        bool ok = true;
        for (int x : chosen)
            if (g.has_edge(x, cand)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        chosen.push_back(cand);
        if (extend_independent(g, nbrs, i + 1, chosen, c)) return true;
        chosen.pop_back();
    }
    return false;
}

} // namespace

std::optional<ClawWitness> is_claw_free(const WeightedGraph& g, int c) {
    if (c < 3) throw Error(errc::precondition_violated, "c must be at least 3");
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (g.degree(v) < c) continue;
        std::vector<int> nbrs(g.neighbors(v).begin(), g.neighbors(v).end());
        std::vector<int> chosen;
        if (extend_independent(g, nbrs, 0, chosen, c))
            return ClawWitness{v, chosen};
    }
    return std::nullopt;
}

} // namespace bcp

#include "bcp/line_graph.hpp"

#include <algorithm>
#include <string>

namespace bcp {

LineGraphResult line_graph(const EdgeWeightedGraph& g) {
    const int m = (int)g.edges.size();
    if (m == 0) throw Error(errc::no_edges, "line graph needs at least one edge");
    if ((int)g.edge_weights.size() != m)
        throw Error(errc::index_out_of_range, "edge weight count does not match edge count");

    // incident[v] = line-vertex ids of edges touching v
    std::vector<std::vector<int>> incident(g.graph.num_vertices());
    for (int i = 0; i < m; ++i) {
        auto [u, v] = g.edges[i];
        incident[u].push_back(i);
        incident[v].push_back(i);
    }

    std::vector<Edge> line_edges;
    for (const auto& inc : incident)
        for (size_t a = 0; a < inc.size(); ++a)
            for (size_t b = a + 1; b < inc.size(); ++b)
                line_edges.emplace_back(std::min(inc[a], inc[b]), std::max(inc[a], inc[b]));
    std::sort(line_edges.begin(), line_edges.end());
    line_edges.erase(std::unique(line_edges.begin(), line_edges.end()), line_edges.end());

    LineGraphResult result;
    result.line = build_graph(m, line_edges, g.edge_weights);
    result.edge_of_vertex = g.edges;
    return result;
}

} // namespace bcp

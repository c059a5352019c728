#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "bcp/line_graph.hpp"

namespace bcp {

/// Parsed graph file. Vertex ids are 0-based in memory (the file is
/// 1-based); edges keep file order so edge parts can be reported by their
/// 1-based position in the file.
struct ParsedGraph {
    WeightedGraph graph;
    std::vector<Edge> edges;
    std::optional<std::vector<Weight>> edge_weights;
};

/// Reads the line-oriented text format:
///   p graph <n> <m>
///   v <id 1..n> <weight >= 1>      (exactly n lines)
///   e <u> <v> [<edge-weight>]      (exactly m lines)
/// '#' starts a comment; blank lines are ignored. Either every edge carries a
/// weight or none does.
ParsedGraph read_graph_file(const std::string& path);
ParsedGraph parse_graph(std::istream& in);

/// Writes the same format (1-based ids).
void write_graph(std::ostream& out, const WeightedGraph& g,
                 const std::vector<Edge>& edges,
                 const std::optional<std::vector<Weight>>& edge_weights);

} // namespace bcp

#include "bcp/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace bcp {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) {
        if (tok[0] == '#') break;
        tokens.push_back(tok);
    }
    return tokens;
}

long long to_int(const std::string& tok, int line_no, const char* what) {
    try {
        size_t pos = 0;
        long long value = std::stoll(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return value;
    } catch (const std::exception&) {
        throw ParseError(line_no, std::string("expected integer ") + what + ", got '" + tok +
                                      "'");
    }
}

} // namespace

ParsedGraph parse_graph(std::istream& in) {
    std::string line;
    int line_no = 0;
    bool have_header = false;
    long long n = 0, m = 0;
    std::vector<Weight> weights;
    std::vector<char> weight_seen;
    long long v_lines = 0;
    std::vector<Edge> edges;
    std::vector<Weight> edge_weights;
    bool any_edge_weight = false, any_edge_plain = false;

    while (std::getline(in, line)) {
        ++line_no;
        auto tok = tokenize(line);
        if (tok.empty()) continue;

        if (tok[0] == "p") {
            if (have_header) throw ParseError(line_no, "duplicate header");
            if (tok.size() != 4 || tok[1] != "graph")
                throw ParseError(line_no, "expected 'p graph <n> <m>'");
            n = to_int(tok[2], line_no, "vertex count");
            m = to_int(tok[3], line_no, "edge count");
            if (n < 1 || m < 0) throw ParseError(line_no, "invalid header counts");
            weights.assign(n, 0);
            weight_seen.assign(n, 0);
            have_header = true;
        } else if (tok[0] == "v") {
            if (!have_header) throw ParseError(line_no, "vertex line before header");
            if (tok.size() != 3) throw ParseError(line_no, "expected 'v <id> <weight>'");
            long long id = to_int(tok[1], line_no, "vertex id");
            long long w = to_int(tok[2], line_no, "vertex weight");
            if (id < 1 || id > n) throw ParseError(line_no, "vertex id outside [1,n]");
            if (weight_seen[id - 1]) throw ParseError(line_no, "duplicate vertex id");
            if (w < 1) throw ParseError(line_no, "vertex weight must be at least 1");
            weight_seen[id - 1] = 1;
            weights[id - 1] = w;
            ++v_lines;
        } else if (tok[0] == "e") {
            if (!have_header) throw ParseError(line_no, "edge line before header");
            if (tok.size() != 3 && tok.size() != 4)
                throw ParseError(line_no, "expected 'e <u> <v> [<weight>]'");
            long long u = to_int(tok[1], line_no, "edge endpoint");
            long long v = to_int(tok[2], line_no, "edge endpoint");
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError(line_no, "edge endpoint outside [1,n]");
            edges.emplace_back((int)(u - 1), (int)(v - 1));
            if (tok.size() == 4) {
                Weight w = to_int(tok[3], line_no, "edge weight");
                if (w < 1) throw ParseError(line_no, "edge weight must be at least 1");
                edge_weights.push_back(w);
                any_edge_weight = true;
            } else {
                any_edge_plain = true;
            }
            if (any_edge_weight && any_edge_plain)
                throw ParseError(line_no, "either all edges carry weights or none");
        } else {
            throw ParseError(line_no, "unknown line type '" + tok[0] + "'");
        }
    }

    if (!have_header) throw ParseError(line_no, "missing 'p graph' header");
    if (v_lines != n)
        throw Error(errc::inconsistent_header, "header announces " + std::to_string(n) +
                                                   " vertices but " + std::to_string(v_lines) +
                                                   " v lines follow");
    if ((long long)edges.size() != m)
        throw Error(errc::inconsistent_header, "header announces " + std::to_string(m) +
                                                   " edges but " +
                                                   std::to_string(edges.size()) +
                                                   " e lines follow");

    ParsedGraph result;
    try {
        result.graph = build_graph((int)n, edges, weights);
    } catch (const Error& e) {
        throw ParseError(0, e.what());
    }
    result.edges = std::move(edges);
    if (any_edge_weight) result.edge_weights = std::move(edge_weights);
    return result;
}

ParsedGraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open '" + path + "'");
    return parse_graph(in);
}

void write_graph(std::ostream& out, const WeightedGraph& g, const std::vector<Edge>& edges,
                 const std::optional<std::vector<Weight>>& edge_weights) {
    out << "p graph " << g.num_vertices() << " " << edges.size() << "\n";
    for (int v = 0; v < g.num_vertices(); ++v)
        out << "v " << (v + 1) << " " << g.weight(v) << "\n";
    for (size_t i = 0; i < edges.size(); ++i) {
        out << "e " << (edges[i].first + 1) << " " << (edges[i].second + 1);
        if (edge_weights) out << " " << (*edge_weights)[i];
        out << "\n";
    }
}

} // namespace bcp

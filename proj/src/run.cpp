#include "bcp/run.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "bcp/claw.hpp"
#include "bcp/claw_free_bcp.hpp"
#include "bcp/connectivity.hpp"
#include "bcp/gen.hpp"
#include "bcp/gl.hpp"
#include "bcp/io.hpp"
#include "bcp/oracle.hpp"

namespace bcp {

namespace {

using json = nlohmann::ordered_json;

int exit_code_for(errc code) {
    switch (code) {
    case errc::parse_error:
    case errc::inconsistent_header:
    case errc::loop_edge:
    case errc::duplicate_edge:
    case errc::non_positive_weight:
    case errc::index_out_of_range:
        return 2;
    case errc::internal_invariant_violation:
    case errc::inner_loop_cap_exceeded:
    case errc::loop_cap_exceeded:
    case errc::no_path:
    case errc::no_big_component:
        return 3;
    default:
        return 1;
    }
}

json ids_1based(const VertexSet& s) {
    json arr = json::array();
    for (int v : s.members) arr.push_back(v + 1);
    return arr;
}

json parts_json(const Partition& parts) {
    json arr = json::array();
    for (const auto& p : parts) arr.push_back(ids_1based(p));
    return arr;
}

/// Disjoint + covering + connected; throws on violation so the process can
/// exit 3 instead of printing a wrong document.
void verify_cvp(const WeightedGraph& g, const Partition& parts,
                const std::vector<Weight>& lower, const std::vector<Weight>& upper) {
    std::vector<char> seen(g.num_vertices(), 0);
    long long covered = 0;
    if (lower.size() != parts.size() || upper.size() != parts.size())
        throw Error(errc::internal_invariant_violation, "bound arrays mismatch parts");
    for (size_t i = 0; i < parts.size(); ++i) {
        const auto& p = parts[i];
        if (p.empty() || !is_connected(g, p))
            throw Error(errc::internal_invariant_violation,
                        "emitted part is empty or disconnected");
        if (p.weight < lower[i] || p.weight > upper[i])
            throw Error(errc::internal_invariant_violation,
                        "emitted part violates its verified bounds");
        for (int v : p.members) {
            if (seen[v])
                throw Error(errc::internal_invariant_violation, "emitted parts overlap");
            seen[v] = 1;
            ++covered;
        }
    }
    if (covered != g.num_vertices())
        throw Error(errc::internal_invariant_violation, "emitted parts do not cover V");
}

void emit(const RunConfig& config, const json& doc, std::ostream& out) {
    std::string text = doc.dump(2);
    out << text << "\n";
    if (!config.output.empty()) {
        std::ofstream f(config.output);
        f << text << "\n";
    }
}

Weight floor_frac(const Frac& f, Weight factor) {
    return (Frac(f.num * factor, f.den)).floor();
}

int run_bcp(const RunConfig& config, std::ostream& out) {
    ParsedGraph in = read_graph_file(config.input);
    const int k = config.k;
    const int c = config.c;
    if (k < 1) throw Error(errc::precondition_violated, "k must be at least 1");
    if (c < 3) throw Error(errc::precondition_violated, "c must be at least 3");
    if (config.verify_claw_free)
        if (auto w = is_claw_free(in.graph, c)) throw ClawWitnessError(*w);

    const bool min_max = config.mode == "bcp-min-max";
    BcpSolution sol = min_max ? min_max_bcp(in.graph, k, c) : max_min_bcp(in.graph, k, c);

    std::vector<Weight> lower(k, 1), upper(k, in.graph.total_weight());
    if (min_max) {
        // max part < (c-1) * max(w_max, ceil(w/k))
        for (auto& u : upper) u = (Weight)(c - 1) * sol.lower_certificate - 1;
    } else {
        for (auto& l : lower) l = sol.lower_certificate / (Weight)(c - 1);
    }
    verify_cvp(in.graph, sol.parts, lower, upper);

    json doc;
    doc["mode"] = config.mode;
    doc["k"] = k;
    doc["c"] = c;
    doc["objective"] = sol.objective;
    doc["bounds"] = {{"lower", lower}, {"upper", upper}};
    doc["parts"] = parts_json(sol.parts);
    doc["certificate"] = min_max ? json{{"lambda", sol.lower_certificate}}
                                 : json{{"x_hat", sol.lower_certificate}};
    doc["verified"] = true;
    emit(config, doc, out);
    return 0;
}

int run_bcep(const RunConfig& config, std::ostream& out) {
    ParsedGraph in = read_graph_file(config.input);
    if (!in.edge_weights)
        throw Error(errc::precondition_violated, "bcep requires edge weights in the input");
    if (config.k < 1) throw Error(errc::precondition_violated, "k must be at least 1");
    const Objective mode =
        config.objective == "max-min" ? Objective::max_min : Objective::min_max;

    EdgeWeightedGraph ew{in.graph, in.edges, *in.edge_weights};
    BcepSolution sol = bcep(ew, config.k, mode);

    // Re-verify on the line graph (parts of line vertices = parts of edges).
    LineGraphResult lg = line_graph(ew);
    std::vector<Weight> lower(config.k, 1), upper(config.k, lg.line.total_weight());
    if (mode == Objective::min_max)
        for (auto& u : upper) u = 2 * sol.line_solution.lower_certificate - 1;
    else
        for (auto& l : lower) l = sol.line_solution.lower_certificate / 2;
    verify_cvp(lg.line, sol.line_solution.parts, lower, upper);

    json doc;
    doc["mode"] = config.mode;
    doc["k"] = config.k;
    doc["c"] = 3;
    doc["objective"] = sol.objective;
    doc["bounds"] = {{"lower", lower}, {"upper", upper}};
    json parts = json::array();
    for (const auto& part : sol.edge_parts) {
        json arr = json::array();
        for (int e : part) arr.push_back(e + 1); // 1-based edge index in file order
        parts.push_back(arr);
    }
    doc["parts"] = parts;
    doc["certificate"] = mode == Objective::min_max
                             ? json{{"lambda", sol.line_solution.lower_certificate}}
                             : json{{"x_hat", sol.line_solution.lower_certificate}};
    doc["verified"] = true;
    emit(config, doc, out);
    return 0;
}

int run_gl(const RunConfig& config, std::ostream& out) {
    ParsedGraph in = read_graph_file(config.input);
    const WeightedGraph& g = in.graph;

    std::vector<Weight> target_values = config.targets;
    if (config.mode == "gl-balanced") {
        if (config.k < 1) throw Error(errc::precondition_violated, "k must be at least 1");
        if (g.total_weight() < (Weight)config.k * g.max_weight())
            throw Error(errc::precondition_violated, "w(G) < k*w_max");
        target_values.assign(config.k, g.total_weight() / config.k);
        for (int i = 0; i < g.total_weight() % config.k; ++i) ++target_values[i];
    }
    if (target_values.empty())
        throw Error(errc::precondition_violated, "targets required for gl modes");
    TargetWeights targets(target_values);
    if (targets.sum() != g.total_weight())
        throw Error(errc::precondition_violated, "targets must sum to the total weight");
    if (targets.targets.back() < g.max_weight())
        throw Error(errc::precondition_violated, "min target < w_max");
    if (config.verify_k_connected && !vertex_connectivity_at_least(g, targets.k()))
        throw Error(errc::precondition_violated, "graph is not k-connected");

    const int k = targets.k();
    Partition parts;
    std::vector<Weight> lower(k, 1), upper(k, g.total_weight());
    if (config.mode == "gl-lower") {
        parts = gl_one_side(g, targets, GlSide::lower);
        for (int i = 0; i < k; ++i) lower[i] = (targets[i] + 2) / 3;
    } else if (config.mode == "gl-upper") {
        parts = gl_one_side(g, targets, GlSide::upper);
        for (int i = 0; i < k; ++i) upper[i] = 3 * targets[i];
    } else { // gl-both, gl-balanced
        parts = double_bounded_gl(g, targets);
        const Frac cap = frac_max(targets.ratio(), Frac(3));
        for (int i = 0; i < k; ++i) {
            lower[i] = (targets[i] + 2) / 3;
            upper[i] = floor_frac(cap, targets[i]);
        }
    }
    verify_cvp(g, parts, lower, upper);

    json doc;
    doc["mode"] = config.mode;
    doc["k"] = k;
    doc["c"] = config.c;
    doc["objective"] = nullptr;
    doc["bounds"] = {{"lower", lower}, {"upper", upper}};
    doc["parts"] = parts_json(parts);
    doc["certificate"] = nullptr;
    doc["verified"] = true;
    emit(config, doc, out);
    return 0;
}

int run_verify(const RunConfig& config, std::ostream& out) {
    ParsedGraph in = read_graph_file(config.input);
    json doc;
    doc["mode"] = "verify";
    doc["n"] = in.graph.num_vertices();
    doc["m"] = in.edges.size();
    doc["total_weight"] = in.graph.total_weight();
    doc["connected"] = is_connected(in.graph, in.graph.all_vertices());
    bool ok = true;
    if (config.verify_claw_free || config.c != 0) {
        auto witness = is_claw_free(in.graph, config.c);
        doc["claw_free"] = !witness.has_value();
        if (witness) {
            json w;
            w["center"] = witness->center + 1;
            w["leaves"] = json::array();
            for (int leaf : witness->leaves) w["leaves"].push_back(leaf + 1);
            doc["witness"] = w;
            if (config.verify_claw_free) ok = false;
        }
    }
    if (config.verify_k_connected) {
        if (config.k < 1) throw Error(errc::precondition_violated, "k must be at least 1");
        bool connected = vertex_connectivity_at_least(in.graph, config.k);
        doc["k_connected"] = connected;
        if (!connected) ok = false;
    }
    doc["verified"] = true;
    emit(config, doc, out);
    return ok ? 0 : 1;
}

int run_oracle(const RunConfig& config, std::ostream& out) {
    ParsedGraph in = read_graph_file(config.input);
    if (config.k < 1) throw Error(errc::precondition_violated, "k must be at least 1");
    const Objective mode =
        config.objective == "max-min" ? Objective::max_min : Objective::min_max;
    Weight best = oracle_opt_bcp(in.graph, config.k, mode);

    Partition best_parts;
    enumerate_connected_k_partitions(in.graph, config.k, [&](const Partition& p) {
        Weight extreme = p[0].weight;
        for (const auto& s : p)
            extreme = mode == Objective::min_max ? std::max(extreme, s.weight)
                                                 : std::min(extreme, s.weight);
        if (extreme == best && best_parts.empty()) best_parts = p;
        return best_parts.empty();
    });

    json doc;
    doc["mode"] = "oracle";
    doc["k"] = config.k;
    doc["c"] = config.c;
    doc["objective"] = best;
    doc["bounds"] = {{"lower", json::array()}, {"upper", json::array()}};
    doc["parts"] = parts_json(best_parts);
    doc["certificate"] = nullptr;
    doc["verified"] = true;
    emit(config, doc, out);
    return 0;
}

int run_gen(const RunConfig& config, std::ostream& out) {
    GenSpec spec;
    spec.seed = config.seed;
    spec.n = config.n;
    spec.p_percent = config.p_percent;
    spec.k = config.k > 0 ? config.k : 2;
    spec.extra_edges = config.extra_edges;
    spec.weight_lo = config.weight_lo;
    spec.weight_hi = config.weight_hi;

    std::ostringstream buf;
    if (config.model == "line-gnp") {
        spec.model = GenModel::line_graph_of_gnp;
        LineGraphResult r = gen_clawfree(spec);
        write_graph(buf, r.line, r.line.edges(), std::nullopt);
    } else if (config.model == "harary") {
        spec.model = GenModel::harary_plus;
        WeightedGraph g = gen_k_connected(spec);
        write_graph(buf, g, g.edges(), std::nullopt);
    } else if (config.model == "path" || config.model == "cycle" || config.model == "star") {
        spec.model = config.model == "path" ? GenModel::path
                     : config.model == "cycle" ? GenModel::cycle
                                               : GenModel::star;
        if (config.model == "star") {
            spec.star_leaves = config.n - 1;
            if (spec.star_leaves < 1)
                throw Error(errc::invalid_spec, "star needs at least 2 vertices");
        }
        SplitMix64 rng(spec.seed);
        std::vector<Edge> edges;
        if (spec.model == GenModel::path)
            for (int v = 0; v + 1 < spec.n; ++v) edges.emplace_back(v, v + 1);
        else if (spec.model == GenModel::cycle) {
            for (int v = 0; v + 1 < spec.n; ++v) edges.emplace_back(v, v + 1);
            if (spec.n > 2) edges.emplace_back(0, spec.n - 1);
        } else {
            for (int leaf = 1; leaf < spec.n; ++leaf) edges.emplace_back(0, leaf);
        }
        WeightedGraph g = build_graph(spec.n, edges, gen_weights(spec, spec.n));
        write_graph(buf, g, edges, std::nullopt);
    } else {
        throw Error(errc::invalid_spec, "unknown model '" + config.model + "'");
    }

    out << buf.str();
    if (!config.output.empty()) {
        std::ofstream f(config.output);
        f << buf.str();
    }
    return 0;
}

} // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    if (config.debug_asserts) set_debug_asserts(true);
    try {
        if (config.mode == "bcp-min-max" || config.mode == "bcp-max-min")
            return run_bcp(config, out);
        if (config.mode == "bcep") return run_bcep(config, out);
        if (config.mode == "gl-lower" || config.mode == "gl-upper" ||
            config.mode == "gl-both" || config.mode == "gl-balanced")
            return run_gl(config, out);
        if (config.mode == "verify") return run_verify(config, out);
        if (config.mode == "oracle") return run_oracle(config, out);
        if (config.mode == "gen") return run_gen(config, out);
        err << "unknown mode: " << config.mode << "\n";
        return 1;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

} // namespace bcp

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "bcp/io.hpp"
#include "bcp/run.hpp"

using namespace bcp;

namespace {

ParsedGraph parse(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

std::string write_temp(const std::string& name, const std::string& text) {
    std::string path = "/tmp/" + name;
    std::ofstream f(path);
    f << text;
    return path;
}

const std::string p4_file = "p graph 4 3\n"
                            "v 1 1\nv 2 1\nv 3 1\nv 4 1\n"
                            "e 1 2\ne 2 3\ne 3 4\n";

} // namespace

#include <fstream>

TEST_CASE("parse a valid file") {
    ParsedGraph p = parse("# comment\np graph 3 2\nv 1 2\nv 2 1\nv 3 1\ne 1 2\ne 2 3\n");
    CHECK(p.graph.num_vertices() == 3);
    CHECK(p.graph.total_weight() == 4);
    CHECK(p.graph.weight(0) == 2);
    CHECK(p.edges.size() == 2);
    CHECK(!p.edge_weights.has_value());
}

TEST_CASE("parse edge weights") {
    ParsedGraph p = parse("p graph 3 3\nv 1 1\nv 2 1\nv 3 1\ne 1 2 5\ne 2 3 2\ne 1 3 1\n");
    REQUIRE(p.edge_weights.has_value());
    CHECK(*p.edge_weights == std::vector<Weight>{5, 2, 1});
}

TEST_CASE("parse errors carry reasons") {
    CHECK_THROWS_AS(parse("p graph 2 1\nv 1 0\nv 2 1\ne 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse("v 1 1\n"), ParseError);                 // before header
    CHECK_THROWS_AS(parse("p graph 2 0\nv 1 1\nv 1 1\n"), ParseError); // duplicate id
    CHECK_THROWS_AS(parse("p graph 2 1\nv 1 1\nv 2 1\ne 1 3\n"), ParseError);
    CHECK_THROWS_AS(parse("p graph 2 2\nv 1 1\nv 2 1\ne 1 2 2\ne 2 1\n"), ParseError);
    CHECK_THROWS_AS(parse("x what\n"), ParseError);

    // Header/line-count mismatches.
    try {
        parse("p graph 2 2\nv 1 1\nv 2 1\ne 1 2\n");
        FAIL("expected InconsistentHeader");
    } catch (const Error& e) {
        CHECK(e.code() == errc::inconsistent_header);
    }
    try {
        parse("p graph 3 1\nv 1 1\nv 2 1\ne 1 2\n");
        FAIL("expected InconsistentHeader");
    } catch (const Error& e) {
        CHECK(e.code() == errc::inconsistent_header);
    }
}

TEST_CASE("graph file round trip") {
    ParsedGraph p = parse(p4_file);
    std::ostringstream out;
    write_graph(out, p.graph, p.edges, p.edge_weights);
    ParsedGraph again = parse(out.str());
    CHECK(again.graph.num_vertices() == p.graph.num_vertices());
    CHECK(again.edges == p.edges);
}

TEST_CASE("run bcp-min-max end to end") {
    std::string path = write_temp("cli_p4.graph", p4_file);
    RunConfig config;
    config.mode = "bcp-min-max";
    config.input = path;
    config.k = 2;
    std::ostringstream out, err;
    int code = run(config, out, err);
    CHECK(code == 0);
    CHECK(out.str().find("\"objective\": 2") != std::string::npos);
    CHECK(out.str().find("\"verified\": true") != std::string::npos);
    CHECK(out.str().find("\"lambda\": 2") != std::string::npos);

    // Byte-identical reruns.
    std::ostringstream out2, err2;
    run(config, out2, err2);
    CHECK(out.str() == out2.str());
}

TEST_CASE("run exit codes") {
    std::string path = write_temp("cli_p4b.graph", p4_file);
    std::ostringstream out, err;

    RunConfig bad_targets;
    bad_targets.mode = "gl-both";
    bad_targets.input = path;
    bad_targets.targets = {1, 1};
    CHECK(run(bad_targets, out, err) == 1); // sum != w(G)

    RunConfig missing;
    missing.mode = "bcp-min-max";
    missing.input = "/tmp/does_not_exist.graph";
    missing.k = 2;
    CHECK(run(missing, out, err) == 2);

    std::string malformed = write_temp("cli_bad.graph", "p graph 2 1\nv 1 0\nv 2 1\ne 1 2\n");
    RunConfig parse_fail;
    parse_fail.mode = "verify";
    parse_fail.input = malformed;
    CHECK(run(parse_fail, out, err) == 2);

    RunConfig too_many;
    too_many.mode = "bcp-min-max";
    too_many.input = path;
    too_many.k = 9;
    CHECK(run(too_many, out, err) == 1);
}

TEST_CASE("run bcep over an edge-weighted triangle") {
    std::string path = write_temp("cli_tri.graph",
                                  "p graph 3 3\nv 1 1\nv 2 1\nv 3 1\n"
                                  "e 1 2 1\ne 2 3 1\ne 1 3 1\n");
    RunConfig config;
    config.mode = "bcep";
    config.input = path;
    config.k = 3;
    std::ostringstream out, err;
    CHECK(run(config, out, err) == 0);
    CHECK(out.str().find("\"objective\": 1") != std::string::npos);

    // Without edge weights bcep is a named precondition failure.
    std::string plain = write_temp("cli_tri_plain.graph",
                                   "p graph 3 3\nv 1 1\nv 2 1\nv 3 1\n"
                                   "e 1 2\ne 2 3\ne 1 3\n");
    config.input = plain;
    std::ostringstream out2, err2;
    CHECK(run(config, out2, err2) == 1);
    CHECK(err2.str().find("edge weights") != std::string::npos);
}

TEST_CASE("run gl modes end to end") {
    std::string path = write_temp("cli_c4.graph",
                                  "p graph 4 4\nv 1 1\nv 2 1\nv 3 1\nv 4 1\n"
                                  "e 1 2\ne 2 3\ne 3 4\ne 1 4\n");
    for (std::string mode : {"gl-lower", "gl-upper", "gl-both"}) {
        RunConfig config;
        config.mode = mode;
        config.input = path;
        config.targets = {2, 2};
        std::ostringstream out, err;
        CHECK(run(config, out, err) == 0);
        CHECK(out.str().find("\"verified\": true") != std::string::npos);
    }

    RunConfig balanced;
    balanced.mode = "gl-balanced";
    balanced.input = path;
    balanced.k = 2;
    balanced.verify_k_connected = true;
    std::ostringstream out, err;
    CHECK(run(balanced, out, err) == 0);
}

TEST_CASE("run verify and oracle modes") {
    std::string path = write_temp("cli_star.graph",
                                  "p graph 4 3\nv 1 1\nv 2 1\nv 3 1\nv 4 1\n"
                                  "e 1 2\ne 1 3\ne 1 4\n");
    RunConfig config;
    config.mode = "verify";
    config.input = path;
    std::ostringstream out, err;
    CHECK(run(config, out, err) == 0);
    CHECK(out.str().find("\"claw_free\": false") != std::string::npos);

    config.verify_claw_free = true;
    std::ostringstream out2, err2;
    CHECK(run(config, out2, err2) == 1); // star fails the claw-free check

    RunConfig oracle;
    oracle.mode = "oracle";
    oracle.input = path;
    oracle.k = 2;
    oracle.objective = "max-min";
    std::ostringstream out3, err3;
    CHECK(run(oracle, out3, err3) == 0);
    CHECK(out3.str().find("\"objective\": 1") != std::string::npos);
}

TEST_CASE("run gen produces a loadable deterministic instance") {
    RunConfig config;
    config.mode = "gen";
    config.model = "harary";
    config.n = 8;
    config.k = 3;
    config.seed = 5;
    config.weight_lo = 1;
    config.weight_hi = 4;
    std::ostringstream out, err;
    CHECK(run(config, out, err) == 0);
    ParsedGraph p = parse(out.str());
    CHECK(p.graph.num_vertices() == 8);

    std::ostringstream out2, err2;
    run(config, out2, err2);
    CHECK(out.str() == out2.str());

    for (std::string model : {"line-gnp", "path", "cycle", "star"}) {
        RunConfig c2;
        c2.mode = "gen";
        c2.model = model;
        c2.n = 6;
        c2.seed = 3;
        std::ostringstream o, e;
        CHECK(run(c2, o, e) == 0);
        ParsedGraph g2 = parse(o.str());
        CHECK(g2.graph.num_vertices() >= 1);
    }
}

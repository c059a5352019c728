#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bcp/graph.hpp"

namespace bcp {

struct RunConfig {
    std::string mode; // bcp-min-max | bcp-max-min | bcep | gl-lower | gl-upper |
                      // gl-both | gl-balanced | verify | gen | oracle
    std::string input;
    std::string output;
    int k = 0;
    int c = 3;
    std::vector<Weight> targets;
    std::string objective = "min-max"; // bcep / oracle
    bool verify_claw_free = false;
    bool verify_k_connected = false;
    bool debug_asserts = false;
    // gen options
    std::uint64_t seed = 1;
    std::string model = "line-gnp"; // line-gnp | harary | path | cycle | star
    int n = 5;
    int p_percent = 50;
    int extra_edges = 0;
    Weight weight_lo = 1;
    Weight weight_hi = 1;
};

/// Exit codes: 0 success, 1 infeasible or violated precondition, 2 parse
/// error, 3 internal invariant violation. Every emitted partition is
/// re-verified against the input graph before anything is printed.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

} // namespace bcp

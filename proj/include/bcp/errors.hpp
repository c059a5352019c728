#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace bcp {

enum class errc {
    loop_edge,
    duplicate_edge,
    non_positive_weight,
    index_out_of_range,
    not_connected,
    root_outside_subset,
    no_edges,
    too_few_vertices,
    too_few_edges,
    x_out_of_range,
    cannot_reach_k,
    claw_witness_found,
    precondition_violated,
    no_big_component,
    no_path,
    internal_invariant_violation,
    inner_loop_cap_exceeded,
    loop_cap_exceeded,
    budget_exceeded,
    no_partition_exists,
    generation_failed,
    invalid_spec,
    parse_error,
    inconsistent_header,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

/// An induced K_{1,c}: `center` adjacent to `leaves`, leaves pairwise non-adjacent.
struct ClawWitness {
    int center = -1;
    std::vector<int> leaves;
};

class ClawWitnessError : public Error {
public:
    explicit ClawWitnessError(ClawWitness w)
        : Error(errc::claw_witness_found,
                "induced star with " + std::to_string(w.leaves.size()) +
                    " leaves at vertex " + std::to_string(w.center)),
          witness_(std::move(w)) {}

    const ClawWitness& witness() const { return witness_; }

private:
    ClawWitness witness_;
};

class ParseError : public Error {
public:
    ParseError(int line, const std::string& reason)
        : Error(errc::parse_error, "line " + std::to_string(line) + ": " + reason), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

} // namespace bcp

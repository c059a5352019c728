#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "bcp/run.hpp"

namespace {

std::pair<bcp::Weight, bcp::Weight> parse_weight_range(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw CLI::ValidationError("--weights", "expected lo:hi");
    try {
        return {std::stoll(text.substr(0, colon)), std::stoll(text.substr(colon + 1))};
    } catch (const std::exception&) {
        throw CLI::ValidationError("--weights", "expected integers lo:hi");
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Balanced connected partition toolkit"};
    app.require_subcommand(1);

    bcp::RunConfig config;
    if (const char* env = std::getenv("PARTITION_DEBUG_ASSERTS"))
        config.debug_asserts = std::string(env) == "1";

    std::string weights_text;
    const std::vector<std::string> modes = {"bcp-min-max", "bcp-max-min", "bcep",
                                            "gl-lower",    "gl-upper",    "gl-both",
                                            "gl-balanced", "verify",      "oracle"};
    for (const auto& mode : modes) {
        CLI::App* sub = app.add_subcommand(mode);
        sub->add_option("--input", config.input)->required();
        sub->add_option("--k", config.k);
        sub->add_option("--c", config.c);
        sub->add_option("--targets", config.targets)->delimiter(',');
        sub->add_option("--objective", config.objective)
            ->check(CLI::IsMember({"min-max", "max-min"}));
        sub->add_flag("--verify-claw-free", config.verify_claw_free);
        sub->add_flag("--verify-k-connected", config.verify_k_connected);
        sub->add_option("--output", config.output);
        sub->add_option("--seed", config.seed);
        sub->callback([&config, mode]() { config.mode = mode; });
    }

    CLI::App* gen = app.add_subcommand("gen", "write a seeded instance file");
    gen->add_option("--model", config.model)
        ->check(CLI::IsMember({"line-gnp", "harary", "path", "cycle", "star"}));
    gen->add_option("--n", config.n);
    gen->add_option("--k", config.k);
    gen->add_option("--p", config.p_percent);
    gen->add_option("--extra-edges", config.extra_edges);
    gen->add_option("--weights", weights_text);
    gen->add_option("--seed", config.seed);
    gen->add_option("--output", config.output);
    gen->callback([&config, &weights_text]() {
        config.mode = "gen";
        if (!weights_text.empty()) {
            auto [lo, hi] = parse_weight_range(weights_text);
            config.weight_lo = lo;
            config.weight_hi = hi;
        }
    });

    CLI11_PARSE(app, argc, argv);
    return bcp::run(config, std::cout, std::cerr);
}

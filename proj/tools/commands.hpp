#pragma once

#include <string>

#include "run_config.hpp"

namespace splab::cli {

struct CommandContext {
    RunConfig cfg;
    std::string out_dir = "out";
    int threads = 0;
    OutputFormat format = OutputFormat::both;
};

void cmd_sweep(const CommandContext& ctx);
void cmd_mingap(const CommandContext& ctx);
void cmd_crossing(const CommandContext& ctx);
void cmd_scaling(const CommandContext& ctx);
void cmd_projected(const CommandContext& ctx);

} // namespace splab::cli

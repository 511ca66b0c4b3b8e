#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "run_config.hpp"
#include "splab/errors.hpp"

namespace {

struct CommonArgs {
    std::string config;
    std::string out = "out";
    int threads = 0;
    std::string format = "both";
};

void add_common(CLI::App* sub, CommonArgs& args) {
    sub->add_option("--config", args.config, "flat key=value run description");
    sub->add_option("--out", args.out, "output directory (created if missing)");
    sub->add_option("--threads", args.threads, "worker threads (0 = all cores)");
    sub->add_option("--format", args.format, "csv|json|both (dual-output commands)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral laboratory for transverse-field optimization on "
                 "Hamming-weight potentials"};
    app.require_subcommand(1);

    CommonArgs args;
    int wb_flag = -1, d_flag = -1;

    CLI::App* sweep = app.add_subcommand("sweep", "gap/overlap as a function of b");
    CLI::App* mingap = app.add_subcommand("mingap", "locate the minimum gap over b");
    CLI::App* crossing =
        app.add_subcommand("crossing", "analytic and numeric critical-field estimates");
    CLI::App* scaling =
        app.add_subcommand("scaling", "runtime exponents C across system sizes");
    CLI::App* projected =
        app.add_subcommand("projected", "distance-d ball restriction around a reference string");
    for (CLI::App* sub : {sweep, mingap, crossing, scaling, projected})
        add_common(sub, args);
    projected->add_option("--wb", wb_flag, "reference string Hamming weight");
    projected->add_option("--d", d_flag, "ball radius");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        splab::cli::CommandContext ctx;
        ctx.cfg = splab::cli::load_config(args.config);
        ctx.out_dir = args.out;
        ctx.threads = args.threads;
        ctx.format = splab::cli::parse_format(args.format);
        if (wb_flag >= 0) ctx.cfg.w_b = wb_flag;
        if (d_flag >= 0) ctx.cfg.d = d_flag;

        if (sweep->parsed()) splab::cli::cmd_sweep(ctx);
        if (mingap->parsed()) splab::cli::cmd_mingap(ctx);
        if (crossing->parsed()) splab::cli::cmd_crossing(ctx);
        if (scaling->parsed()) splab::cli::cmd_scaling(ctx);
        if (projected->parsed()) splab::cli::cmd_projected(ctx);
        return 0;
    } catch (const splab::config_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}

// srlab.cpp — command-line front end.
//
// Exit codes: 0 success, 1 failed checks or failed sweep points,
// 2 bad usage or bad configuration.

#include "srlab/commands.hpp"
#include "srlab/config.hpp"

#include <CLI11.hpp>
#include <omp.h>

#include <cstdio>
#include <exception>

int main(int argc, char** argv) {
    CLI::App app{"numerical laboratory for superradiant phase transitions"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = "srlab_out";
    int threads = 0;
    unsigned long long seed = 0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "JSON or TOML run configuration")
            ->required()
            ->check(CLI::ExistingFile);
        sub->add_option("--out", out_dir, "output directory (default srlab_out)");
        sub->add_option("--threads", threads, "OpenMP thread count (0 keeps the runtime default)");
        sub->add_option("--seed", seed, "seed recorded in the manifest");
        return sub;
    };

    CLI::App* boundary =
        add_common(app.add_subcommand("boundary", "closed-form critical frequency and coupling")),
            *sweep = add_common(
                app.add_subcommand("sweep", "exact-diagonalization sweep over a parameter grid")),
            *verify =
                add_common(app.add_subcommand("verify", "cross-formalism consistency suite")),
            *exponent = add_common(app.add_subcommand(
                "exponent", "order-parameter exponent from the free-energy minimizer"));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        srlab::RunConfig cfg = srlab::load_config(config_path);
        cfg.seed = seed;
        if (threads > 0) omp_set_num_threads(threads);

        if (boundary->parsed()) return srlab::cmd_boundary(cfg, out_dir);
        if (sweep->parsed()) return srlab::cmd_sweep(cfg, out_dir);
        if (verify->parsed()) return srlab::cmd_verify(cfg, out_dir);
        if (exponent->parsed()) return srlab::cmd_exponent(cfg, out_dir);
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "configuration error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}

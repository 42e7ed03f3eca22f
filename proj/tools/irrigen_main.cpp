#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "irrigen/cli/run.hpp"

int main(int argc, char** argv) {
    CLI::App app{"irrigen - entropy generation toolkit for open thermodynamic systems"};
    std::string config_path;
    std::string out_dir = ".";
    std::uint64_t seed = 0;
    bool sequential = false;
    app.add_option("config", config_path, "run configuration file")->required();
    app.add_option("--out", out_dir, "directory for report/CSV outputs (default .)");
    auto* seed_opt = app.add_option("--seed", seed, "override the config seed");
    app.add_flag("--sequential", sequential,
                 "deterministic single-threaded mode (bitwise-reproducible outputs)");
    CLI11_PARSE(app, argc, argv);

    std::ifstream file(config_path);
    if (!file) {
        std::cerr << "irrigen: cannot read config file '" << config_path << "'\n";
        return irrigen::cli::exit_validation_error;
    }
    std::stringstream buffer;
    buffer << file.rdbuf();

    irrigen::cli::RunConfig config;
    try {
        config = irrigen::cli::parse_config(buffer.str());
    } catch (const irrigen::cli::ConfigError& e) {
        std::cerr << "irrigen: " << config_path << ": " << e.what() << "\n";
        return irrigen::cli::exit_validation_error;
    }

    irrigen::cli::RunOptions options;
    options.out_dir = out_dir;
    options.sequential = sequential;
    if (seed_opt->count() > 0) options.seed_override = seed;
    const int status = irrigen::cli::run(config, options);
    if (status == irrigen::cli::exit_ok)
        std::cout << "report written to " << (options.out_dir / config.output_path).string()
                  << "\n";
    return status;
}

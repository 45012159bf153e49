#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "randwave/experiment/config.hpp"
#include "randwave/experiment/runner.hpp"

namespace rx = randwave::experiment;

int main(int argc, char** argv)
{
    CLI::App app{"Seeded Monte-Carlo experiments on random waves"};
    std::string config_path;
    std::string out;
    std::uint64_t seed = 0;
    unsigned workers = 0;
    std::uint64_t trials = 0;
    app.add_option("config", config_path, "INI experiment config")->required();
    auto* out_opt = app.add_option("--out", out, "output root directory");
    auto* seed_opt = app.add_option("--seed", seed, "master seed");
    auto* workers_opt = app.add_option("--workers", workers, "worker threads (default: RANDWAVE_WORKERS or 1)");
    auto* trials_opt = app.add_option("--trials", trials, "Monte-Carlo trials")->check(CLI::PositiveNumber);
    try
    {
        app.parse(argc, argv);
    }
    catch (CLI::ParseError const& e)
    {
        int const code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try
    {
        auto config = rx::load_config(config_path);
        if (*out_opt)
            config.out = out;
        if (*seed_opt)
            config.seed = seed;
        if (*workers_opt)
            config.workers = workers;
        if (*trials_opt)
            config.trials = trials;
        auto dir = rx::run(config);
        std::cout << dir.string() << "\n";
        return 0;
    }
    catch (rx::ConfigError const& e)
    {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    }
    catch (rx::InvariantFailure const& e)
    {
        std::cerr << e.what() << "\n";
        return 2;
    }
    catch (std::exception const& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

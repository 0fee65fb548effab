#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ucc/config.hpp"
#include "ucc/errors.hpp"
#include "ucc/experiments.hpp"

namespace {

struct CommonArgs {
    std::string config_path;
    std::vector<std::string> sets;
    std::string output;
};

void add_common(CLI::App* sub, CommonArgs& args) {
    sub->add_option("-c,--config", args.config_path,
                    "Flat key = value configuration file");
    sub->add_option("-s,--set", args.sets,
                    "Override one configuration key (key=value, repeatable; wins over the file)");
    sub->add_option("-o,--output", args.output, "Write CSV here instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Delay-aware cooperative edge caching: placement, cluster sizing and "
                 "Monte Carlo validation"};
    app.require_subcommand(1);

    CommonArgs place_args, sweep_args, cluster_args, validate_args;
    CLI::App* place = app.add_subcommand(
        "place", "Build one cache placement and report loads, bandwidth shares and delay");
    add_common(place, place_args);
    CLI::App* sweep = app.add_subcommand(
        "sweep", "Sweep one variable and emit hit ratio, spectral proxy and delay per scheme");
    add_common(sweep, sweep_args);
    CLI::App* cluster = app.add_subcommand(
        "cluster", "Evaluate cluster sizes: admissibility, delay and the optimal size");
    add_common(cluster, cluster_args);
    CLI::App* validate = app.add_subcommand(
        "validate", "Monte Carlo check of the analytic rate lower bound");
    add_common(validate, validate_args);

    CLI11_PARSE(app, argc, argv);

    const CommonArgs* args = nullptr;
    std::string name;
    if (place->parsed()) {
        args = &place_args;
        name = "place";
    } else if (sweep->parsed()) {
        args = &sweep_args;
        name = "sweep";
    } else if (cluster->parsed()) {
        args = &cluster_args;
        name = "cluster";
    } else {
        args = &validate_args;
        name = "validate";
    }

    try {
        ucc::ExperimentConfig config = ucc::build_config(args->config_path, args->sets);
        if (!args->output.empty()) config.output = args->output;
        return ucc::run_command(name, config);
    } catch (const ucc::ConfigError& err) {
        std::cerr << "config error: " << err.what() << "\n";
        return static_cast<int>(ucc::ExitCode::ConfigError);
    } catch (const ucc::ModelError& err) {
        std::cerr << "model error: " << err.what() << "\n";
        return static_cast<int>(ucc::ExitCode::ModelError);
    } catch (const ucc::AllocationError& err) {
        std::cerr << "model error: " << err.what() << "\n";
        return static_cast<int>(ucc::ExitCode::ModelError);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return static_cast<int>(ucc::ExitCode::ConfigError);
    }
}

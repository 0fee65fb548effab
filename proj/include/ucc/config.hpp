#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ucc/clustering.hpp"
#include "ucc/model.hpp"
#include "ucc/montecarlo.hpp"

namespace ucc {

inline double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
inline double watts_to_dbm(double watts) { return 10.0 * std::log10(watts) + 30.0; }

// All tunables in the human units used by config files and flags; SI
// conversion happens once in the make_* builders below.
struct ExperimentConfig {
    // network
    double rho_per_km2 = 50.0;
    double lambda_per_km2 = 500.0;
    double pt_w_per_mhz = 1.0;
    double alpha = 4.0;
    double sigma2_w_per_mhz = dbm_to_watts(-105.0);
    std::vector<double> i_w_per_mhz = {dbm_to_watts(-75.0), dbm_to_watts(-70.0),
                                       dbm_to_watts(-68.0)};
    std::string i_extension = "hold_last";  // hold_last | strict
    double bandwidth_mhz = 10.0;
    double dbh_ms = 200.0;
    int cluster_size = 3;

    // content library
    int files = 1000;
    double zipf_nu = 1.0;
    std::int64_t segments_per_file = 1000;
    double segment_bits = 1000.0;
    std::string trace_path;  // when set, popularity comes from this trace

    // experiment
    std::int64_t cache_budget = 1000;
    std::string scheme = "greedy";  // single-scheme commands
    std::vector<std::string> schemes = {"greedy", "noncoop", "hitmax"};
    std::string sweep_var = "C";  // one of C, rho, lambda, nu, D_BH, K
    std::vector<double> sweep_values;
    int k_min = 1;
    int k_max = 10;
    std::vector<double> dbh_sweep_ms;  // non-empty switches cluster cmd to the sweep mode

    // monte carlo
    double region_side_m = 2000.0;
    int n_drops = 100;
    int n_users_sampled = 100;
    std::uint64_t seed = 1;
    std::vector<double> lambda_sweep_per_km2 = {250.0, 500.0, 1000.0};
    std::string request_mode = "group";  // group | perfile

    std::string output;  // empty = stdout
};

// Parses flat "key = value" text ('#' comments, blank lines ignored) into an
// ordered key/value list. Malformed lines raise ConfigError with the line
// number.
std::vector<std::pair<std::string, std::string>> parse_config_text(const std::string& text);

// Applies one key/value pair; unknown keys and unparseable values raise
// ConfigError naming the key.
void apply_key(ExperimentConfig& config, const std::string& key, const std::string& value);

// Defaults, then the file (when non-empty path), then overrides, in order.
ExperimentConfig build_config(const std::string& config_path,
                              const std::vector<std::string>& overrides);

NetworkParams make_network(const ExperimentConfig& config);
InterferenceSchedule make_schedule(const ExperimentConfig& config);
FileLibrary make_library(const ExperimentConfig& config);
SimConfig make_sim(const ExperimentConfig& config);

// Resolved configuration as sorted (key, value) pairs for output metadata.
std::vector<std::pair<std::string, std::string>> config_metadata(const ExperimentConfig& config);

}  // namespace ucc

#include "ucc/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <ostream>
#include <set>

#include "ucc/csv.hpp"
#include "ucc/errors.hpp"
#include "ucc/placement.hpp"

namespace ucc {

namespace {

void write_metadata(std::ostream& out, const std::string& command,
                    const ExperimentConfig& config) {
    out << "# tool = ucc " << command << "\n";
    for (const auto& [key, value] : config_metadata(config)) {
        out << "# " << key << " = " << value << "\n";
    }
}

PlacementResult run_scheme(const std::string& scheme, const FileLibrary& lib,
                           const NetworkParams& net, std::int64_t C) {
    if (scheme == "greedy") return greedy_place(lib, net, C);
    if (scheme == "noncoop") return place_non_cooperative(lib, net, C);
    if (scheme == "hitmax") return place_hit_ratio_maximal(lib, net, C);
    throw ConfigError("unknown scheme '" + scheme + "'");
}

double no_cache_delay_s(const FileLibrary& lib, const NetworkParams& net) {
    const SpectralProfile profile = spectral_profile(net);
    GroupLoad empty;
    empty.omega.assign(static_cast<std::size_t>(net.K) + 1, 0.0);
    empty.omega.back() = 1.0;
    return average_delay(empty, profile, lib, net).total_s;
}

struct SchemeMetrics {
    double hit_ratio = 0.0;
    double proxy_raw = 0.0;  // squared inverse of the load-weighted spectral sum
    double delay_s = 0.0;
};

SchemeMetrics metrics_of(const PlacementResult& result, const SpectralProfile& profile) {
    SchemeMetrics m;
    m.hit_ratio = 1.0 - result.load.omega.back();
    double T = 0.0;
    for (std::size_t i = 0; i < result.load.omega.size(); ++i) {
        T += result.load.omega[i] / std::sqrt(profile.tau[i]);
    }
    m.proxy_raw = 1.0 / (T * T);
    m.delay_s = result.delay.total_s;
    return m;
}

// Applies one sweep value to a copy of the configuration.
ExperimentConfig at_sweep_value(const ExperimentConfig& base, const std::string& var,
                                double value) {
    ExperimentConfig c = base;
    if (var == "C") {
        const std::int64_t budget = static_cast<std::int64_t>(std::llround(value));
        if (static_cast<double>(budget) != value || budget < 0) {
            throw ConfigError("sweep over C needs non-negative integer values");
        }
        c.cache_budget = budget;
    } else if (var == "rho") {
        c.rho_per_km2 = value;
    } else if (var == "lambda") {
        c.lambda_per_km2 = value;
    } else if (var == "nu") {
        if (!c.trace_path.empty()) {
            throw ConfigError("sweep over nu requires a zipf library, not a trace");
        }
        c.zipf_nu = value;
    } else if (var == "D_BH") {
        c.dbh_ms = value;
    } else if (var == "K") {
        const int K = static_cast<int>(std::llround(value));
        if (static_cast<double>(K) != value || K < 1) {
            throw ConfigError("sweep over K needs positive integer values");
        }
        c.cluster_size = K;
    } else {
        throw ConfigError("unknown sweep variable '" + var + "'");
    }
    return c;
}

std::string sweep_value_text(const std::string& var, double value) {
    if (var == "C" || var == "K") {
        return std::to_string(static_cast<std::int64_t>(std::llround(value)));
    }
    return fmt_double(value);
}

}  // namespace

int cmd_place(const ExperimentConfig& config, std::ostream& csv, std::ostream& info) {
    const FileLibrary lib = make_library(config);
    const NetworkParams net = make_network(config);
    const SpectralProfile profile = spectral_profile(net);
    const PlacementResult result = run_scheme(config.scheme, lib, net, config.cache_budget);

    write_metadata(csv, "place", config);
    csv << "file_id,c_f,s_f,q_f\n";
    for (std::size_t f = 0; f < lib.num_files(); ++f) {
        csv << (f + 1) << "," << result.placement.c[f] << "," << lib.s[f] << ","
            << fmt_double(lib.popularity.q[f]) << "\n";
    }

    info << "scheme = " << config.scheme << "\n";
    info << "cache_budget = " << config.cache_budget << "\n";
    info << "cached_segments = " << result.placement.total_cached() << "\n";
    info << "hit_mass = " << fmt_double(1.0 - result.load.omega.back()) << "\n";
    info << "omega = " << join_doubles(result.load.omega) << "\n";
    info << "phi = " << join_doubles(result.allocation.phi) << "\n";
    info << "tau = " << join_doubles(profile.tau) << "\n";
    info << "wireless_s = " << fmt_double(result.delay.wireless_s) << "\n";
    info << "backhaul_s = " << fmt_double(result.delay.backhaul_s) << "\n";
    info << "total_s = " << fmt_double(result.delay.total_s) << "\n";
    info << "baseline_total_s = " << fmt_double(no_cache_delay_s(lib, net)) << "\n";
    info << "objective_gain_s = " << fmt_double(result.objective_gain) << "\n";
    return static_cast<int>(ExitCode::Ok);
}

int cmd_sweep(const ExperimentConfig& config, std::ostream& csv, std::ostream& info) {
    if (config.sweep_values.empty()) {
        throw ConfigError("config key 'sweep_values': required for the sweep command");
    }
    if (config.schemes.empty()) {
        throw ConfigError("config key 'schemes': required for the sweep command");
    }
    std::vector<double> values = config.sweep_values;
    std::sort(values.begin(), values.end());
    std::vector<std::string> schemes = config.schemes;
    std::sort(schemes.begin(), schemes.end());
    schemes.erase(std::unique(schemes.begin(), schemes.end()), schemes.end());

    write_metadata(csv, "sweep", config);
    csv << config.sweep_var << ",scheme,hit_ratio,spectral_proxy,delay_s\n";

    // A budget sweep reuses one greedy pass with snapshots; every other
    // variable changes the model itself, so each point runs fresh.
    std::vector<PlacementResult> greedy_snapshots;
    if (config.sweep_var == "C" &&
        std::find(schemes.begin(), schemes.end(), "greedy") != schemes.end()) {
        const FileLibrary lib = make_library(config);
        const NetworkParams net = make_network(config);
        std::vector<std::int64_t> budgets;
        for (double v : values) {
            const std::int64_t b = static_cast<std::int64_t>(std::llround(v));
            if (static_cast<double>(b) != v || b < 0) {
                throw ConfigError("sweep over C needs non-negative integer values");
            }
            budgets.push_back(b);
        }
        greedy_snapshots = greedy_place_multi(lib, net, budgets);
    }

    for (std::size_t vi = 0; vi < values.size(); ++vi) {
        const double value = values[vi];
        const ExperimentConfig point = at_sweep_value(config, config.sweep_var, value);
        const FileLibrary lib = make_library(point);
        const NetworkParams net = make_network(point);
        const SpectralProfile profile = spectral_profile(net);
        // Non-cooperative placement anchors the spectral-efficiency proxy.
        const PlacementResult noncoop =
            place_non_cooperative(lib, net, point.cache_budget);
        const SchemeMetrics noncoop_metrics = metrics_of(noncoop, profile);
        for (const std::string& scheme : schemes) {
            SchemeMetrics m;
            if (scheme == "noncoop") {
                m = noncoop_metrics;
            } else if (scheme == "greedy" && !greedy_snapshots.empty()) {
                m = metrics_of(greedy_snapshots[vi], profile);
            } else {
                m = metrics_of(run_scheme(scheme, lib, net, point.cache_budget), profile);
            }
            csv << sweep_value_text(config.sweep_var, value) << "," << scheme << ","
                << fmt_double(m.hit_ratio) << ","
                << fmt_double(m.proxy_raw / noncoop_metrics.proxy_raw) << ","
                << fmt_double(m.delay_s) << "\n";
        }
    }
    info << "sweep_var = " << config.sweep_var << "\n";
    info << "points = " << values.size() << "\n";
    return static_cast<int>(ExitCode::Ok);
}

int cmd_cluster(const ExperimentConfig& config, std::ostream& csv, std::ostream& info) {
    const FileLibrary lib = make_library(config);
    const InterferenceSchedule schedule = make_schedule(config);
    // Template network at K=1; the per-K rebuild swaps in the right
    // interference vector.
    ExperimentConfig base = config;
    base.cluster_size = 1;
    const NetworkParams net_template = make_network(base);

    write_metadata(csv, "cluster", config);
    if (!config.dbh_sweep_ms.empty()) {
        std::vector<double> sweep = config.dbh_sweep_ms;
        std::sort(sweep.begin(), sweep.end());
        csv << "dbh_ms,K_opt,delay_s\n";
        for (double dbh_ms : sweep) {
            NetworkParams net = net_template;
            net.D_BH = dbh_ms * 1e-3;
            const ClusterAnalysis analysis = optimal_cluster_size(
                net, lib, schedule, config.cache_budget, config.k_min, config.k_max);
            const std::size_t opt_idx = static_cast<std::size_t>(
                std::find(analysis.K_candidates.begin(), analysis.K_candidates.end(),
                          analysis.K_opt) -
                analysis.K_candidates.begin());
            csv << fmt_double(dbh_ms) << "," << analysis.K_opt << ","
                << fmt_double(analysis.delay_s[opt_idx]) << "\n";
        }
        info << "mode = backhaul_sweep\n";
        return static_cast<int>(ExitCode::Ok);
    }

    const ClusterAnalysis analysis = optimal_cluster_size(
        net_template, lib, schedule, config.cache_budget, config.k_min, config.k_max);
    csv << "K,admissible,delay_s\n";
    for (std::size_t i = 0; i < analysis.K_candidates.size(); ++i) {
        csv << analysis.K_candidates[i] << "," << (analysis.admissible[i] ? 1 : 0) << ","
            << fmt_double(analysis.delay_s[i]) << "\n";
    }
    info << "K_opt = " << analysis.K_opt << "\n";
    return static_cast<int>(ExitCode::Ok);
}

int cmd_validate(const ExperimentConfig& config, std::ostream& csv, std::ostream& info) {
    const FileLibrary lib = make_library(config);
    const NetworkParams net = make_network(config);
    const SimConfig sim = make_sim(config);
    const PlacementResult placed = run_scheme(config.scheme, lib, net, config.cache_budget);
    std::vector<double> sweep_si;
    for (double per_km2 : config.lambda_sweep_per_km2) {
        sweep_si.push_back(per_km2 * 1e-6);
    }
    const RequestMode mode = config.request_mode == "perfile" ? RequestMode::kPerFile
                                                              : RequestMode::kGroupDraw;
    const RateBoundTable table =
        validate_rate_bound(net, lib, placed.placement, sim, sweep_si, mode);

    write_metadata(csv, "validate", config);
    csv << "lambda_per_km2,rank,simulated_rate_bps,stderr_bps,bound_rate_bps\n";
    for (const RateBoundRow& row : table.rows) {
        csv << fmt_double(row.lambda * 1e6) << "," << row.rank << ","
            << fmt_double(row.simulated_bps) << "," << fmt_double(row.stderr_bps) << ","
            << fmt_double(row.bound_bps) << "\n";
    }
    for (const RateBoundRow& row : table.rows) {
        const double gap = row.simulated_bps != 0.0
                               ? (row.simulated_bps - row.bound_bps) / row.simulated_bps
                               : 0.0;
        info << "lambda_per_km2 = " << fmt_double(row.lambda * 1e6) << ", rank = " << row.rank
             << ", n = " << row.n_samples << ", relative_gap = " << fmt_double(gap)
             << (row.within_noise ? "" : "  [bound violated beyond noise]") << "\n";
    }
    info << "bound_ok = " << (table.all_within_noise ? 1 : 0) << "\n";
    return static_cast<int>(table.all_within_noise ? ExitCode::Ok
                                                   : ExitCode::ValidationFailure);
}

int run_command(const std::string& name, const ExperimentConfig& config) {
    std::ofstream file;
    std::ostream* csv = &std::cout;
    if (!config.output.empty()) {
        file.open(config.output, std::ios::binary);
        if (!file) {
            throw ConfigError("cannot open output file '" + config.output + "'");
        }
        csv = &file;
    }
    std::ostream& info = config.output.empty() ? std::cerr : std::cout;
    if (name == "place") return cmd_place(config, *csv, info);
    if (name == "sweep") return cmd_sweep(config, *csv, info);
    if (name == "cluster") return cmd_cluster(config, *csv, info);
    if (name == "validate") return cmd_validate(config, *csv, info);
    throw ConfigError("unknown command '" + name + "'");
}

}  // namespace ucc

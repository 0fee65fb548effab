#pragma once

#include <cstdint>
#include <vector>

#include "ucc/model.hpp"
#include "ucc/placement.hpp"

namespace ucc {

// Monte Carlo harness settings. The window is a square with toroidal wrap,
// which removes edge bias from nearest-neighbour statistics.
struct SimConfig {
    double region_side = 2000.0;   // metres
    int n_drops = 100;             // independent topology realizations
    int n_users_sampled = 100;     // tagged users measured per drop
    std::uint64_t seed = 1;

    void validate() const;
    // Emits a warning line to stderr when the window holds fewer than
    // 50 * K expected stations; statistics get noisy below that.
    void warn_if_small(const NetworkParams& net) const;
};

struct Point {
    double x = 0.0;
    double y = 0.0;
};

struct Topology {
    std::vector<Point> sbs;
    std::vector<Point> users;
};

// One realization of the two independent Poisson point processes. The same
// (seed, drop_index) always yields the same point sets.
Topology sample_topology(const NetworkParams& net, const SimConfig& sim,
                         std::uint64_t drop_index);

struct DistanceStats {
    int k = 1;
    std::size_t n = 0;
    double mean_log = 0.0;     // empirical mean of ln(d_k)
    double stderr_log = 0.0;   // standard error of that mean
    double ks_distance = 0.0;  // Kolmogorov-Smirnov distance vs the closed-form CDF
};

// Empirical distance-to-k-th-nearest-station statistics over tagged users,
// compared against the closed-form law. Requires the window to hold at
// least 10*k expected stations.
DistanceStats kth_distance_stats(const NetworkParams& net, const SimConfig& sim, int k);

// How tagged users are assigned to serving groups.
enum class RequestMode {
    kGroupDraw,  // direct draw over the per-group load masses
    kPerFile,    // draw a file by popularity, then a uniform segment of it
};

struct RankRateStats {
    int rank = 0;
    std::size_t n_samples = 0;
    double mean_rate_bps = 0.0;
    double stderr_rate_bps = 0.0;
    double bound_rate_bps = 0.0;       // analytic lower bound W*phi_k*tau_k/omega_k
    double mean_cell_load = 0.0;       // rank-k users per station, cell-averaged
    double expected_cell_load = 0.0;   // lambda*omega_k/rho
};

// Simulates per-user downlink rates under the placement-induced load split.
// Every user (tagged or not) draws a serving group; users of rank k <= K
// attach to their k-th nearest station and share that group's bandwidth
// slice with the other rank-k users of the same station. Tagged users
// record rate samples; ranks with zero load are absent from the result.
std::vector<RankRateStats> simulate_rate(const NetworkParams& net, const FileLibrary& lib,
                                         const CachePlacement& placement, const SimConfig& sim,
                                         RequestMode mode = RequestMode::kGroupDraw);

struct RateBoundRow {
    double lambda = 0.0;  // user density [1/m^2]
    int rank = 0;
    std::size_t n_samples = 0;
    double simulated_bps = 0.0;
    double stderr_bps = 0.0;
    double bound_bps = 0.0;
    bool within_noise = false;  // bound <= simulated + 2*stderr
};

struct RateBoundTable {
    std::vector<RateBoundRow> rows;  // sorted by (lambda, rank)
    bool all_within_noise = true;
};

// Sweeps the user density and checks the analytic rate lower bound against
// simulation at every (density, rank) point.
RateBoundTable validate_rate_bound(const NetworkParams& net_template, const FileLibrary& lib,
                                   const CachePlacement& placement, const SimConfig& sim,
                                   const std::vector<double>& lambda_sweep,
                                   RequestMode mode = RequestMode::kGroupDraw);

}  // namespace ucc

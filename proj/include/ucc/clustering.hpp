#pragma once

#include <cstdint>
#include <vector>

#include "ucc/model.hpp"
#include "ucc/placement.hpp"

namespace ucc {

// Supplies a per-rank interference value for any cluster size. Configured
// values cover the leading ranks; ranks beyond them either reuse the last
// configured value (the default) or are rejected.
struct InterferenceSchedule {
    enum class Extension { kHoldLast, kStrict };

    std::vector<double> base;  // I_1..I_n as configured, non-decreasing
    Extension extension = Extension::kHoldLast;

    // Interference at rank k (1-based). Throws ConfigError in strict mode
    // when k exceeds the configured ranks.
    double at(int k) const;
    // First K entries, extended per policy.
    std::vector<double> first(int K) const;
};

// Network parameters rebuilt for cluster size K with the interference
// vector taken from the schedule.
NetworkParams with_cluster_size(const NetworkParams& base, int K,
                                const InterferenceSchedule& schedule);

// Left-hand side of the cooperation admissibility test, in seconds:
//   (2 * mean_file_bits / (W * sqrt(tau_K))) * (1/sqrt(tau_K) - 1/sqrt(tau_1)).
// The spectral price of pushing load to the cluster edge; cooperation at
// size K is worthwhile when this does not exceed the backhaul penalty.
double admissibility_cost(const NetworkParams& net, const FileLibrary& lib);

// True iff admissibility_cost(net, lib) <= net.D_BH.
bool cooperation_admissible(const NetworkParams& net, const FileLibrary& lib);

// Largest K <= K_limit whose admissibility test passes; at least 1 (a
// single-station cluster is always admissible).
int max_cluster_size(const NetworkParams& net_template, const FileLibrary& lib,
                     const InterferenceSchedule& schedule, int K_limit);

struct ClusterAnalysis {
    std::vector<int> K_candidates;
    std::vector<bool> admissible;       // per candidate
    std::vector<double> delay_s;        // greedy-placement delay per candidate
    std::vector<PlacementResult> results;  // per candidate
    int K_opt = 1;
};

// Runs greedy placement at budget C for every K in [K_min, K_max] and picks
// the delay-minimal cluster size, ties broken toward smaller K (with a 1e-9
// relative tolerance so exact-math ties are not decided by rounding noise).
ClusterAnalysis optimal_cluster_size(const NetworkParams& net_template, const FileLibrary& lib,
                                     const InterferenceSchedule& schedule, std::int64_t C,
                                     int K_min, int K_max);

}  // namespace ucc

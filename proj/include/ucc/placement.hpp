#pragma once

#include <cstdint>
#include <vector>

#include "ucc/model.hpp"

namespace ucc {

// Shape of the per-group load change caused by caching one more segment of a
// file. Below the saturation threshold every rank gains the same increment
// and the miss group loses K times that; past it some ranks are already
// saturated and load shifts between ranks.
enum class DeltaKind {
    kUniform,     // c_h + 1 segments still leave every rank a full share
    kSaturating,  // some ranks hit the end of the file
};

struct LoadDelta {
    std::vector<double> delta;   // per-group load change, size K+1, sums to 0
    DeltaKind kind = DeltaKind::kUniform;
    // Number of leading ranks that gain the full q_h/s_h increment:
    // floor(s_h / (c_h + 1)).
    int full_gain_ranks = 0;
    // Highest rank whose load changes at all: ceil(s_h / c_h). Only defined
    // in the saturating case with c_h >= 1; zero otherwise.
    int last_affected_rank = 0;
};

// Exact load change from growing file h's cached segment count by one.
// Computed by direct integer differencing of the per-rank segment windows,
// so the entries are exact rationals rounded once. Throws ConfigError when
// the file is already fully cached (c_h >= s_h).
LoadDelta load_delta(std::int64_t c_h, std::int64_t s_h, double q_h, int K);

// Delay reduction achieved by applying `delta` to the current load:
//   gain = -D_BH * delta_{K+1} - (mean_file_bits/W) * (2T + D) * D,
// where T = sum_k omega_k/sqrt(tau_k) and D = sum_k delta_k/sqrt(tau_k).
// Equals average_delay(before) - average_delay(after) in closed form.
double marginal_gain(const GroupLoad& load, const SpectralProfile& profile,
                     const LoadDelta& delta, const FileLibrary& lib, const NetworkParams& net);

// Convenience overload: gain of caching one more segment of file `h` on top
// of `placement`. Throws ConfigError when the file is fully cached.
double marginal_gain(const CachePlacement& placement, std::size_t h, const GroupLoad& load,
                     const SpectralProfile& profile, const FileLibrary& lib,
                     const NetworkParams& net);

struct PlacementResult {
    CachePlacement placement;
    GroupLoad load;
    BandwidthAllocation allocation;
    DelayBreakdown delay;
    // Delay of the empty cache minus the achieved delay, in seconds.
    double objective_gain = 0.0;
};

// Greedy placement: repeatedly caches the single segment with the largest
// marginal delay gain (ties to the lowest file index) until the budget is
// exhausted or no candidate improves the objective. Budgets beyond the
// catalogue size are clamped.
PlacementResult greedy_place(const FileLibrary& lib, const NetworkParams& net, std::int64_t C);

// Greedy placement evaluated at several budgets in one pass. `budgets` must
// be non-decreasing; the result at each budget is identical to calling
// greedy_place with that budget (the greedy pick sequence is prefix-stable).
std::vector<PlacementResult> greedy_place_multi(const FileLibrary& lib, const NetworkParams& net,
                                                const std::vector<std::int64_t>& budgets);

// Baseline: fill whole files in descending popularity order; the last file
// takes whatever budget remains.
PlacementResult place_non_cooperative(const FileLibrary& lib, const NetworkParams& net,
                                      std::int64_t C);

// Baseline: store ceil(s_f / K) segments per file in descending popularity
// order until the budget runs out, maximizing the cluster-local hit mass.
PlacementResult place_hit_ratio_maximal(const FileLibrary& lib, const NetworkParams& net,
                                        std::int64_t C);

// Exhaustive search over all feasible placements (lexicographic order,
// equal-delay ties resolved to the lexicographically smallest vector).
// Refuses instances whose enumeration would exceed 10^7 vectors.
PlacementResult brute_force_place(const FileLibrary& lib, const NetworkParams& net,
                                  std::int64_t C);

}  // namespace ucc

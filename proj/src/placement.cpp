#include "ucc/placement.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "ucc/errors.hpp"

namespace ucc {

namespace {

// Segments of a file with s segments and c cached copies per station that
// rank k (1-based) serves: min(k*c, s) - min((k-1)*c, s).
std::int64_t rank_window(std::int64_t c, std::int64_t s, std::int64_t k) {
    return std::min(k * c, s) - std::min((k - 1) * c, s);
}

double baseline_delay_s(const FileLibrary& lib, const NetworkParams& net,
                        const SpectralProfile& profile) {
    GroupLoad empty;
    empty.omega.assign(static_cast<std::size_t>(net.K) + 1, 0.0);
    empty.omega.back() = 1.0;
    return average_delay(empty, profile, lib, net).total_s;
}

PlacementResult finalize(CachePlacement placement, const FileLibrary& lib,
                         const NetworkParams& net, const SpectralProfile& profile) {
    PlacementResult result;
    result.placement = std::move(placement);
    result.load = group_load(result.placement, lib, net.K);
    result.allocation = optimal_bandwidth(result.load, profile);
    result.delay = average_delay(result.load, profile, lib, net);
    result.objective_gain = baseline_delay_s(lib, net, profile) - result.delay.total_s;
    return result;
}

std::int64_t total_segments(const FileLibrary& lib) {
    std::int64_t total = 0;
    for (std::int64_t v : lib.s) total += v;
    return total;
}

void check_budget(std::int64_t C) {
    if (C < 0) throw ConfigError("placement: cache budget must be non-negative");
}

// Indices of files in descending popularity, ties to the lower index.
std::vector<std::size_t> popularity_order(const FileLibrary& lib) {
    std::vector<std::size_t> order(lib.num_files());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return lib.popularity.q[a] > lib.popularity.q[b];
    });
    return order;
}

}  // namespace

LoadDelta load_delta(std::int64_t c_h, std::int64_t s_h, double q_h, int K) {
    if (s_h < 1) throw ConfigError("load_delta: file must have at least one segment");
    if (c_h < 0) throw ConfigError("load_delta: negative cached count");
    if (c_h >= s_h) throw ConfigError("load_delta: file already fully cached");
    if (K < 1) throw ConfigError("load_delta: cluster size must be at least 1");
    if (!(q_h >= 0.0)) throw ConfigError("load_delta: negative popularity");

    LoadDelta d;
    d.delta.resize(static_cast<std::size_t>(K) + 1);
    const double sd = static_cast<double>(s_h);
    for (std::int64_t k = 1; k <= K; ++k) {
        // Integer window difference first, one rounding at the division.
        const std::int64_t diff = rank_window(c_h + 1, s_h, k) - rank_window(c_h, s_h, k);
        d.delta[static_cast<std::size_t>(k - 1)] = q_h * static_cast<double>(diff) / sd;
    }
    const std::int64_t miss_diff =
        std::min(static_cast<std::int64_t>(K) * c_h, s_h) -
        std::min(static_cast<std::int64_t>(K) * (c_h + 1), s_h);
    d.delta[static_cast<std::size_t>(K)] = q_h * static_cast<double>(miss_diff) / sd;

    d.kind = (static_cast<std::int64_t>(K) * (c_h + 1) <= s_h) ? DeltaKind::kUniform
                                                               : DeltaKind::kSaturating;
    d.full_gain_ranks = static_cast<int>(s_h / (c_h + 1));
    d.last_affected_rank =
        (d.kind == DeltaKind::kSaturating && c_h >= 1)
            ? static_cast<int>((s_h + c_h - 1) / c_h)
            : 0;
    return d;
}

double marginal_gain(const GroupLoad& load, const SpectralProfile& profile,
                     const LoadDelta& delta, const FileLibrary& lib, const NetworkParams& net) {
    if (load.omega.size() != profile.tau.size() || delta.delta.size() != load.omega.size()) {
        throw ConfigError("marginal_gain: group-count mismatch");
    }
    double T = 0.0;
    double D = 0.0;
    for (std::size_t i = 0; i < load.omega.size(); ++i) {
        const double inv_sqrt_tau = 1.0 / std::sqrt(profile.tau[i]);
        T += load.omega[i] * inv_sqrt_tau;
        D += delta.delta[i] * inv_sqrt_tau;
    }
    const double slw = lib.mean_file_bits() / net.W;
    return -net.D_BH * delta.delta.back() - slw * (2.0 * T + D) * D;
}

double marginal_gain(const CachePlacement& placement, std::size_t h, const GroupLoad& load,
                     const SpectralProfile& profile, const FileLibrary& lib,
                     const NetworkParams& net) {
    if (h >= lib.num_files() || placement.c.size() != lib.num_files()) {
        throw ConfigError("marginal_gain: file index out of range");
    }
    const LoadDelta delta = load_delta(placement.c[h], lib.s[h], lib.popularity.q[h], net.K);
    return marginal_gain(load, profile, delta, lib, net);
}

namespace {

// Shared greedy engine: runs the pick loop up to the largest budget and
// emits a finalized snapshot at every requested budget. Budgets must be
// non-decreasing. The loop maintains (omega, T) incrementally; snapshots
// recompute everything from the placement so emitted numbers are exactly
// reproducible from the placement alone.
std::vector<PlacementResult> greedy_run(const FileLibrary& lib, const NetworkParams& net,
                                        const std::vector<std::int64_t>& budgets) {
    lib.validate();
    const SpectralProfile profile = spectral_profile(net);
    for (std::size_t i = 0; i < budgets.size(); ++i) {
        check_budget(budgets[i]);
        if (i > 0 && budgets[i] < budgets[i - 1]) {
            throw ConfigError("greedy: budgets must be non-decreasing");
        }
    }
    const std::size_t F = lib.num_files();
    const int K = net.K;
    const std::int64_t catalogue = total_segments(lib);
    const double slw = lib.mean_file_bits() / net.W;

    std::vector<double> inv_sqrt_tau(profile.tau.size());
    for (std::size_t i = 0; i < profile.tau.size(); ++i) {
        inv_sqrt_tau[i] = 1.0 / std::sqrt(profile.tau[i]);
    }

    CachePlacement placement;
    placement.c.assign(F, 0);
    std::vector<double> omega(static_cast<std::size_t>(K) + 1, 0.0);
    omega.back() = 1.0;
    double T = inv_sqrt_tau.back();  // everything starts in the miss group

    std::vector<PlacementResult> out;
    out.reserve(budgets.size());
    std::size_t next_budget = 0;
    std::int64_t placed = 0;
    bool exhausted = false;  // no candidate improves the objective any more

    auto emit_until = [&](std::int64_t reached) {
        while (next_budget < budgets.size() &&
               (std::min(budgets[next_budget], catalogue) <= reached || exhausted)) {
            PlacementResult snap = finalize(placement, lib, net, profile);
            snap.placement.C = budgets[next_budget];
            out.push_back(std::move(snap));
            ++next_budget;
        }
    };

    emit_until(0);
    const std::int64_t max_budget =
        budgets.empty() ? 0 : std::min(budgets.back(), catalogue);

    while (placed < max_budget && next_budget < budgets.size()) {
        double best_gain = -std::numeric_limits<double>::infinity();
        std::size_t best_file = F;
        for (std::size_t h = 0; h < F; ++h) {
            if (placement.c[h] >= lib.s[h]) continue;
            const std::int64_t c = placement.c[h];
            const std::int64_t s = lib.s[h];
            const double q = lib.popularity.q[h];
            const double sd = static_cast<double>(s);
            // Inline of load_delta + marginal_gain with identical arithmetic,
            // avoiding per-candidate allocation.
            double D = 0.0;
            for (std::int64_t k = 1; k <= K; ++k) {
                const std::int64_t diff = rank_window(c + 1, s, k) - rank_window(c, s, k);
                D += (q * static_cast<double>(diff) / sd) *
                     inv_sqrt_tau[static_cast<std::size_t>(k - 1)];
            }
            const std::int64_t miss_diff = std::min(static_cast<std::int64_t>(K) * c, s) -
                                           std::min(static_cast<std::int64_t>(K) * (c + 1), s);
            const double miss_delta = q * static_cast<double>(miss_diff) / sd;
            D += miss_delta * inv_sqrt_tau.back();
            const double gain = -net.D_BH * miss_delta - slw * (2.0 * T + D) * D;
            if (gain > best_gain) {
                best_gain = gain;
                best_file = h;
            }
        }
        if (best_file == F || best_gain < 0.0) {
            // Nothing improves (or keeps) the objective: stop early so the
            // achieved delay never exceeds the no-cache baseline.
            exhausted = true;
            emit_until(placed);
            break;
        }
        const LoadDelta delta =
            load_delta(placement.c[best_file], lib.s[best_file],
                       lib.popularity.q[best_file], K);
        for (std::size_t i = 0; i < omega.size(); ++i) {
            omega[i] += delta.delta[i];
            T += delta.delta[i] * inv_sqrt_tau[i];
        }
        placement.c[best_file] += 1;
        ++placed;
        emit_until(placed);
    }
    emit_until(placed);
    return out;
}

}  // namespace

PlacementResult greedy_place(const FileLibrary& lib, const NetworkParams& net, std::int64_t C) {
    return greedy_run(lib, net, {C}).front();
}

std::vector<PlacementResult> greedy_place_multi(const FileLibrary& lib, const NetworkParams& net,
                                                const std::vector<std::int64_t>& budgets) {
    return greedy_run(lib, net, budgets);
}

PlacementResult place_non_cooperative(const FileLibrary& lib, const NetworkParams& net,
                                      std::int64_t C) {
    lib.validate();
    check_budget(C);
    const SpectralProfile profile = spectral_profile(net);
    CachePlacement placement;
    placement.c.assign(lib.num_files(), 0);
    placement.C = C;
    std::int64_t remaining = std::min(C, total_segments(lib));
    for (std::size_t f : popularity_order(lib)) {
        if (remaining <= 0) break;
        const std::int64_t take = std::min(lib.s[f], remaining);
        placement.c[f] = take;
        remaining -= take;
    }
    PlacementResult result = finalize(std::move(placement), lib, net, profile);
    result.placement.C = C;
    return result;
}

PlacementResult place_hit_ratio_maximal(const FileLibrary& lib, const NetworkParams& net,
                                        std::int64_t C) {
    lib.validate();
    check_budget(C);
    const SpectralProfile profile = spectral_profile(net);
    CachePlacement placement;
    placement.c.assign(lib.num_files(), 0);
    placement.C = C;
    const std::int64_t K = net.K;
    std::int64_t remaining = std::min(C, total_segments(lib));
    for (std::size_t f : popularity_order(lib)) {
        if (remaining <= 0) break;
        const std::int64_t want = (lib.s[f] + K - 1) / K;  // ceil(s_f / K)
        const std::int64_t take = std::min(want, remaining);
        placement.c[f] = take;
        remaining -= take;
    }
    PlacementResult result = finalize(std::move(placement), lib, net, profile);
    result.placement.C = C;
    return result;
}

PlacementResult brute_force_place(const FileLibrary& lib, const NetworkParams& net,
                                  std::int64_t C) {
    lib.validate();
    check_budget(C);
    const SpectralProfile profile = spectral_profile(net);
    const std::size_t F = lib.num_files();
    double combos = 1.0;
    for (std::size_t f = 0; f < F; ++f) {
        combos *= static_cast<double>(std::min(lib.s[f], C) + 1);
        if (combos > 1e7) {
            throw ConfigError("brute force: enumeration would exceed 1e7 vectors (about " +
                              std::to_string(combos) + " after " + std::to_string(f + 1) +
                              " files); reduce the instance");
        }
    }
    const int K = net.K;
    std::vector<double> inv_sqrt_tau(profile.tau.size());
    for (std::size_t i = 0; i < profile.tau.size(); ++i) {
        inv_sqrt_tau[i] = 1.0 / std::sqrt(profile.tau[i]);
    }
    const double slw = lib.mean_file_bits() / net.W;

    std::vector<std::int64_t> current(F, 0);
    std::vector<std::int64_t> best(F, 0);
    double best_total = std::numeric_limits<double>::infinity();

    // Partial per-rank hit mass of files 0..level-1; miss mass is the
    // complement, so untouched files contribute nothing.
    std::vector<double> hit(static_cast<std::size_t>(K), 0.0);

    auto evaluate_leaf = [&]() {
        double hit_mass = 0.0;
        double T = 0.0;
        for (int k = 0; k < K; ++k) {
            hit_mass += hit[static_cast<std::size_t>(k)];
            T += hit[static_cast<std::size_t>(k)] * inv_sqrt_tau[static_cast<std::size_t>(k)];
        }
        const double miss = 1.0 - hit_mass;
        T += miss * inv_sqrt_tau.back();
        const double total = T * T * slw + net.D_BH * miss;
        if (total < best_total) {
            best_total = total;
            best = current;
        }
    };

    // Lexicographic DFS; ascending c at each level, so the first optimum
    // found is the lexicographically smallest.
    auto dfs = [&](auto&& self, std::size_t level, std::int64_t remaining) -> void {
        if (level == F || remaining == 0) {
            evaluate_leaf();
            return;
        }
        const std::int64_t cap = std::min(lib.s[level], remaining);
        const double q = lib.popularity.q[level];
        const double sd = static_cast<double>(lib.s[level]);
        for (std::int64_t c = 0; c <= cap; ++c) {
            current[level] = c;
            if (c > 0) {
                for (int k = 1; k <= K; ++k) {
                    hit[static_cast<std::size_t>(k - 1)] +=
                        q * static_cast<double>(rank_window(c, lib.s[level], k)) / sd;
                }
            }
            self(self, level + 1, remaining - c);
            if (c > 0) {
                for (int k = 1; k <= K; ++k) {
                    hit[static_cast<std::size_t>(k - 1)] -=
                        q * static_cast<double>(rank_window(c, lib.s[level], k)) / sd;
                }
            }
        }
        current[level] = 0;
    };
    dfs(dfs, 0, std::min(C, total_segments(lib)));

    CachePlacement placement;
    placement.c = best;
    placement.C = C;
    return finalize(std::move(placement), lib, net, profile);
}

}  // namespace ucc

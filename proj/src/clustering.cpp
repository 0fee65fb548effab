#include "ucc/clustering.hpp"

#include <cmath>
#include <string>

#include "ucc/errors.hpp"

namespace ucc {

double InterferenceSchedule::at(int k) const {
    if (k < 1) throw ConfigError("interference schedule: rank must be at least 1");
    if (base.empty()) throw ConfigError("interference schedule: no values configured");
    const std::size_t idx = static_cast<std::size_t>(k - 1);
    if (idx < base.size()) return base[idx];
    if (extension == Extension::kHoldLast) return base.back();
    throw ConfigError("interference schedule: rank " + std::to_string(k) +
                      " beyond the " + std::to_string(base.size()) +
                      " configured values (strict extension)");
}

std::vector<double> InterferenceSchedule::first(int K) const {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(K));
    for (int k = 1; k <= K; ++k) out.push_back(at(k));
    return out;
}

NetworkParams with_cluster_size(const NetworkParams& base, int K,
                                const InterferenceSchedule& schedule) {
    NetworkParams net = base;
    net.K = K;
    net.I = schedule.first(K);
    net.validate();
    return net;
}

double admissibility_cost(const NetworkParams& net, const FileLibrary& lib) {
    const SpectralProfile profile = spectral_profile(net);
    const double tau_1 = profile.tau.front();
    const double tau_K = profile.tau[static_cast<std::size_t>(net.K - 1)];
    return 2.0 * lib.mean_file_bits() / (net.W * std::sqrt(tau_K)) *
           (1.0 / std::sqrt(tau_K) - 1.0 / std::sqrt(tau_1));
}

bool cooperation_admissible(const NetworkParams& net, const FileLibrary& lib) {
    return admissibility_cost(net, lib) <= net.D_BH;
}

int max_cluster_size(const NetworkParams& net_template, const FileLibrary& lib,
                     const InterferenceSchedule& schedule, int K_limit) {
    if (K_limit < 1) throw ConfigError("max cluster size: limit must be at least 1");
    int largest = 1;
    for (int K = 1; K <= K_limit; ++K) {
        NetworkParams net;
        try {
            net = with_cluster_size(net_template, K, schedule);
        } catch (const ConfigError&) {
            break;  // strict schedule ran out of ranks
        }
        bool ok;
        try {
            ok = cooperation_admissible(net, lib);
        } catch (const ModelError&) {
            break;  // spectral efficiency no longer positive at this size
        }
        if (ok) largest = K;
    }
    return largest;
}

ClusterAnalysis optimal_cluster_size(const NetworkParams& net_template, const FileLibrary& lib,
                                     const InterferenceSchedule& schedule, std::int64_t C,
                                     int K_min, int K_max) {
    if (K_min < 1 || K_max < K_min) {
        throw ConfigError("optimal cluster size: need 1 <= K_min <= K_max");
    }
    ClusterAnalysis analysis;
    double best_delay = 0.0;
    bool have_best = false;
    for (int K = K_min; K <= K_max; ++K) {
        const NetworkParams net = with_cluster_size(net_template, K, schedule);
        PlacementResult result = greedy_place(lib, net, C);
        const double delay = result.delay.total_s;
        analysis.K_candidates.push_back(K);
        analysis.admissible.push_back(cooperation_admissible(net, lib));
        analysis.delay_s.push_back(delay);
        analysis.results.push_back(std::move(result));
        // Strict relative improvement required, so equal-delay candidates
        // resolve to the smallest K.
        if (!have_best || delay < best_delay * (1.0 - 1e-9)) {
            best_delay = delay;
            analysis.K_opt = K;
            have_best = true;
        }
    }
    return analysis;
}

}  // namespace ucc

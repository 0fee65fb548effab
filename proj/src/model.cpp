#include "ucc/model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ucc/errors.hpp"

namespace ucc {

void NetworkParams::validate() const {
    if (!(rho > 0.0)) throw ConfigError("network: base-station density must be positive");
    if (!(lambda > 0.0)) throw ConfigError("network: user density must be positive");
    if (!(P_T > 0.0)) throw ConfigError("network: transmit power must be positive");
    if (!(alpha > 2.0)) throw ConfigError("network: path-loss exponent must exceed 2");
    if (!(sigma2 > 0.0)) throw ConfigError("network: noise power must be positive");
    if (!(W > 0.0)) throw ConfigError("network: bandwidth must be positive");
    if (D_BH < 0.0) throw ConfigError("network: backhaul delay must be non-negative");
    if (K < 1) throw ConfigError("network: cluster size must be at least 1");
    if (static_cast<int>(I.size()) < K) {
        throw ConfigError("network: interference vector has " + std::to_string(I.size()) +
                          " entries, needs at least " + std::to_string(K) +
                          "; it is not extrapolated implicitly");
    }
    for (int k = 1; k <= K; ++k) {
        if (I[k - 1] < 0.0) {
            throw ConfigError("network: negative interference at rank " + std::to_string(k));
        }
        if (k >= 2 && I[k - 1] < I[k - 2]) {
            throw ConfigError("network: interference must be non-decreasing in rank, "
                              "violated at rank " + std::to_string(k));
        }
    }
}

double FileLibrary::mean_file_bits() const {
    double bits = 0.0;
    for (std::size_t f = 0; f < s.size(); ++f) {
        bits += popularity.q[f] * static_cast<double>(s[f]) * L;
    }
    return bits;
}

void FileLibrary::validate() const {
    popularity.validate();
    if (s.size() != popularity.size()) {
        throw ConfigError("library: segment-count vector and popularity differ in length");
    }
    for (std::size_t f = 0; f < s.size(); ++f) {
        if (s[f] < 1) {
            throw ConfigError("library: file " + std::to_string(f + 1) +
                              " must have at least one segment");
        }
    }
    if (!(L > 0.0)) throw ConfigError("library: segment size must be positive");
}

std::int64_t CachePlacement::total_cached() const {
    std::int64_t total = 0;
    for (std::int64_t v : c) total += v;
    return total;
}

double hit_ratio(std::int64_t c, std::int64_t s, int k, int K) {
    if (s < 1) throw ConfigError("hit_ratio: file must have at least one segment");
    if (c < 0 || c > s) throw ConfigError("hit_ratio: cached count outside [0, segments]");
    if (k < 1 || k > K + 1) throw ConfigError("hit_ratio: rank outside [1, K+1]");
    const double sd = static_cast<double>(s);
    if (k <= K) {
        const std::int64_t hi = std::min(static_cast<std::int64_t>(k) * c, s);
        const std::int64_t lo = std::min(static_cast<std::int64_t>(k - 1) * c, s);
        return static_cast<double>(hi - lo) / sd;
    }
    const std::int64_t covered = std::min(static_cast<std::int64_t>(K) * c, s);
    return static_cast<double>(s - covered) / sd;
}

GroupLoad group_load(const CachePlacement& placement, const FileLibrary& lib, int K) {
    if (placement.c.size() != lib.num_files()) {
        throw ConfigError("group_load: placement and library differ in file count");
    }
    GroupLoad load;
    load.omega.assign(static_cast<std::size_t>(K) + 1, 0.0);
    double hit_mass = 0.0;
    for (std::size_t f = 0; f < lib.num_files(); ++f) {
        for (int k = 1; k <= K; ++k) {
            const double m = lib.popularity.q[f] * hit_ratio(placement.c[f], lib.s[f], k, K);
            load.omega[k - 1] += m;
            hit_mass += m;
        }
    }
    // The miss mass is forced to the exact complement so the entries always
    // sum to one regardless of rounding in the per-rank accumulation.
    load.omega[K] = 1.0 - hit_mass;
    if (load.omega[K] < 0.0 && load.omega[K] > -1e-12) load.omega[K] = 0.0;
    return load;
}

SpectralProfile spectral_profile(const NetworkParams& net) {
    net.validate();
    const double pi_rho = M_PI * net.rho;
    SpectralProfile profile;
    profile.tau.resize(static_cast<std::size_t>(net.K) + 1);
    double harmonic = 0.0;  // H_{k-1}, starts at H_0 = 0
    for (int k = 1; k <= net.K; ++k) {
        const double sinr_term =
            std::log2(net.P_T * std::pow(pi_rho, net.alpha / 2.0) / (net.sigma2 + net.I[k - 1]));
        const double distance_term =
            net.alpha / (2.0 * std::log(2.0)) * (kEulerMascheroni - harmonic);
        const double tau_k = net.rho / net.lambda * (sinr_term + distance_term);
        if (!(tau_k > 0.0)) {
            throw ModelError("spectral profile: non-positive efficiency at rank " +
                             std::to_string(k) +
                             " (link budget too weak for this rank)", k);
        }
        profile.tau[k - 1] = tau_k;
        harmonic += 1.0 / static_cast<double>(k);
    }
    // Backhaul-delivered traffic rides the rank-1 radio link.
    profile.tau[net.K] = profile.tau[0];
    return profile;
}

BandwidthAllocation optimal_bandwidth(const GroupLoad& load, const SpectralProfile& profile) {
    if (load.omega.size() != profile.tau.size()) {
        throw ConfigError("optimal_bandwidth: load and profile differ in group count");
    }
    const std::size_t n = load.omega.size();
    BandwidthAllocation alloc;
    alloc.phi.assign(n, 0.0);
    double denom = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        denom += load.omega[i] / std::sqrt(profile.tau[i]);
    }
    if (denom <= 0.0) {
        // No load anywhere: leave every share at zero.
        return alloc;
    }
    for (std::size_t i = 0; i < n; ++i) {
        alloc.phi[i] = (load.omega[i] > 0.0)
                           ? (load.omega[i] / std::sqrt(profile.tau[i])) / denom
                           : 0.0;
    }
    return alloc;
}

DelayBreakdown delay_with_allocation(const GroupLoad& load, const SpectralProfile& profile,
                                     const BandwidthAllocation& alloc, const FileLibrary& lib,
                                     const NetworkParams& net) {
    if (load.omega.size() != profile.tau.size() || alloc.phi.size() != load.omega.size()) {
        throw ConfigError("delay: load, profile and allocation differ in group count");
    }
    const double bits = lib.mean_file_bits();
    const std::size_t n = load.omega.size();
    DelayBreakdown d;
    for (std::size_t i = 0; i < n; ++i) {
        if (load.omega[i] <= 0.0) continue;
        if (alloc.phi[i] <= 0.0) {
            throw AllocationError("delay: group " + std::to_string(i + 1) +
                                  " carries load but has zero bandwidth share");
        }
        d.wireless_s += load.omega[i] * load.omega[i] * bits /
                        (net.W * alloc.phi[i] * profile.tau[i]);
    }
    d.backhaul_s = net.D_BH * load.omega[n - 1];
    d.total_s = d.wireless_s + d.backhaul_s;
    return d;
}

DelayBreakdown average_delay(const GroupLoad& load, const SpectralProfile& profile,
                             const FileLibrary& lib, const NetworkParams& net) {
    if (load.omega.size() != profile.tau.size()) {
        throw ConfigError("delay: load and profile differ in group count");
    }
    double T = 0.0;  // load-weighted inverse-sqrt spectral sum
    for (std::size_t i = 0; i < load.omega.size(); ++i) {
        T += load.omega[i] / std::sqrt(profile.tau[i]);
    }
    DelayBreakdown d;
    d.wireless_s = T * T * lib.mean_file_bits() / net.W;
    d.backhaul_s = net.D_BH * load.omega.back();
    d.total_s = d.wireless_s + d.backhaul_s;
    return d;
}

double delay_gradient_wrt_omega(const GroupLoad& load, const SpectralProfile& profile,
                                const FileLibrary& lib, const NetworkParams& net, int k) {
    const int K = load.K();
    if (k < 2 || k > K) {
        throw ConfigError("delay gradient: rank must lie in [2, K]");
    }
    double T = 0.0;
    for (std::size_t i = 0; i < load.omega.size(); ++i) {
        T += load.omega[i] / std::sqrt(profile.tau[i]);
    }
    const double slw = lib.mean_file_bits() / net.W;
    // Moving mass from the miss group into rank k changes T at rate
    // 1/sqrt(tau_k) - 1/sqrt(tau_{K+1}) and removes backhaul penalty.
    return 2.0 * T * slw *
               (1.0 / std::sqrt(profile.tau[k - 1]) - 1.0 / std::sqrt(profile.tau[K])) -
           net.D_BH;
}

double expected_log_kth_distance(double rho, int k) {
    if (!(rho > 0.0)) throw ConfigError("distance law: density must be positive");
    if (k < 1) throw ConfigError("distance law: rank must be at least 1");
    double sum = 0.0;
    for (int m = 1; m <= k - 1; ++m) {
        sum += 1.0 / (2.0 * static_cast<double>(m));
    }
    return -kEulerMascheroni / 2.0 - 0.5 * std::log(M_PI * rho) + sum;
}

double kth_distance_cdf(double rho, int k, double d) {
    if (!(rho > 0.0)) throw ConfigError("distance law: density must be positive");
    if (k < 1) throw ConfigError("distance law: rank must be at least 1");
    if (d <= 0.0) return 0.0;
    const double mu = M_PI * d * d * rho;
    double term = 1.0;  // mu^m / m! for m = 0
    double sum = term;
    for (int m = 1; m <= k - 1; ++m) {
        term *= mu / static_cast<double>(m);
        sum += term;
    }
    return 1.0 - sum * std::exp(-mu);
}

}  // namespace ucc

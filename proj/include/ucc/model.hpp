#pragma once

#include <cstdint>
#include <vector>

#include "ucc/popularity.hpp"

namespace ucc {

// Euler-Mascheroni constant, used by the k-th nearest-neighbour distance law.
inline constexpr double kEulerMascheroni = 0.5772156649015329;

// Physical-layer and topology parameters, all in SI units:
// densities in points per square metre, powers in watts per hertz-normalised
// megahertz slot (see README for the unit conventions), bandwidth in hertz,
// delay in seconds.
struct NetworkParams {
    double rho = 0.0;             // base-station density [1/m^2]
    double lambda = 0.0;          // user density [1/m^2]
    double P_T = 0.0;             // transmit power spectral density [W/MHz]
    double alpha = 4.0;           // path-loss exponent, > 2
    double sigma2 = 0.0;          // noise power spectral density [W/MHz]
    std::vector<double> I;        // per-rank interference density [W/MHz], size >= K
    double W = 0.0;               // system bandwidth [Hz]
    double D_BH = 0.0;            // backhaul delay penalty [s]
    int K = 1;                    // cooperative cluster size, >= 1

    // Throws ConfigError / ModelError when a field is outside its domain.
    void validate() const;
};

// Content catalogue: request distribution plus per-file segment counts and
// the segment payload size in bits.
struct FileLibrary {
    Popularity popularity;
    std::vector<std::int64_t> s;  // segments per file, s[f] >= 1
    double L = 0.0;               // bits per segment

    std::size_t num_files() const { return s.size(); }
    // Mean file size in bits: sum_f q_f * s_f * L.
    double mean_file_bits() const;
    void validate() const;
};

// Per-file cached segment counts, 0 <= c[f] <= s[f].
struct CachePlacement {
    std::vector<std::int64_t> c;
    std::int64_t C = 0;  // cache budget the placement was built against

    std::int64_t total_cached() const;
};

// Request mass per serving group: omega[k-1] for ranks k = 1..K is the
// probability that a request is served by the k-th nearest base station;
// omega[K] is the miss mass routed over the backhaul (and delivered on the
// rank-1 radio link).
struct GroupLoad {
    std::vector<double> omega;  // size K+1

    int K() const { return static_cast<int>(omega.size()) - 1; }
};

// Per-group spectral efficiency coefficients tau[k-1], k = 1..K+1, where the
// last entry (backhaul-delivered traffic, radio rank 1) equals the first.
struct SpectralProfile {
    std::vector<double> tau;  // size K+1, all entries > 0

    int K() const { return static_cast<int>(tau.size()) - 1; }
};

// Bandwidth shares per group, phi[k-1] >= 0, summing to 1.
struct BandwidthAllocation {
    std::vector<double> phi;  // size K+1
};

struct DelayBreakdown {
    double wireless_s = 0.0;  // radio delivery component [s]
    double backhaul_s = 0.0;  // backhaul penalty component [s]
    double total_s = 0.0;
};

// Fraction of file f's segments fetched from the k-th nearest base station
// (k = 1..K) or missed entirely (k = K+1) when c segments of the file are
// cached at every station and the file has s segments.
double hit_ratio(std::int64_t c, std::int64_t s, int k, int K);

// Aggregates hit ratios over the catalogue into per-group request mass.
GroupLoad group_load(const CachePlacement& placement, const FileLibrary& lib, int K);

// Mean spectral efficiency of the rank-k radio link under the distance law
// of a planar Poisson deployment:
//   tau_k = (rho/lambda) * [log2(P_T (pi rho)^(alpha/2) / (sigma2 + I_k))
//            + (alpha / (2 ln 2)) * (gamma_EM - H_{k-1})]
// with H_0 = 0 and H_m the m-th harmonic number. The backhaul group reuses
// the rank-1 link. Throws ModelError (with the offending rank) when any
// coefficient is non-positive.
SpectralProfile spectral_profile(const NetworkParams& net);

// Delay-optimal bandwidth split: phi_k proportional to omega_k / sqrt(tau_k),
// with phi_k = 0 exactly where omega_k = 0.
BandwidthAllocation optimal_bandwidth(const GroupLoad& load, const SpectralProfile& profile);

// Mean request delay under an arbitrary bandwidth split:
//   D = sum_k omega_k^2 * mean_file_bits / (W * phi_k * tau_k) ... per-group
// wireless queueing plus D_BH times the miss mass. Throws AllocationError if
// some group has load but no bandwidth.
DelayBreakdown delay_with_allocation(const GroupLoad& load, const SpectralProfile& profile,
                                     const BandwidthAllocation& alloc, const FileLibrary& lib,
                                     const NetworkParams& net);

// Mean request delay under the optimal split, in closed form:
//   D = (sum_k omega_k / sqrt(tau_k))^2 * mean_file_bits / W + D_BH * omega_{K+1}.
DelayBreakdown average_delay(const GroupLoad& load, const SpectralProfile& profile,
                             const FileLibrary& lib, const NetworkParams& net);

// Derivative of the optimal-split delay with respect to omega_k (2 <= k <= K)
// when the perturbation is absorbed by the miss group omega_{K+1}:
//   2 * T * mean_file_bits / W * (1/sqrt(tau_k) - 1/sqrt(tau_1)) - D_BH,
// where T = sum_j omega_j / sqrt(tau_j).
double delay_gradient_wrt_omega(const GroupLoad& load, const SpectralProfile& profile,
                                const FileLibrary& lib, const NetworkParams& net, int k);

// Closed-form mean of ln(distance to the k-th nearest station):
//   -gamma_EM/2 - ln(pi rho)/2 + sum_{m=1}^{k-1} 1/(2m).
double expected_log_kth_distance(double rho, int k);

// CDF of the distance to the k-th nearest station at radius d:
//   1 - sum_{m=0}^{k-1} (pi d^2 rho)^m / m! * exp(-pi d^2 rho).
double kth_distance_cdf(double rho, int k, double d);

}  // namespace ucc

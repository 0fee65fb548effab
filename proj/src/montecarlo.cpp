#include "ucc/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <string>
#include <thread>

#include "ucc/errors.hpp"
#include "ucc/rng.hpp"

namespace ucc {

namespace {

// Salt separating the membership-draw stream from the topology stream of
// the same drop.
constexpr std::uint64_t kMembershipSalt = 0xC2B2AE3D27D4EB4FULL;

double torus_dist2(const Point& a, const Point& b, double side) {
    double dx = std::abs(a.x - b.x);
    if (dx > side * 0.5) dx = side - dx;
    double dy = std::abs(a.y - b.y);
    if (dy > side * 0.5) dy = side - dy;
    return dx * dx + dy * dy;
}

// k-th smallest squared distance from `from` to the station set, with the
// station index. Maintains a small sorted buffer (k is the cluster rank,
// never more than a few dozen).
struct NearestResult {
    double dist2 = 0.0;
    int index = -1;
};

NearestResult kth_nearest(const Point& from, const std::vector<Point>& stations, double side,
                          int k, std::vector<NearestResult>& buffer) {
    buffer.clear();
    for (std::size_t i = 0; i < stations.size(); ++i) {
        const double d2 = torus_dist2(from, stations[i], side);
        if (static_cast<int>(buffer.size()) == k && d2 >= buffer.back().dist2) continue;
        // Insertion into the sorted buffer of the k best seen so far.
        NearestResult entry{d2, static_cast<int>(i)};
        auto pos = std::upper_bound(buffer.begin(), buffer.end(), d2,
                                    [](double v, const NearestResult& r) { return v < r.dist2; });
        buffer.insert(pos, entry);
        if (static_cast<int>(buffer.size()) > k) buffer.pop_back();
    }
    return buffer.back();
}

// Runs fn(0..n-1) across a small worker pool. Each index must touch only
// its own output slot; the first exception is rethrown after the join.
template <typename Fn>
void parallel_for(int n, Fn&& fn) {
    unsigned hw = std::thread::hardware_concurrency();
    unsigned n_threads = std::min({hw == 0 ? 1u : hw, 8u, static_cast<unsigned>(n)});
    if (n_threads <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (unsigned t = 0; t < n_threads; ++t) {
        pool.emplace_back([&]() {
            int i;
            while ((i = next.fetch_add(1)) < n && !failed.load()) {
                try {
                    fn(i);
                } catch (...) {
                    if (!failed.exchange(true)) error = std::current_exception();
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (failed.load()) std::rethrow_exception(error);
}

}  // namespace

void SimConfig::validate() const {
    if (!(region_side > 0.0)) throw ConfigError("sim: region side must be positive");
    if (n_drops < 1) throw ConfigError("sim: need at least one drop");
    if (n_users_sampled < 1) throw ConfigError("sim: need at least one tagged user per drop");
}

void SimConfig::warn_if_small(const NetworkParams& net) const {
    const double expected_sbs = net.rho * region_side * region_side;
    if (expected_sbs < 50.0 * static_cast<double>(net.K)) {
        std::fprintf(stderr,
                     "warning: window of side %.0f m holds only %.1f expected stations; "
                     "at least %d recommended for cluster size %d\n",
                     region_side, expected_sbs, 50 * net.K, net.K);
    }
}

Topology sample_topology(const NetworkParams& net, const SimConfig& sim,
                         std::uint64_t drop_index) {
    sim.validate();
    const double side = sim.region_side;
    const double area = side * side;
    SplitMix64 gen = drop_stream(sim.seed, drop_index);
    Topology topo;
    const std::int64_t n_sbs = poisson(gen, net.rho * area);
    topo.sbs.resize(static_cast<std::size_t>(n_sbs));
    for (auto& p : topo.sbs) {
        p.x = gen.uniform() * side;
        p.y = gen.uniform() * side;
    }
    const std::int64_t n_users = poisson(gen, net.lambda * area);
    topo.users.resize(static_cast<std::size_t>(n_users));
    for (auto& p : topo.users) {
        p.x = gen.uniform() * side;
        p.y = gen.uniform() * side;
    }
    return topo;
}

DistanceStats kth_distance_stats(const NetworkParams& net, const SimConfig& sim, int k) {
    sim.validate();
    if (!(net.rho > 0.0)) throw ConfigError("distance stats: station density must be positive");
    if (!(net.lambda > 0.0)) throw ConfigError("distance stats: user density must be positive");
    if (k < 1) throw ConfigError("distance stats: rank must be at least 1");
    const double expected_sbs = net.rho * sim.region_side * sim.region_side;
    if (static_cast<double>(k) > expected_sbs / 10.0) {
        throw ConfigError("distance stats: window holds only " + std::to_string(expected_sbs) +
                          " expected stations, too few for rank " + std::to_string(k));
    }

    std::vector<std::vector<double>> per_drop(static_cast<std::size_t>(sim.n_drops));
    parallel_for(sim.n_drops, [&](int d) {
        const Topology topo = sample_topology(net, sim, static_cast<std::uint64_t>(d));
        if (static_cast<int>(topo.sbs.size()) < k) return;  // vanishing probability
        const std::size_t tagged =
            std::min<std::size_t>(topo.users.size(), static_cast<std::size_t>(sim.n_users_sampled));
        std::vector<NearestResult> buffer;
        auto& samples = per_drop[static_cast<std::size_t>(d)];
        samples.reserve(tagged);
        for (std::size_t u = 0; u < tagged; ++u) {
            const NearestResult r = kth_nearest(topo.users[u], topo.sbs, sim.region_side, k, buffer);
            samples.push_back(std::sqrt(r.dist2));
        }
    });

    std::vector<double> distances;
    for (const auto& v : per_drop) distances.insert(distances.end(), v.begin(), v.end());
    if (distances.size() < 2) {
        throw ConfigError("distance stats: fewer than two samples collected");
    }

    DistanceStats stats;
    stats.k = k;
    stats.n = distances.size();
    double sum = 0.0;
    double sumsq = 0.0;
    for (double d : distances) {
        const double l = std::log(d);
        sum += l;
        sumsq += l * l;
    }
    const double n = static_cast<double>(stats.n);
    stats.mean_log = sum / n;
    const double var = std::max(0.0, (sumsq - n * stats.mean_log * stats.mean_log) / (n - 1.0));
    stats.stderr_log = std::sqrt(var / n);

    std::sort(distances.begin(), distances.end());
    double ks = 0.0;
    for (std::size_t i = 0; i < distances.size(); ++i) {
        const double cdf = kth_distance_cdf(net.rho, k, distances[i]);
        const double hi = static_cast<double>(i + 1) / n - cdf;
        const double lo = cdf - static_cast<double>(i) / n;
        ks = std::max({ks, hi, lo});
    }
    stats.ks_distance = ks;
    return stats;
}

namespace {

struct RankAccumulator {
    double sum = 0.0;
    double sumsq = 0.0;
    std::size_t n = 0;
};

struct DropPartial {
    std::vector<RankAccumulator> rate;   // per rank 1..K
    std::vector<std::int64_t> rank_users;  // all users per rank, for cell loads
    std::int64_t n_sbs = 0;
};

}  // namespace

std::vector<RankRateStats> simulate_rate(const NetworkParams& net, const FileLibrary& lib,
                                         const CachePlacement& placement, const SimConfig& sim,
                                         RequestMode mode) {
    net.validate();
    lib.validate();
    sim.validate();
    sim.warn_if_small(net);
    const int K = net.K;
    const GroupLoad load = group_load(placement, lib, K);
    const SpectralProfile profile = spectral_profile(net);
    const BandwidthAllocation alloc = optimal_bandwidth(load, profile);

    // Cumulative masses for the membership draw.
    std::vector<double> group_cdf(load.omega.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < load.omega.size(); ++i) {
        acc += load.omega[i];
        group_cdf[i] = acc;
    }
    group_cdf.back() = 1.0;

    std::vector<double> file_cdf;
    if (mode == RequestMode::kPerFile) {
        file_cdf.resize(lib.num_files());
        double qa = 0.0;
        for (std::size_t f = 0; f < lib.num_files(); ++f) {
            qa += lib.popularity.q[f];
            file_cdf[f] = qa;
        }
        file_cdf.back() = 1.0;
    }

    // Group index in 0..K (K = miss) for one user draw.
    auto draw_group = [&](SplitMix64& gen) -> int {
        if (mode == RequestMode::kGroupDraw) {
            const double u = gen.uniform();
            const auto it = std::upper_bound(group_cdf.begin(), group_cdf.end(), u);
            return static_cast<int>(std::min<std::ptrdiff_t>(
                it - group_cdf.begin(), static_cast<std::ptrdiff_t>(K)));
        }
        const double uf = gen.uniform();
        const auto fit = std::upper_bound(file_cdf.begin(), file_cdf.end(), uf);
        const std::size_t f = static_cast<std::size_t>(
            std::min<std::ptrdiff_t>(fit - file_cdf.begin(),
                                     static_cast<std::ptrdiff_t>(lib.num_files() - 1)));
        const std::int64_t s = lib.s[f];
        const std::int64_t c = placement.c[f];
        const std::int64_t seg =
            1 + std::min<std::int64_t>(s - 1,
                                       static_cast<std::int64_t>(gen.uniform() *
                                                                 static_cast<double>(s)));
        if (c == 0) return K;
        const std::int64_t rank = (seg + c - 1) / c;  // station holding this segment
        return rank <= K ? static_cast<int>(rank - 1) : K;
    };

    std::vector<DropPartial> partials(static_cast<std::size_t>(sim.n_drops));
    parallel_for(sim.n_drops, [&](int d) {
        DropPartial& part = partials[static_cast<std::size_t>(d)];
        part.rate.assign(static_cast<std::size_t>(K), RankAccumulator{});
        part.rank_users.assign(static_cast<std::size_t>(K), 0);
        const Topology topo = sample_topology(net, sim, static_cast<std::uint64_t>(d));
        const std::size_t n_sbs = topo.sbs.size();
        const std::size_t n_users = topo.users.size();
        part.n_sbs = static_cast<std::int64_t>(n_sbs);
        if (static_cast<int>(n_sbs) < K || n_users == 0) return;

        SplitMix64 member = drop_stream(sim.seed ^ kMembershipSalt,
                                        static_cast<std::uint64_t>(d));
        std::vector<int> group(n_users);
        for (std::size_t u = 0; u < n_users; ++u) {
            group[u] = draw_group(member);
            if (group[u] < K) ++part.rank_users[static_cast<std::size_t>(group[u])];
        }

        // Serving station and distance per attached user; per-station
        // per-rank user counts for the shared-bandwidth loads.
        std::vector<int> serving(n_users, -1);
        std::vector<double> dist(n_users, 0.0);
        std::vector<std::int32_t> cell_count(n_sbs * static_cast<std::size_t>(K), 0);
        std::vector<NearestResult> buffer;
        for (std::size_t u = 0; u < n_users; ++u) {
            const int g = group[u];
            if (g >= K) continue;  // miss traffic does not share these slices
            const NearestResult r =
                kth_nearest(topo.users[u], topo.sbs, sim.region_side, g + 1, buffer);
            serving[u] = r.index;
            dist[u] = std::sqrt(r.dist2);
            ++cell_count[static_cast<std::size_t>(r.index) * static_cast<std::size_t>(K) +
                         static_cast<std::size_t>(g)];
        }

        const std::size_t tagged =
            std::min<std::size_t>(n_users, static_cast<std::size_t>(sim.n_users_sampled));
        for (std::size_t u = 0; u < tagged; ++u) {
            const int g = group[u];
            if (g >= K) continue;
            const std::int32_t N =
                cell_count[static_cast<std::size_t>(serving[u]) * static_cast<std::size_t>(K) +
                           static_cast<std::size_t>(g)];
            const double zeta = net.P_T * std::pow(dist[u], -net.alpha) /
                                (net.sigma2 + net.I[static_cast<std::size_t>(g)]);
            const double rate = alloc.phi[static_cast<std::size_t>(g)] * net.W /
                                static_cast<double>(N) * std::log2(1.0 + zeta);
            RankAccumulator& a = part.rate[static_cast<std::size_t>(g)];
            a.sum += rate;
            a.sumsq += rate * rate;
            a.n += 1;
        }
    });

    // Deterministic merge in drop order.
    std::vector<RankAccumulator> total(static_cast<std::size_t>(K));
    std::vector<std::int64_t> rank_users(static_cast<std::size_t>(K), 0);
    std::int64_t sbs_total = 0;
    for (const DropPartial& part : partials) {
        sbs_total += part.n_sbs;
        if (part.rate.empty()) continue;
        for (int k = 0; k < K; ++k) {
            total[static_cast<std::size_t>(k)].sum += part.rate[static_cast<std::size_t>(k)].sum;
            total[static_cast<std::size_t>(k)].sumsq +=
                part.rate[static_cast<std::size_t>(k)].sumsq;
            total[static_cast<std::size_t>(k)].n += part.rate[static_cast<std::size_t>(k)].n;
            rank_users[static_cast<std::size_t>(k)] +=
                part.rank_users[static_cast<std::size_t>(k)];
        }
    }

    std::vector<RankRateStats> out;
    for (int k = 0; k < K; ++k) {
        if (!(load.omega[static_cast<std::size_t>(k)] > 0.0)) continue;  // rank absent
        const RankAccumulator& a = total[static_cast<std::size_t>(k)];
        RankRateStats stats;
        stats.rank = k + 1;
        stats.n_samples = a.n;
        if (a.n >= 1) {
            stats.mean_rate_bps = a.sum / static_cast<double>(a.n);
        }
        if (a.n >= 2) {
            const double n = static_cast<double>(a.n);
            const double var = std::max(
                0.0, (a.sumsq - n * stats.mean_rate_bps * stats.mean_rate_bps) / (n - 1.0));
            stats.stderr_rate_bps = std::sqrt(var / n);
        }
        stats.bound_rate_bps = net.W * alloc.phi[static_cast<std::size_t>(k)] *
                               profile.tau[static_cast<std::size_t>(k)] /
                               load.omega[static_cast<std::size_t>(k)];
        stats.mean_cell_load = sbs_total > 0 ? static_cast<double>(rank_users[static_cast<std::size_t>(k)]) /
                                                   static_cast<double>(sbs_total)
                                             : 0.0;
        stats.expected_cell_load =
            net.lambda * load.omega[static_cast<std::size_t>(k)] / net.rho;
        out.push_back(stats);
    }
    return out;
}

RateBoundTable validate_rate_bound(const NetworkParams& net_template, const FileLibrary& lib,
                                   const CachePlacement& placement, const SimConfig& sim,
                                   const std::vector<double>& lambda_sweep, RequestMode mode) {
    if (lambda_sweep.empty()) {
        throw ConfigError("rate bound validation: empty density sweep");
    }
    std::vector<double> sweep = lambda_sweep;
    std::sort(sweep.begin(), sweep.end());
    RateBoundTable table;
    for (double lambda : sweep) {
        if (!(lambda > 0.0)) {
            throw ConfigError("rate bound validation: densities must be positive");
        }
        NetworkParams net = net_template;
        net.lambda = lambda;
        const auto stats = simulate_rate(net, lib, placement, sim, mode);
        for (const RankRateStats& s : stats) {
            RateBoundRow row;
            row.lambda = lambda;
            row.rank = s.rank;
            row.n_samples = s.n_samples;
            row.simulated_bps = s.mean_rate_bps;
            row.stderr_bps = s.stderr_rate_bps;
            row.bound_bps = s.bound_rate_bps;
            row.within_noise =
                s.n_samples >= 2 &&
                row.bound_bps <= row.simulated_bps + 2.0 * row.stderr_bps;
            table.all_within_noise = table.all_within_noise && row.within_noise;
            table.rows.push_back(row);
        }
    }
    return table;
}

}  // namespace ucc

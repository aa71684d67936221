#include "didsim/simulator.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "didsim/errors.hpp"

namespace didsim {

namespace {

// Substream purposes within one (trial, pair).
constexpr std::uint64_t kPurposeGeometry = 0;
constexpr std::uint64_t kPurposeChannel = 1;

std::uint64_t pair_id(int i, int j, int n) {
    return static_cast<std::uint64_t>(i) * static_cast<std::uint64_t>(n) +
           static_cast<std::uint64_t>(j);
}

int resolve_workers(int workers, int trials) {
    if (workers <= 0) {
        unsigned hc = std::thread::hardware_concurrency();
        workers = hc == 0 ? 1 : static_cast<int>(hc);
    }
    return std::max(1, std::min(workers, trials));
}

}  // namespace

double dbm_to_watt(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

const RateProfile& ExperimentConfig::profile_for_mode() const {
    if (mode < 1 || mode > 3 || profiles.size() < 3)
        throw config_error("config: three per-mode rate profiles are required");
    return profiles[static_cast<std::size_t>(mode - 1)];
}

void ExperimentConfig::validate() const {
    if (mode < 1 || mode > 3) throw config_error("config: mode must be 1, 2 or 3");
    if (n_nodes < 4) throw config_error("config: n_nodes must be at least 4");
    if (trials < 1) throw config_error("config: trials must be at least 1");
    if (inner_samples < 100) throw config_error("config: inner_samples must be at least 100");
    if (profiles.size() != 3) throw config_error("config: expected one rate profile per mode");
    if (mode == 1 || mode == 2) {
        if (!ground) throw config_error("config: mode " + std::to_string(mode) +
                                        " requires ground link parameters");
        ground->validate();
    }
    if (mode == 2) {
        if (!satground) throw config_error("config: mode 2 requires satellite-ground parameters");
        satground->validate();
    }
    if (mode == 3) {
        if (!intersat) throw config_error("config: mode 3 requires inter-satellite parameters");
        intersat->validate();
    }
}

Probability estimate_link_ps(const GroundLinkParams& params, const GroundScene& scene) {
    double gamma = sinr_ground(params, scene.d0_km, scene.interferer_km);
    return Probability::clamped(gamma >= params.snr_threshold ? 1.0 : 0.0);
}

Probability estimate_link_ps(const SatGroundLinkParams& params, int inner_samples,
                             RandomStream& rng) {
    if (inner_samples < 100) throw config_error("estimate_link_ps: inner_samples must be >= 100");
    // SNR is linear in the fading gain; compare the gain to the threshold gain
    // directly instead of rebuilding the SNR each draw.
    double gain_threshold = params.snr_threshold * params.noise_w /
                            (params.tx_power_w * params.antenna_gain *
                             path_loss(params.distance_km * 1000.0, params.carrier_hz));
    auto [alpha, beta] =
        gamma_params_from_shadowed_rician(params.fading_b0, params.fading_m0, params.fading_omega);
    int ok = 0;
    for (int s = 0; s < inner_samples; ++s)
        if (rng.next_gamma(alpha, beta) >= gain_threshold) ++ok;
    return Probability::clamped(static_cast<double>(ok) / static_cast<double>(inner_samples));
}

Probability estimate_link_ps(const InterSatLinkParams& params, const InterSatScene& scene,
                             int inner_samples, RandomStream& rng) {
    if (inner_samples < 100) throw config_error("estimate_link_ps: inner_samples must be >= 100");
    double loss_threshold = params.snr_threshold * params.noise_w /
                            (params.tx_power_w * params.antenna_gain *
                             path_loss(scene.distance_km * 1000.0, params.carrier_hz));
    int ok = 0;
    for (int s = 0; s < inner_samples; ++s)
        if (sample_pointing_loss_aligned(params, rng) >= loss_threshold) ++ok;
    double aligned = 1.0 - params.pointing_variance * params.pointing_variance;
    return Probability::clamped(aligned * static_cast<double>(ok) /
                                static_cast<double>(inner_samples));
}

TrialResult run_trial(const ExperimentConfig& config, int trial_index) {
    return run_trial(config, trial_index, nullptr);
}

TrialResult run_trial(const ExperimentConfig& config, int trial_index, TrialDetail* detail) {
    config.validate();
    const int n = config.n_nodes;
    const auto trial = static_cast<std::uint64_t>(trial_index);
    const RateProfile& profile = config.profile_for_mode();
    ModeTopology topo = build_topology(config.mode, n, 0);
    LatencyMatrix m(n);

    // Mode 2: a single representative ground node talks to the satellite, so
    // there is one sat-ground estimate per trial, shared by every pair that
    // touches the satellite.
    double sat_latency = 0.0;
    if (config.mode == 2) {
        int rep = topo.representative_index();
        RandomStream rng(config.master_seed, trial, pair_id(rep, n - 1, n), kPurposeChannel);
        Probability ps = estimate_link_ps(*config.satground, config.inner_samples, rng);
        sat_latency = ps_to_latency(ps, profile);
        if (detail)
            detail->pairs.push_back({rep, n - 1, LinkType::SatGround, ps, sat_latency});
    }

    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            LinkType lt = topo.link_type(i, j);
            if (lt == LinkType::SatGround) {
                m.set(i, j, sat_latency);
                continue;
            }

            Probability ps;
            if (lt == LinkType::InterGround) {
                RandomStream geo(config.master_seed, trial, pair_id(i, j, n), kPurposeGeometry);
                GroundScene scene = sample_ground_scene(*config.ground, geo);
                ps = estimate_link_ps(*config.ground, scene);
            } else {
                RandomStream geo(config.master_seed, trial, pair_id(i, j, n), kPurposeGeometry);
                double dmax = max_visible_distance(config.intersat->altitude_i_km,
                                                   config.intersat->altitude_j_km,
                                                   config.intersat->earth_radius_km);
                InterSatScene scene{dmax * (0.1 + 0.9 * geo.next_unit())};
                RandomStream chan(config.master_seed, trial, pair_id(i, j, n), kPurposeChannel);
                ps = estimate_link_ps(*config.intersat, scene, config.inner_samples, chan);
            }
            double t = ps_to_latency(ps, profile);
            m.set(i, j, t);
            if (detail) detail->pairs.push_back({i, j, lt, ps, t});
        }
    }

    PhaseLatencies phases = pbft_overall_latency(topo, m);
    if (detail) detail->phases = phases;
    return {phases.total_s, 1.0 / phases.total_s};
}

std::vector<double> run_trial_latencies(const ExperimentConfig& config) {
    config.validate();
    const int trials = config.trials;
    std::vector<double> latency(static_cast<std::size_t>(trials));

    int workers = resolve_workers(config.workers, trials);
    if (workers == 1) {
        for (int t = 0; t < trials; ++t) latency[static_cast<std::size_t>(t)] =
            run_trial(config, t).latency_s;
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        std::atomic<int> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                try {
                    for (;;) {
                        int t = next.fetch_add(1);
                        if (t >= trials) return;
                        latency[static_cast<std::size_t>(t)] = run_trial(config, t).latency_s;
                    }
                } catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            });
        }
        for (auto& th : pool) th.join();
        if (failure) std::rethrow_exception(failure);
    }
    return latency;
}

namespace {

ExperimentResult summarize(const std::vector<double>& latency) {
    const auto trials = static_cast<double>(latency.size());
    double sum = 0.0;
    for (double v : latency) sum += v;  // fixed trial-index order
    double mean = sum / trials;

    double ci = 0.0;
    if (latency.size() > 1) {
        double ss = 0.0;
        for (double v : latency) ss += (v - mean) * (v - mean);
        double sd = std::sqrt(ss / (trials - 1.0));
        ci = 1.96 * sd / std::sqrt(trials);
    }
    return {mean, ci, 1.0 / mean};
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& config) {
    return summarize(run_trial_latencies(config));
}

SweepResult sweep(const ExperimentConfig& config, SweepAxis axis,
                  const std::vector<double>& values, bool keep_per_trial) {
    if (values.empty()) throw config_error("sweep: values must be nonempty");

    SweepResult result;
    result.axis_name = axis == SweepAxis::TxPowerDbm ? "tx_power_dbm" : "n_nodes";
    result.axis_values = values;

    for (double value : values) {
        ExperimentConfig point = config;
        if (axis == SweepAxis::TxPowerDbm) {
            double watt = dbm_to_watt(value);
            if (point.ground) point.ground->tx_power_w = watt;
            if (point.satground) point.satground->tx_power_w = watt;
            if (point.intersat) point.intersat->tx_power_w = watt;
        } else {
            double rounded = std::round(value);
            if (std::abs(value - rounded) > 1e-9)
                throw config_error("sweep: n_nodes values must be integers");
            point.n_nodes = static_cast<int>(rounded);
        }

        std::vector<double> latency = run_trial_latencies(point);
        ExperimentResult r = summarize(latency);
        LatencyBounds b = latency_bounds_mode(point.mode, point.ground, point.satground,
                                              point.intersat, point.profile_for_mode());
        result.mean_latency_s.push_back(r.mean_latency_s);
        result.ci95_halfwidth_s.push_back(r.ci95_halfwidth_s);
        result.mean_tps.push_back(r.mean_tps);
        result.bound_lower_s.push_back(b.t_lower_s);
        result.bound_upper_s.push_back(b.t_upper_s);
        if (keep_per_trial) result.per_trial_latency_s.push_back(std::move(latency));
    }
    return result;
}

}  // namespace didsim

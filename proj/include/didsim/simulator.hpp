#ifndef DIDSIM_SIMULATOR_HPP
#define DIDSIM_SIMULATOR_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "didsim/analytic.hpp"
#include "didsim/consensus.hpp"
#include "didsim/linkmodels.hpp"
#include "didsim/mathkit.hpp"
#include "didsim/rng.hpp"

namespace didsim {

struct ExperimentConfig {
    int mode = 1;
    int n_nodes = 5;
    int trials = 1000;
    int inner_samples = 1000;
    std::uint64_t master_seed = 1;
    int workers = 0;             // 0 = hardware concurrency
    int transaction_bits = 128;  // recorded for reporting, not a model input

    std::optional<GroundLinkParams> ground;
    std::optional<SatGroundLinkParams> satground;
    std::optional<InterSatLinkParams> intersat;
    std::vector<RateProfile> profiles;  // one per mode, index mode-1

    const RateProfile& profile_for_mode() const;
    void validate() const;
};

// Per-trial link scenes: geometry frozen for the trial, channel randomness
// redrawn per inner sample.
struct InterSatScene {
    double distance_km = 0.0;
};

// Success-probability estimators, one per link type.
//
// Inter-ground: the SINR is a deterministic function of the frozen geometry
// (no fading term), so the empirical fraction collapses to a 0/1 indicator.
Probability estimate_link_ps(const GroundLinkParams& params, const GroundScene& scene);

// Satellite-ground: fraction of inner_samples fresh fading draws whose SNR
// clears the threshold.
Probability estimate_link_ps(const SatGroundLinkParams& params, int inner_samples,
                             RandomStream& rng);

// Inter-satellite: the alignment Bernoulli (success probability 1-varsigma^2)
// is marginalized analytically and only the aligned-branch pointing loss is
// sampled, so the estimate always sits inside the analytic bounds:
//   P = (1-varsigma^2) * fraction of aligned draws with SNR >= threshold.
Probability estimate_link_ps(const InterSatLinkParams& params, const InterSatScene& scene,
                             int inner_samples, RandomStream& rng);

struct TrialResult {
    double latency_s = 0.0;
    double tps = 0.0;
};

// Diagnostics for tests: per-pair estimates and latencies of one trial.
struct TrialDetail {
    struct PairSample {
        int i = 0;
        int j = 0;
        LinkType link = LinkType::InterGround;
        Probability ps;
        double latency_s = 0.0;
    };
    std::vector<PairSample> pairs;
    PhaseLatencies phases;
};

// One Monte-Carlo trial: per-pair geometry, per-pair success estimate,
// four-phase composition. Deterministic given (master_seed, trial_index);
// substreams are keyed by (seed, trial, pair, purpose) so the result does not
// depend on evaluation order.
TrialResult run_trial(const ExperimentConfig& config, int trial_index);
TrialResult run_trial(const ExperimentConfig& config, int trial_index, TrialDetail* detail);

struct ExperimentResult {
    double mean_latency_s = 0.0;
    double ci95_halfwidth_s = 0.0;
    double mean_tps = 0.0;  // reciprocal of mean latency
};

// All trial latencies in index order (the parallel workers share the index
// space; the output does not depend on the worker count).
std::vector<double> run_trial_latencies(const ExperimentConfig& config);

// Mean over trials with a 1.96*s/sqrt(trials) confidence halfwidth.
ExperimentResult run_experiment(const ExperimentConfig& config);

struct SweepResult {
    std::string axis_name;
    std::vector<double> axis_values;
    std::vector<double> mean_latency_s;
    std::vector<double> ci95_halfwidth_s;
    std::vector<double> mean_tps;
    std::vector<double> bound_lower_s;
    std::vector<double> bound_upper_s;
    // one row per axis value when requested, empty otherwise
    std::vector<std::vector<double>> per_trial_latency_s;
};

enum class SweepAxis { TxPowerDbm, NNodes };

// Runs one experiment per axis value and attaches the analytic endpoints.
// A power value is applied to every link type present in the config.
SweepResult sweep(const ExperimentConfig& config, SweepAxis axis,
                  const std::vector<double>& values, bool keep_per_trial = false);

double dbm_to_watt(double dbm);
double db_to_linear(double db);

}  // namespace didsim

#endif

#ifndef DIDSIM_SCENARIO_HPP
#define DIDSIM_SCENARIO_HPP

#include <array>
#include <cstdint>
#include <string>

#include <json.hpp>

#include "didsim/simulator.hpp"

namespace didsim {

// Scenario file mirror of ExperimentConfig. Fields are kept in the units the
// file uses (dBm/dBi/dB key suffixes); conversion to linear happens exactly
// once, in to_config(). Omitted fields take the default (Table-style) values
// below; a link section set to null is treated as absent. Unknown keys are
// rejected.

struct ScenarioGround {
    double tx_power_dbm = 40.0;
    double carrier_hz = 2e9;
    double noise_dbm = -104.0;
    double intensity_per_km2 = 8000.0;
    double interference_radius_km = 0.1;
    double d_min_km = 0.02;
    double d_max_km = 0.08;
    double snr_threshold_db = -100.0;
    double epsilon = 1e-14;

    bool operator==(const ScenarioGround&) const = default;
};

struct ScenarioSatGround {
    double tx_power_dbm = 40.0;
    double antenna_gain_dbi = 38.0;
    double carrier_hz = 2e9;
    double noise_w = 7.96e-12;
    double distance_km = 550.0;
    double fading_b0 = 0.851;
    double fading_m0 = 2.91;
    double fading_omega = 0.278;
    double snr_threshold_db = -100.0;

    bool operator==(const ScenarioSatGround&) const = default;
};

struct ScenarioInterSat {
    double tx_power_dbm = 40.0;
    double antenna_gain_dbi = 160.0;
    double carrier_hz = 26e9;
    double noise_w = 1e-13;
    double pointing_variance = 0.015;
    double pointing_eta = 1.00526;
    double pointing_a0 = 0.01979;
    double altitude_i_km = 550.0;
    double altitude_j_km = 550.0;
    double earth_radius_km = 6371.0;
    double snr_threshold_db = -100.0;

    bool operator==(const ScenarioInterSat&) const = default;
};

struct ScenarioProfile {
    double bandwidth_hz = 1000.0;
    int subcarriers = 1;
    double capacity_bps = 8000.0;
    double rate_bps = 5000.0;

    bool operator==(const ScenarioProfile&) const = default;
};

struct Scenario {
    int mode = 1;
    int n_nodes = 5;
    int trials = 1000;
    int inner_samples = 1000;
    std::uint64_t master_seed = 1;
    int workers = 0;
    int transaction_bits = 128;

    bool ground_present = true;
    bool satground_present = true;
    bool intersat_present = true;
    ScenarioGround ground;
    ScenarioSatGround satground;
    ScenarioInterSat intersat;
    std::array<ScenarioProfile, 3> profiles = {
        ScenarioProfile{1000.0, 1, 8000.0, 5000.0},
        ScenarioProfile{1000.0, 1, 8000.0, 3000.0},
        ScenarioProfile{2e7, 1, 2e8, 8e7},
    };

    bool operator==(const Scenario&) const = default;

    static Scenario defaults() { return Scenario{}; }
    static Scenario from_json(const nlohmann::json& j);
    static Scenario load(const std::string& path);

    nlohmann::json to_json() const;  // effective config, defaults materialized
    ExperimentConfig to_config() const;
};

}  // namespace didsim

#endif

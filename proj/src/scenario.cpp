#include "didsim/scenario.hpp"

#include <fstream>
#include <set>
#include <string>

#include "didsim/errors.hpp"

namespace didsim {

namespace {

using nlohmann::json;

void check_keys(const json& obj, const std::string& where,
                const std::set<std::string>& allowed) {
    for (const auto& item : obj.items()) {
        if (!allowed.count(item.key()))
            throw config_error("scenario: unknown key \"" + item.key() + "\" in " + where);
    }
}

template <typename T>
void read_field(const json& obj, const std::string& where, const char* key, T& out) {
    auto it = obj.find(key);
    if (it == obj.end()) return;  // keep default
    try {
        out = it->get<T>();
    } catch (const json::exception&) {
        throw config_error("scenario: field \"" + where + "." + key + "\" has the wrong type");
    }
}

ScenarioGround parse_ground(const json& j) {
    check_keys(j, "ground",
               {"tx_power_dbm", "carrier_hz", "noise_dbm", "intensity_per_km2",
                "interference_radius_km", "d_min_km", "d_max_km", "snr_threshold_db", "epsilon"});
    ScenarioGround g;
    read_field(j, "ground", "tx_power_dbm", g.tx_power_dbm);
    read_field(j, "ground", "carrier_hz", g.carrier_hz);
    read_field(j, "ground", "noise_dbm", g.noise_dbm);
    read_field(j, "ground", "intensity_per_km2", g.intensity_per_km2);
    read_field(j, "ground", "interference_radius_km", g.interference_radius_km);
    read_field(j, "ground", "d_min_km", g.d_min_km);
    read_field(j, "ground", "d_max_km", g.d_max_km);
    read_field(j, "ground", "snr_threshold_db", g.snr_threshold_db);
    read_field(j, "ground", "epsilon", g.epsilon);
    return g;
}

ScenarioSatGround parse_satground(const json& j) {
    check_keys(j, "satground",
               {"tx_power_dbm", "antenna_gain_dbi", "carrier_hz", "noise_w", "distance_km",
                "fading_b0", "fading_m0", "fading_omega", "snr_threshold_db"});
    ScenarioSatGround s;
    read_field(j, "satground", "tx_power_dbm", s.tx_power_dbm);
    read_field(j, "satground", "antenna_gain_dbi", s.antenna_gain_dbi);
    read_field(j, "satground", "carrier_hz", s.carrier_hz);
    read_field(j, "satground", "noise_w", s.noise_w);
    read_field(j, "satground", "distance_km", s.distance_km);
    read_field(j, "satground", "fading_b0", s.fading_b0);
    read_field(j, "satground", "fading_m0", s.fading_m0);
    read_field(j, "satground", "fading_omega", s.fading_omega);
    read_field(j, "satground", "snr_threshold_db", s.snr_threshold_db);
    return s;
}

ScenarioInterSat parse_intersat(const json& j) {
    check_keys(j, "intersat",
               {"tx_power_dbm", "antenna_gain_dbi", "carrier_hz", "noise_w", "pointing_variance",
                "pointing_eta", "pointing_a0", "altitude_i_km", "altitude_j_km", "earth_radius_km",
                "snr_threshold_db"});
    ScenarioInterSat s;
    read_field(j, "intersat", "tx_power_dbm", s.tx_power_dbm);
    read_field(j, "intersat", "antenna_gain_dbi", s.antenna_gain_dbi);
    read_field(j, "intersat", "carrier_hz", s.carrier_hz);
    read_field(j, "intersat", "noise_w", s.noise_w);
    read_field(j, "intersat", "pointing_variance", s.pointing_variance);
    read_field(j, "intersat", "pointing_eta", s.pointing_eta);
    read_field(j, "intersat", "pointing_a0", s.pointing_a0);
    read_field(j, "intersat", "altitude_i_km", s.altitude_i_km);
    read_field(j, "intersat", "altitude_j_km", s.altitude_j_km);
    read_field(j, "intersat", "earth_radius_km", s.earth_radius_km);
    read_field(j, "intersat", "snr_threshold_db", s.snr_threshold_db);
    return s;
}

ScenarioProfile parse_profile(const json& j, const std::string& where, ScenarioProfile defaults) {
    check_keys(j, where, {"bandwidth_hz", "subcarriers", "capacity_bps", "rate_bps"});
    ScenarioProfile p = defaults;
    read_field(j, where, "bandwidth_hz", p.bandwidth_hz);
    read_field(j, where, "subcarriers", p.subcarriers);
    read_field(j, where, "capacity_bps", p.capacity_bps);
    read_field(j, where, "rate_bps", p.rate_bps);
    return p;
}

json ground_json(const ScenarioGround& g) {
    return {{"tx_power_dbm", g.tx_power_dbm},
            {"carrier_hz", g.carrier_hz},
            {"noise_dbm", g.noise_dbm},
            {"intensity_per_km2", g.intensity_per_km2},
            {"interference_radius_km", g.interference_radius_km},
            {"d_min_km", g.d_min_km},
            {"d_max_km", g.d_max_km},
            {"snr_threshold_db", g.snr_threshold_db},
            {"epsilon", g.epsilon}};
}

json satground_json(const ScenarioSatGround& s) {
    return {{"tx_power_dbm", s.tx_power_dbm},
            {"antenna_gain_dbi", s.antenna_gain_dbi},
            {"carrier_hz", s.carrier_hz},
            {"noise_w", s.noise_w},
            {"distance_km", s.distance_km},
            {"fading_b0", s.fading_b0},
            {"fading_m0", s.fading_m0},
            {"fading_omega", s.fading_omega},
            {"snr_threshold_db", s.snr_threshold_db}};
}

json intersat_json(const ScenarioInterSat& s) {
    return {{"tx_power_dbm", s.tx_power_dbm},
            {"antenna_gain_dbi", s.antenna_gain_dbi},
            {"carrier_hz", s.carrier_hz},
            {"noise_w", s.noise_w},
            {"pointing_variance", s.pointing_variance},
            {"pointing_eta", s.pointing_eta},
            {"pointing_a0", s.pointing_a0},
            {"altitude_i_km", s.altitude_i_km},
            {"altitude_j_km", s.altitude_j_km},
            {"earth_radius_km", s.earth_radius_km},
            {"snr_threshold_db", s.snr_threshold_db}};
}

json profile_json(const ScenarioProfile& p) {
    return {{"bandwidth_hz", p.bandwidth_hz},
            {"subcarriers", p.subcarriers},
            {"capacity_bps", p.capacity_bps},
            {"rate_bps", p.rate_bps}};
}

}  // namespace

Scenario Scenario::from_json(const json& j) {
    if (!j.is_object()) throw config_error("scenario: top-level document must be an object");
    check_keys(j, "scenario",
               {"mode", "n_nodes", "trials", "inner_samples", "master_seed", "workers",
                "transaction_bits", "ground", "satground", "intersat", "profiles"});

    Scenario s;
    read_field(j, "scenario", "mode", s.mode);
    read_field(j, "scenario", "n_nodes", s.n_nodes);
    read_field(j, "scenario", "trials", s.trials);
    read_field(j, "scenario", "inner_samples", s.inner_samples);
    read_field(j, "scenario", "master_seed", s.master_seed);
    read_field(j, "scenario", "workers", s.workers);
    read_field(j, "scenario", "transaction_bits", s.transaction_bits);

    auto section = [&](const char* key, bool& present, auto parse, auto& out) {
        auto it = j.find(key);
        if (it == j.end()) return;  // defaults, present
        if (it->is_null()) {
            present = false;
            return;
        }
        if (!it->is_object())
            throw config_error(std::string("scenario: \"") + key + "\" must be an object or null");
        out = parse(*it);
        present = true;
    };
    section("ground", s.ground_present, parse_ground, s.ground);
    section("satground", s.satground_present, parse_satground, s.satground);
    section("intersat", s.intersat_present, parse_intersat, s.intersat);

    if (auto it = j.find("profiles"); it != j.end()) {
        if (!it->is_object()) throw config_error("scenario: \"profiles\" must be an object");
        check_keys(*it, "profiles", {"mode1", "mode2", "mode3"});
        const char* names[3] = {"mode1", "mode2", "mode3"};
        for (int k = 0; k < 3; ++k) {
            auto pit = it->find(names[k]);
            if (pit == it->end()) continue;
            if (!pit->is_object())
                throw config_error(std::string("scenario: profiles.") + names[k] +
                                   " must be an object");
            s.profiles[static_cast<std::size_t>(k)] = parse_profile(
                *pit, std::string("profiles.") + names[k],
                s.profiles[static_cast<std::size_t>(k)]);
        }
    }
    return s;
}

Scenario Scenario::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("scenario: cannot open \"" + path + "\"");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw config_error("scenario: JSON parse failure in \"" + path + "\": " + e.what());
    }
    return from_json(j);
}

json Scenario::to_json() const {
    json j;
    j["mode"] = mode;
    j["n_nodes"] = n_nodes;
    j["trials"] = trials;
    j["inner_samples"] = inner_samples;
    j["master_seed"] = master_seed;
    j["workers"] = workers;
    j["transaction_bits"] = transaction_bits;
    j["ground"] = ground_present ? ground_json(ground) : json();
    j["satground"] = satground_present ? satground_json(satground) : json();
    j["intersat"] = intersat_present ? intersat_json(intersat) : json();
    j["profiles"] = {{"mode1", profile_json(profiles[0])},
                     {"mode2", profile_json(profiles[1])},
                     {"mode3", profile_json(profiles[2])}};
    return j;
}

ExperimentConfig Scenario::to_config() const {
    ExperimentConfig c;
    c.mode = mode;
    c.n_nodes = n_nodes;
    c.trials = trials;
    c.inner_samples = inner_samples;
    c.master_seed = master_seed;
    c.workers = workers;
    c.transaction_bits = transaction_bits;

    if (ground_present) {
        GroundLinkParams g;
        g.tx_power_w = dbm_to_watt(ground.tx_power_dbm);
        g.carrier_hz = ground.carrier_hz;
        g.noise_w = dbm_to_watt(ground.noise_dbm);
        g.intensity_per_km2 = ground.intensity_per_km2;
        g.interference_radius_km = ground.interference_radius_km;
        g.d_min_km = ground.d_min_km;
        g.d_max_km = ground.d_max_km;
        g.snr_threshold = db_to_linear(ground.snr_threshold_db);
        g.epsilon = ground.epsilon;
        c.ground = g;
    }
    if (satground_present) {
        SatGroundLinkParams s;
        s.tx_power_w = dbm_to_watt(satground.tx_power_dbm);
        s.antenna_gain = db_to_linear(satground.antenna_gain_dbi);
        s.carrier_hz = satground.carrier_hz;
        s.noise_w = satground.noise_w;
        s.distance_km = satground.distance_km;
        s.fading_b0 = satground.fading_b0;
        s.fading_m0 = satground.fading_m0;
        s.fading_omega = satground.fading_omega;
        s.snr_threshold = db_to_linear(satground.snr_threshold_db);
        c.satground = s;
    }
    if (intersat_present) {
        InterSatLinkParams s;
        s.tx_power_w = dbm_to_watt(intersat.tx_power_dbm);
        s.antenna_gain = db_to_linear(intersat.antenna_gain_dbi);
        s.carrier_hz = intersat.carrier_hz;
        s.noise_w = intersat.noise_w;
        s.pointing_variance = intersat.pointing_variance;
        s.pointing_eta = intersat.pointing_eta;
        s.pointing_a0 = intersat.pointing_a0;
        s.altitude_i_km = intersat.altitude_i_km;
        s.altitude_j_km = intersat.altitude_j_km;
        s.earth_radius_km = intersat.earth_radius_km;
        s.snr_threshold = db_to_linear(intersat.snr_threshold_db);
        c.intersat = s;
    }

    c.profiles.clear();
    c.profiles.reserve(3);
    for (const ScenarioProfile& p : profiles) {
        if (!(p.bandwidth_hz > 0.0))
            throw config_error("scenario: profile bandwidth must be positive");
        c.profiles.emplace_back(p.bandwidth_hz, p.subcarriers, p.capacity_bps / p.bandwidth_hz,
                                p.rate_bps / p.bandwidth_hz);
    }
    return c;
}

}  // namespace didsim

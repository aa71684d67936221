#include "didsim/linkmodels.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "didsim/errors.hpp"
#include "didsim/mathkit.hpp"

namespace didsim {

namespace {

constexpr double kSpeedOfLight = 299792458.0;  // m/s
constexpr double kPi = 3.141592653589793;

void require_positive(double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v))
        throw config_error(std::string(name) + " must be positive and finite");
}

}  // namespace

void GroundLinkParams::validate() const {
    require_positive(tx_power_w, "ground.tx_power_w");
    require_positive(carrier_hz, "ground.carrier_hz");
    require_positive(noise_w, "ground.noise_w");
    require_positive(intensity_per_km2, "ground.intensity_per_km2");
    require_positive(interference_radius_km, "ground.interference_radius_km");
    require_positive(d_min_km, "ground.d_min_km");
    require_positive(d_max_km, "ground.d_max_km");
    require_positive(snr_threshold, "ground.snr_threshold");
    require_positive(epsilon, "ground.epsilon");
    if (!(d_min_km < d_max_km))
        throw config_error("ground: d_min_km must be smaller than d_max_km");
    if (!(d_max_km <= interference_radius_km))
        throw config_error("ground: d_max_km must not exceed interference_radius_km");
    if (!(epsilon < snr_threshold))
        throw config_error("ground: epsilon must be smaller than snr_threshold");
}

void SatGroundLinkParams::validate() const {
    require_positive(tx_power_w, "satground.tx_power_w");
    require_positive(antenna_gain, "satground.antenna_gain");
    require_positive(carrier_hz, "satground.carrier_hz");
    require_positive(noise_w, "satground.noise_w");
    require_positive(distance_km, "satground.distance_km");
    require_positive(fading_b0, "satground.fading_b0");
    require_positive(fading_m0, "satground.fading_m0");
    require_positive(fading_omega, "satground.fading_omega");
    require_positive(snr_threshold, "satground.snr_threshold");
}

void InterSatLinkParams::validate() const {
    require_positive(tx_power_w, "intersat.tx_power_w");
    require_positive(antenna_gain, "intersat.antenna_gain");
    require_positive(carrier_hz, "intersat.carrier_hz");
    require_positive(noise_w, "intersat.noise_w");
    require_positive(pointing_variance, "intersat.pointing_variance");
    require_positive(pointing_eta, "intersat.pointing_eta");
    require_positive(pointing_a0, "intersat.pointing_a0");
    require_positive(earth_radius_km, "intersat.earth_radius_km");
    require_positive(snr_threshold, "intersat.snr_threshold");
    if (!(altitude_i_km >= 0.0) || !(altitude_j_km >= 0.0))
        throw config_error("intersat: altitudes must be nonnegative");
    if (!(pointing_variance < 1.0))
        throw config_error("intersat: pointing_variance must be below 1 (small-angle regime)");
}

double path_loss(double distance_m, double carrier_hz) {
    if (!(distance_m > 0.0)) throw std::domain_error("path_loss: distance must be positive");
    if (!(carrier_hz > 0.0)) throw std::domain_error("path_loss: carrier must be positive");
    double amplitude = kSpeedOfLight / (4.0 * kPi * distance_m * carrier_hz);
    return amplitude * amplitude;
}

GroundScene sample_ground_scene(const GroundLinkParams& params, RandomStream& rng) {
    const double lp = params.intensity_per_km2 * kPi;

    // Truncated inverse CDF of the nearest-neighbor law. F(d) = 1 - exp(-lp*d^2).
    double fa = -std::expm1(-lp * params.d_min_km * params.d_min_km);
    double fb = -std::expm1(-lp * params.d_max_km * params.d_max_km);
    double v = fa + rng.next_unit() * (fb - fa);
    GroundScene scene;
    scene.d0_km = std::sqrt(-std::log1p(-v) / lp);

    double dg = params.interference_radius_km;
    int count = static_cast<int>(std::ceil(lp * dg * dg));
    scene.interferer_km.resize(static_cast<std::size_t>(count));
    for (double& d : scene.interferer_km) d = dg * std::sqrt(rng.next_unit());
    return scene;
}

double sinr_ground(const GroundLinkParams& params, double d0_km,
                   const std::vector<double>& interferer_distances_km) {
    if (!(d0_km > 0.0)) throw std::domain_error("sinr_ground: d0 must be positive");
    double signal = params.tx_power_w * path_loss(d0_km * 1000.0, params.carrier_hz);
    double interference = 0.0;
    for (double d : interferer_distances_km) {
        if (!(d > 0.0)) throw std::domain_error("sinr_ground: interferer distance must be positive");
        interference += params.tx_power_w * path_loss(d * 1000.0, params.carrier_hz);
    }
    return signal / (interference + params.noise_w);
}

double sample_fading_gain(const SatGroundLinkParams& params, RandomStream& rng) {
    auto [alpha, beta] =
        gamma_params_from_shadowed_rician(params.fading_b0, params.fading_m0, params.fading_omega);
    return rng.next_gamma(alpha, beta);
}

double snr_satground(const SatGroundLinkParams& params, double fading_gain) {
    if (!(fading_gain >= 0.0)) throw std::domain_error("snr_satground: negative fading gain");
    return params.tx_power_w * params.antenna_gain * fading_gain *
           path_loss(params.distance_km * 1000.0, params.carrier_hz) / params.noise_w;
}

double sample_pointing_loss_aligned(const InterSatLinkParams& params, RandomStream& rng) {
    double eta2 = params.pointing_eta * params.pointing_eta;
    return params.pointing_a0 * std::pow(rng.next_unit(), 1.0 / eta2);
}

double sample_pointing_loss(const InterSatLinkParams& params, RandomStream& rng) {
    double s2 = params.pointing_variance * params.pointing_variance;
    if (rng.next_unit() < s2) return 0.0;  // misaligned beam
    return sample_pointing_loss_aligned(params, rng);
}

double snr_intersat(const InterSatLinkParams& params, double pointing_loss, double distance_km) {
    if (!(pointing_loss >= 0.0) || !(pointing_loss <= params.pointing_a0))
        throw std::domain_error("snr_intersat: pointing loss outside [0, A0]");
    if (pointing_loss == 0.0) return 0.0;
    return params.tx_power_w * params.antenna_gain * pointing_loss *
           path_loss(distance_km * 1000.0, params.carrier_hz) / params.noise_w;
}

}  // namespace didsim

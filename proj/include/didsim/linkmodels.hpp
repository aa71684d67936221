#ifndef DIDSIM_LINKMODELS_HPP
#define DIDSIM_LINKMODELS_HPP

#include <vector>

#include "didsim/rng.hpp"

namespace didsim {

// Channel parameter sets for the three link types. All values are linear
// (watts, Hz, ratios); dB-suffixed config inputs are converted at ingestion.
// Distances and node intensity use km / per-km^2: the inter-ground bound
// expressions are unit-sensitive and only the km convention yields
// non-degenerate bounds with the default parameter set.

struct GroundLinkParams {
    double tx_power_w = 10.0;               // p_g
    double carrier_hz = 2e9;                // f_g
    double noise_w = 3.9810717055349695e-14;  // delta_g^2 (-104 dBm)
    double intensity_per_km2 = 8000.0;      // lambda_g
    double interference_radius_km = 0.1;    // D_g
    double d_min_km = 0.02;                 // d_l
    double d_max_km = 0.08;                 // d_u
    double snr_threshold = 1e-10;           // gamma_0,g
    double epsilon = 1e-14;                 // bound factor, 0 < eps < gamma_0

    void validate() const;
};

struct SatGroundLinkParams {
    double tx_power_w = 10.0;     // p_sg
    double antenna_gain = 6309.573444801933;  // G_sg (38 dBi)
    double carrier_hz = 2e9;      // f_sg
    double noise_w = 7.96e-12;    // sigma_sg^2
    double distance_km = 550.0;   // d_sg
    double fading_b0 = 0.851;
    double fading_m0 = 2.91;
    double fading_omega = 0.278;
    double snr_threshold = 1e-10;  // gamma_0,sg

    void validate() const;
};

struct InterSatLinkParams {
    double tx_power_w = 10.0;     // p_s
    double antenna_gain = 1e16;   // G_s (160 dBi)
    double carrier_hz = 26e9;     // f_s
    double noise_w = 1e-13;       // sigma_s^2
    double pointing_variance = 0.015;  // varsigma, radians
    double pointing_eta = 1.00526;     // eta_s
    double pointing_a0 = 0.01979;      // A_0
    double altitude_i_km = 550.0;      // h_i
    double altitude_j_km = 550.0;      // h_j
    double earth_radius_km = 6371.0;   // R_e
    double snr_threshold = 1e-10;      // gamma_0,s

    void validate() const;
};

// Free-space loss factor (c / (4*pi*d*f))^2, dimensionless.
double path_loss(double distance_m, double carrier_hz);

// One realization of the inter-ground geometry: transmitter-receiver distance
// plus the interferer ring around the receiver.
struct GroundScene {
    double d0_km = 0.0;
    std::vector<double> interferer_km;
};

// d0 from the nearest-neighbor law 2*pi*lambda*d*exp(-lambda*pi*d^2) truncated
// to [d_min, d_max] (inverse CDF); K = ceil(pi*lambda*D^2) interferers i.i.d.
// with radial pdf 2d/D^2 on (0, D].
GroundScene sample_ground_scene(const GroundLinkParams& params, RandomStream& rng);

// SINR of Eq-form p*L(d0) / (sum_x p*L(d_x) + noise). Interferers transmit at
// the same power as the desired node. Empty interferer list reduces to SNR.
double sinr_ground(const GroundLinkParams& params, double d0_km,
                   const std::vector<double>& interferer_distances_km);

// Shadowed-Rician power gain |h|^2 ~ Gamma(alpha, beta) with (alpha, beta)
// derived from (b0, m0, Omega).
double sample_fading_gain(const SatGroundLinkParams& params, RandomStream& rng);

double snr_satground(const SatGroundLinkParams& params, double fading_gain);

// Pointing loss W in [0, A0]: aligned with probability 1 - varsigma^2, in
// which case W = A0 * U^{1/eta^2} (inverse CDF of (w/A0)^{eta^2}); otherwise
// misaligned and W = 0. The aligned-branch draw is exposed separately for
// estimators that marginalize the alignment factor analytically.
double sample_pointing_loss(const InterSatLinkParams& params, RandomStream& rng);
double sample_pointing_loss_aligned(const InterSatLinkParams& params, RandomStream& rng);

double snr_intersat(const InterSatLinkParams& params, double pointing_loss, double distance_km);

}  // namespace didsim

#endif

#include "didsim/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "didsim/errors.hpp"

namespace didsim {

namespace {

constexpr double kPi = 3.141592653589793;

// (1 - term)^K with term given in log-space. Returns the literal mathematical
// value for diagnostics; degenerate inputs produce 0, negative or huge values
// and are sorted out by the Probability clamp.
double one_minus_pow(double log_term, int k) {
    double term = std::exp(log_term);
    if (term >= 1.0) {
        // (1-term) <= 0: meaningless as a probability, keep the literal value.
        return std::pow(1.0 - term, static_cast<double>(k));
    }
    return std::exp(static_cast<double>(k) * std::log1p(-term));
}

void order_bounds(PsBounds& b) {
    if (b.lower.value > b.upper.value) {
        std::swap(b.lower, b.upper);
        std::swap(b.raw_lower, b.raw_upper);
    }
}

}  // namespace

double ps_to_latency(const Probability& ps, const RateProfile& profile) {
    return phi_inverse(q_inverse(1.0 - ps.value), profile);
}

PsBounds ps_ground_bounds(const GroundLinkParams& params) {
    params.validate();

    const double lambda = params.intensity_per_km2;
    const double dg = params.interference_radius_km;
    const double du = params.d_max_km;
    const double dl = params.d_min_km;
    const double g0e = params.snr_threshold - params.epsilon;

    const int k = static_cast<int>(std::ceil(kPi * lambda * dg * dg));
    const double log_quarter_dg2 = std::log(dg * dg / 4.0);

    // Lower: the inner ratio e^{pi*l*du^2} / (g0e*2*pi*l*du) spans hundreds of
    // orders of magnitude, so it only ever exists in log form.
    double log_inner_u = kPi * lambda * du * du - std::log(g0e * 2.0 * kPi * lambda * du);
    double log_term_l = log_quarter_dg2 + (2.0 / static_cast<double>(k)) * log_inner_u;
    double raw_lower = one_minus_pow(log_term_l, k);

    // Upper: 1 - (D^2/4)^K * ((1-eps)*e^{pi*l*dl^2} / (g0e*2*pi*l*dl))^2.
    double log_inner_l = std::log1p(-params.epsilon) + kPi * lambda * dl * dl -
                         std::log(g0e * 2.0 * kPi * lambda * dl);
    double log_term_u = static_cast<double>(k) * log_quarter_dg2 + 2.0 * log_inner_l;
    double raw_upper = 1.0 - std::exp(log_term_u);

    PsBounds b;
    b.raw_lower = raw_lower;
    b.raw_upper = raw_upper;
    b.lower = Probability::clamped(raw_lower);
    b.upper = Probability::clamped(raw_upper);
    order_bounds(b);
    return b;
}

Probability ps_satground(const SatGroundLinkParams& params) {
    params.validate();
    auto [alpha, beta] =
        gamma_params_from_shadowed_rician(params.fading_b0, params.fading_m0, params.fading_omega);
    double loss = path_loss(params.distance_km * 1000.0, params.carrier_hz);
    double arg = params.snr_threshold * params.noise_w /
                 (beta * params.tx_power_w * params.antenna_gain * loss);
    return Probability::clamped(1.0 - regularized_lower_gamma(alpha, arg));
}

double max_visible_distance(double h_i_km, double h_j_km, double earth_radius_km) {
    if (h_i_km < 0.0 || h_j_km < 0.0)
        throw std::domain_error("max_visible_distance: negative altitude");
    if (!(earth_radius_km > 0.0))
        throw std::domain_error("max_visible_distance: earth radius must be positive");
    return std::sqrt(h_i_km * (h_i_km + 2.0 * earth_radius_km)) +
           std::sqrt(h_j_km * (h_j_km + 2.0 * earth_radius_km));
}

PsBounds ps_intersat_bounds(const InterSatLinkParams& params) {
    params.validate();
    const double s2 = params.pointing_variance * params.pointing_variance;
    const double eta2 = params.pointing_eta * params.pointing_eta;

    double dmax_km =
        max_visible_distance(params.altitude_i_km, params.altitude_j_km, params.earth_radius_km);
    double loss = path_loss(dmax_km * 1000.0, params.carrier_hz);
    double ratio = params.snr_threshold * params.noise_w /
                   (params.pointing_a0 * params.tx_power_w * params.antenna_gain * loss);

    PsBounds b;
    b.raw_upper = 1.0 - s2;
    b.raw_lower = (1.0 - s2) * (1.0 - std::pow(ratio, eta2));
    b.lower = Probability::clamped(b.raw_lower);
    b.upper = Probability::clamped(b.raw_upper);
    order_bounds(b);
    return b;
}

LatencyBounds latency_bounds_mode(int mode, const std::optional<GroundLinkParams>& ground,
                                  const std::optional<SatGroundLinkParams>& satground,
                                  const std::optional<InterSatLinkParams>& intersat,
                                  const RateProfile& profile) {
    double cand_a = 0.0;
    double cand_b = 0.0;

    switch (mode) {
        case 1: {
            if (!ground) throw config_error("mode 1 requires ground link parameters");
            PsBounds pb = ps_ground_bounds(*ground);
            cand_a = 4.0 * ps_to_latency(pb.lower, profile);
            cand_b = 4.0 * ps_to_latency(pb.upper, profile);
            break;
        }
        case 2: {
            if (!ground) throw config_error("mode 2 requires ground link parameters");
            if (!satground) throw config_error("mode 2 requires satellite-ground link parameters");
            PsBounds pb = ps_ground_bounds(*ground);
            double t_sg = ps_to_latency(ps_satground(*satground), profile);
            cand_a = 4.0 * std::max(ps_to_latency(pb.lower, profile), t_sg);
            cand_b = 4.0 * std::max(ps_to_latency(pb.upper, profile), t_sg);
            break;
        }
        case 3: {
            if (!intersat) throw config_error("mode 3 requires inter-satellite link parameters");
            PsBounds pb = ps_intersat_bounds(*intersat);
            cand_a = 4.0 * ps_to_latency(pb.lower, profile);
            cand_b = 4.0 * ps_to_latency(pb.upper, profile);
            break;
        }
        default:
            throw config_error("mode must be 1, 2 or 3");
    }

    LatencyBounds lb;
    lb.mode = mode;
    lb.t_lower_s = std::min(cand_a, cand_b);
    lb.t_upper_s = std::max(cand_a, cand_b);
    lb.tps_lower = 1.0 / lb.t_upper_s;
    lb.tps_upper = 1.0 / lb.t_lower_s;
    return lb;
}

double throughput(double t_overall_s) {
    if (!(t_overall_s > 0.0)) throw std::domain_error("throughput: latency must be positive");
    return 1.0 / t_overall_s;
}

}  // namespace didsim

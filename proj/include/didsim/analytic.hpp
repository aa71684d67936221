#ifndef DIDSIM_ANALYTIC_HPP
#define DIDSIM_ANALYTIC_HPP

#include <optional>

#include "didsim/linkmodels.hpp"
#include "didsim/mathkit.hpp"

namespace didsim {

// Ordered success-probability interval. The printed bound expressions can be
// vacuous (spanning hundreds of orders of magnitude), so the clamped values
// carry the usable interval and the raw values expose what was actually
// computed.
struct PsBounds {
    Probability lower;
    Probability upper;
    double raw_lower = 0.0;
    double raw_upper = 0.0;
};

// Ordered latency/throughput interval for one deployment mode.
struct LatencyBounds {
    int mode = 0;
    double t_lower_s = 0.0;
    double t_upper_s = 0.0;
    double tps_lower = 0.0;  // 1 / t_upper_s
    double tps_upper = 0.0;  // 1 / t_lower_s
};

// Link latency t_c = phi_inverse(q_inverse(1 - P_s)). Strictly increasing in
// the success probability.
double ps_to_latency(const Probability& ps, const RateProfile& profile);

// Inter-ground bounds:
//   P^L = (1 - (D^2/4) * (e^{pi*l*du^2} / ((g0-eps)*2*pi*l*du))^{2/K})^K
//   P^U = 1 - (D^2/4)^K * ((1-eps) * e^{pi*l*dl^2} / ((g0-eps)*2*pi*l*dl))^2
// with K = ceil(pi*l*D^2). Evaluated in log-domain, clamped, ordered.
PsBounds ps_ground_bounds(const GroundLinkParams& params);

// Satellite-ground closed form
//   P_s = 1 - P(alpha, g0*sigma^2 / (beta*p*G*L(d))).
Probability ps_satground(const SatGroundLinkParams& params);

// Line-of-sight limit over a spherical Earth:
//   sqrt(h_i*(h_i+2*Re)) + sqrt(h_j*(h_j+2*Re)).
double max_visible_distance(double h_i_km, double h_j_km, double earth_radius_km);

// Inter-satellite bounds:
//   P^U = 1 - varsigma^2
//   P^L = (1 - varsigma^2) * (1 - (g0*sigma^2/(A0*p*G*L(dmax)))^{eta^2}).
PsBounds ps_intersat_bounds(const InterSatLinkParams& params);

// Per-mode latency/throughput interval. Substitutes the mode's P bounds into
// ps_to_latency (mode 1: 4*t(P_g); mode 2: 4*max{t(P_g), t(P_sg)};
// mode 3: 4*t(P_s)) and orders the two candidate endpoints as (min, max);
// the literal bound labels invert under the increasing latency map, and
// ordering preserves the containment guarantee either way.
LatencyBounds latency_bounds_mode(int mode, const std::optional<GroundLinkParams>& ground,
                                  const std::optional<SatGroundLinkParams>& satground,
                                  const std::optional<InterSatLinkParams>& intersat,
                                  const RateProfile& profile);

// TPS = 1 / T_overall.
double throughput(double t_overall_s);

}  // namespace didsim

#endif

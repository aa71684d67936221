#ifndef DIDSIM_MATHKIT_HPP
#define DIDSIM_MATHKIT_HPP

#include <cstdint>
#include <utility>

namespace didsim {

// Per-mode transmission parameters feeding the finite-blocklength latency map.
// Capacity and rate are spectral efficiencies (bits/s/Hz); configs listing
// bit rates are normalized by the bandwidth before construction.
// Construction requires capacity_se > rate_se > 0, otherwise phi is bounded
// above and has no inverse on the positive reals.
class RateProfile {
public:
    RateProfile(double bandwidth_hz, int subcarriers, double capacity_se, double rate_se);

    double bandwidth_hz() const { return bandwidth_hz_; }
    int subcarriers() const { return subcarriers_; }
    double capacity_se() const { return capacity_se_; }
    double rate_se() const { return rate_se_; }

    // B*N, the channel-use rate in symbols/s.
    double symbol_rate() const { return bandwidth_hz_ * static_cast<double>(subcarriers_); }

private:
    double bandwidth_hz_;
    int subcarriers_;
    double capacity_se_;
    double rate_se_;
};

// Success probability clamped into [kMin, kMax]. The clamp keeps
// Q^{-1}(1-P) finite when analytic bounds degenerate to exactly 0 or 1.
// The pre-clamp value is retained for diagnostics.
struct Probability {
    static constexpr double kMin = 1e-12;
    static constexpr double kMax = 1.0 - 1e-12;

    double value = kMin;  // clamped
    double raw = 0.0;     // as computed, possibly outside [0,1]

    static Probability clamped(double raw_value);
};

// Gaussian tail probability P(Z > x). Strictly decreasing, range (0,1).
double q_function(double x);

// Inverse of q_function on (0,1). Round-trips to ~1e-15 relative.
double q_inverse(double p);

// Finite-blocklength latency map
//   phi(x) = ((C-R)*B*N*x + 0.5*log2(B*N*x)) / (log2(e) * sqrt(B*N*x)).
// Strictly increasing in x for the profiles used here, range (-inf, +inf).
double phi(double x_seconds, const RateProfile& profile);

// Numerical inverse of phi: geometric bracket expansion from x0 = 1/(B*N),
// then bisection to 1e-12 relative width (iteration cap 200).
double phi_inverse(double y, const RateProfile& profile);

// Regularized lower incomplete gamma P(a,x) in [0,1], nondecreasing in x.
// Series expansion for x < a+1, Lentz continued fraction otherwise.
double regularized_lower_gamma(double a, double x);

// Shadowed-Rician fading power gain reduces to Gamma(alpha, beta) with
//   alpha = m0*(2*b0+Omega)^2 / (4*m0*b0^2 + 4*m0*b0*Omega + Omega^2)
//   beta  = (2*b0+Omega) / alpha.
std::pair<double, double> gamma_params_from_shadowed_rician(double b0, double m0, double omega);

}  // namespace didsim

#endif

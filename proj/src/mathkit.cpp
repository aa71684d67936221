#include "didsim/mathkit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "didsim/errors.hpp"

namespace didsim {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;
constexpr double kInvSqrt2Pi = 0.3989422804014327;
constexpr double kLog2E = 1.4426950408889634;

double normal_pdf(double x) {
    return kInvSqrt2Pi * std::exp(-0.5 * x * x);
}

// Acklam's rational approximation of the standard normal quantile,
// |relative error| < 1.15e-9 over (0,1). Polished by Newton afterwards.
double inverse_normal_cdf_approx(double p) {
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    const double plow = 0.02425;

    if (p < plow) {
        double q = std::sqrt(-2.0 * std::log(p));
        return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    if (p > 1.0 - plow) {
        double q = std::sqrt(-2.0 * std::log(1.0 - p));
        return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    double q = p - 0.5;
    double r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

// Series expansion of P(a,x), valid for x < a+1 (Numerical Recipes form).
double lower_gamma_series(double a, double x) {
    if (x == 0.0) return 0.0;
    double ap = a;
    double sum = 1.0 / a;
    double term = sum;
    for (int n = 1; n < 500; ++n) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::abs(term) < std::abs(sum) * 1e-16) break;
    }
    double log_result = -x + a * std::log(x) - std::lgamma(a);
    return sum * std::exp(log_result);
}

// Continued fraction for Q(a,x) = 1 - P(a,x), valid for x >= a+1
// (modified Lentz algorithm).
double upper_gamma_cf(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 500; ++i) {
        double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-16) break;
    }
    return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

}  // namespace

RateProfile::RateProfile(double bandwidth_hz, int subcarriers, double capacity_se, double rate_se)
    : bandwidth_hz_(bandwidth_hz),
      subcarriers_(subcarriers),
      capacity_se_(capacity_se),
      rate_se_(rate_se) {
    if (!(bandwidth_hz > 0.0) || !std::isfinite(bandwidth_hz))
        throw config_error("RateProfile: bandwidth_hz must be positive");
    if (subcarriers < 1) throw config_error("RateProfile: subcarriers must be >= 1");
    if (!(rate_se > 0.0) || !std::isfinite(rate_se))
        throw config_error("RateProfile: rate_se must be positive");
    if (!(capacity_se > rate_se) || !std::isfinite(capacity_se))
        throw config_error("RateProfile: capacity_se must exceed rate_se");
}

Probability Probability::clamped(double raw_value) {
    Probability p;
    p.raw = raw_value;
    // NaN (e.g. 0*inf in a degenerate bound) is treated as fully degenerate.
    if (std::isnan(raw_value)) {
        p.value = kMin;
        return p;
    }
    p.value = std::clamp(raw_value, kMin, kMax);
    return p;
}

double q_function(double x) {
    if (!std::isfinite(x)) throw std::domain_error("q_function: non-finite input");
    return 0.5 * std::erfc(x / kSqrt2);
}

double q_inverse(double p) {
    if (!(p > 0.0 && p < 1.0)) throw std::domain_error("q_inverse: p must be in (0,1)");
    // Q(x) = 1 - Phi(x), so Q^{-1}(p) = Phi^{-1}(1-p) = -Phi^{-1}(p).
    double x = -inverse_normal_cdf_approx(p);
    // Newton polish on Q(x) - p = 0; Q'(x) = -pdf(x).
    for (int i = 0; i < 3; ++i) {
        double err = q_function(x) - p;
        double deriv = normal_pdf(x);
        if (deriv <= 0.0) break;
        double step = err / deriv;
        x += step;
        if (std::abs(step) < 1e-15 * (1.0 + std::abs(x))) break;
    }
    return x;
}

double phi(double x_seconds, const RateProfile& profile) {
    if (!(x_seconds > 0.0) || !std::isfinite(x_seconds))
        throw std::domain_error("phi: x must be positive and finite");
    double n = profile.symbol_rate() * x_seconds;  // blocklength B*N*x
    double gap = profile.capacity_se() - profile.rate_se();
    return (gap * n + 0.5 * std::log2(n)) / (kLog2E * std::sqrt(n));
}

double phi_inverse(double y, const RateProfile& profile) {
    if (!std::isfinite(y)) throw std::domain_error("phi_inverse: non-finite target");

    const double x0 = 1.0 / profile.symbol_rate();  // blocklength 1
    double lo = x0;
    double hi = x0;
    double f0 = phi(x0, profile);

    // Expand geometrically until the target is bracketed. phi is unbounded
    // both ways (log term below blocklength 1, linear term above). A
    // non-finite phi value means the blocklength overflowed.
    if (f0 < y) {
        for (;;) {
            double p = phi(hi, profile);
            if (!std::isfinite(p) || !std::isfinite(hi)) {
                std::ostringstream os;
                os << "phi_inverse: bracket expansion overflow for y=" << y;
                throw numeric_error(os.str());
            }
            if (p >= y) break;
            lo = hi;
            hi *= 4.0;
        }
    } else {
        for (;;) {
            double p = phi(lo, profile);
            if (!std::isfinite(p) || lo < 1e-300) {
                std::ostringstream os;
                os << "phi_inverse: bracket expansion underflow for y=" << y;
                throw numeric_error(os.str());
            }
            if (p <= y) break;
            hi = lo;
            lo /= 4.0;
        }
    }

    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        if (phi(mid, profile) < y)
            lo = mid;
        else
            hi = mid;
        if (hi - lo <= 1e-12 * hi) return 0.5 * (lo + hi);
    }
    std::ostringstream os;
    os << "phi_inverse: no convergence after 200 bisections, y=" << y << " bracket=[" << lo << ","
       << hi << "]";
    throw numeric_error(os.str());
}

double regularized_lower_gamma(double a, double x) {
    if (!(a > 0.0) || !std::isfinite(a))
        throw std::domain_error("regularized_lower_gamma: a must be positive");
    if (!(x >= 0.0) || !std::isfinite(x))
        throw std::domain_error("regularized_lower_gamma: x must be nonnegative");
    if (x == 0.0) return 0.0;
    double p = (x < a + 1.0) ? lower_gamma_series(a, x) : 1.0 - upper_gamma_cf(a, x);
    return std::clamp(p, 0.0, 1.0);
}

std::pair<double, double> gamma_params_from_shadowed_rician(double b0, double m0, double omega) {
    if (!(b0 > 0.0) || !(m0 > 0.0) || !(omega > 0.0))
        throw std::domain_error("gamma_params_from_shadowed_rician: inputs must be positive");
    double s = 2.0 * b0 + omega;
    double alpha = m0 * s * s / (4.0 * m0 * b0 * b0 + 4.0 * m0 * b0 * omega + omega * omega);
    double beta = s / alpha;
    return {alpha, beta};
}

}  // namespace didsim

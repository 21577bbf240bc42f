#pragma once

namespace ecfb {

// Moment of the faded SNR under a unit-mean exponential fade:
//   value = integral of (1+snr*z)^order * e^{-z} dz over [0, inf)
//         = e^{1/snr} * snr^order * Gamma(order+1, 1/snr).
// log_value is kept alongside because e^{1/snr} alone overflows for small snr
// while the product stays moderate.
struct ScaledMoment {
    double order;
    double snr;
    double value;
    double log_value;
};

// Gaussian tail probability Q(x) = P(Z > x), Z standard normal.
double gaussian_q(double x);

// Inverse of gaussian_q on (0,1).
double gaussian_q_inv(double p);

// d/deps of gaussian_q_inv: -sqrt(2*pi) * exp(Qinv(eps)^2 / 2). Always negative.
double q_inv_derivative(double eps);

// Upper incomplete gamma Gamma(a, x) = integral of t^(a-1) e^(-t) dt over [x, inf),
// for any real order a (negative non-integer included) and x > 0.
double upper_inc_gamma(double a, double x);

// log of the above; Gamma(a,x) > 0 for all real a when x > 0, so the log is real.
double ln_upper_inc_gamma(double a, double x);

ScaledMoment rayleigh_moment(double order, double snr);

}  // namespace ecfb

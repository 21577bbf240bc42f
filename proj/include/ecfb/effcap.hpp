#pragma once

namespace ecfb {

// Constants shared by every form of the psi integrand at one evaluation point:
//   d     = -theta * blocklength / ln 2          (exponent on 1 + sinr*z)
//   delta = theta * sqrt(blocklength) * log2(e)  (dispersion weight)
//   c     = delta * Qinv(eps)
struct ECParams {
    double c;
    double d;
    double delta;
    double sinr;
};

ECParams make_ec_params(double sinr, double theta, int blocklength, double eps);

// psi = E_z[ eps + (1-eps) * exp(-theta*blocklength*r(z)) ] with r the
// finite-blocklength rate and z a unit-mean exponential fade. Adaptive
// quadrature on [0, 45] plus the analytic tail; absolute accuracy ~1e-12.
// This is the reference the approximate forms are judged against.
double psi_exact(double sinr, double theta, int blocklength, double eps);

// Same integral with exp(c*x) replaced by its second-order expansion and x by
// its leading Laurent form. Separates expansion error (vs psi_exact) from
// algebra error (vs psi_closed, which it must match to ~1e-9).
double psi_taylor(double sinr, double theta, int blocklength, double eps);

// Closed form of the expanded integral via incomplete-gamma moments:
//   psi = eps + (1-eps) * [ M_d + c*(M_d - G/2) + (c^2/2)*(M_d - G) ],
// M_a = rayleigh_moment(a, sinr), G = rayleigh_moment(d-2, sinr).
double psi_closed(double sinr, double theta, int blocklength, double eps);

// EC = -ln(psi) / (blocklength * theta), valid for psi in (0, 1].
double effective_capacity(double psi, double theta, int blocklength);

// Shannon-rate (blocklength -> infinity) effective capacity:
// -ln(M_d) / (blocklength * theta), computed from the log moment directly.
double ec_infinite_blocklength(double sinr, double theta, int blocklength);

// d(psi_closed)/d(eps), analytic.
double psi_deps(double sinr, double theta, int blocklength, double eps);

// d(psi_exact)/d(eps) by differentiating under the integral sign.
double psi_exact_deps(double sinr, double theta, int blocklength, double eps);

}  // namespace ecfb

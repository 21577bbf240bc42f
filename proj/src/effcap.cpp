#include "ecfb/effcap.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <vector>

#include "ecfb/error.hpp"
#include "ecfb/quadrature.hpp"
#include "ecfb/specialfn.hpp"

namespace ecfb {

namespace {

constexpr double kLn2 = 0.6931471805599453;
constexpr double kLog2E = 1.4426950408889634;
constexpr double kZmax = 45.0;  // exp(-45) ~ 2.9e-20, far below every tolerance here

void check_domain(double sinr, double theta, int blocklength, double eps, const char* who) {
    char buf[128];
    if (!(sinr > 0.0) || !std::isfinite(sinr)) {
        std::snprintf(buf, sizeof buf, "%s: sinr must be positive and finite", who);
        throw std::domain_error(buf);
    }
    if (!(theta > 0.0) || !std::isfinite(theta)) {
        std::snprintf(buf, sizeof buf, "%s: theta must be positive and finite", who);
        throw std::domain_error(buf);
    }
    if (blocklength < 1) {
        std::snprintf(buf, sizeof buf, "%s: blocklength must be >= 1", who);
        throw std::domain_error(buf);
    }
    if (!(eps > 0.0 && eps < 1.0)) {
        std::snprintf(buf, sizeof buf, "%s: eps must lie in (0,1)", who);
        throw std::domain_error(buf);
    }
}

// Panel edges for the fade integrals. The integrand has a boundary layer of
// width ~1/(|d|*sinr) at z = 0 when theta*blocklength is large, so seed panels
// geometrically from that scale and let the adaptive rule finish the job.
std::vector<double> panel_edges(double d, double sinr) {
    std::vector<double> edges{0.0};
    double h = std::min(0.5, 1.0 / (1.0 + std::fabs(d) * sinr));
    for (double v = h; v < kZmax; v *= 2.0) edges.push_back(v);
    edges.push_back(kZmax);
    return edges;
}

template <class F>
double integrate_panels(F&& f, double d, double sinr) {
    auto edges = panel_edges(d, sinr);
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i)
        total += integrate(f, edges[i], edges[i + 1], 1e-13, 5e-13).value;
    return total;
}

}  // namespace

ECParams make_ec_params(double sinr, double theta, int blocklength, double eps) {
    check_domain(sinr, theta, blocklength, eps, "make_ec_params");
    double tf = blocklength;
    double d = -theta * tf / kLn2;
    double delta = theta * std::sqrt(tf) * kLog2E;
    double c = delta * gaussian_q_inv(eps);
    return {c, d, delta, sinr};
}

double psi_exact(double sinr, double theta, int blocklength, double eps) {
    ECParams p = make_ec_params(sinr, theta, blocklength, eps);
    // exp(-theta*Tf*r(z)) = exp(d*log1p(sinr*z) + c*x(z)) with
    // x = sqrt(1 - (1+sinr*z)^-2); the combined exponent avoids spurious
    // overflow where the two factors are individually extreme.
    auto f = [&](double z) {
        double sz = sinr * z;
        double w = 1.0 + sz;
        double x = std::sqrt(sz * (2.0 + sz)) / w;
        double e = std::exp(p.d * std::log1p(sz) + p.c * x);
        return (eps + (1.0 - eps) * e) * std::exp(-z);
    };
    double val = integrate_panels(f, p.d, sinr);
    return val + eps * std::exp(-kZmax);
}

double psi_taylor(double sinr, double theta, int blocklength, double eps) {
    ECParams p = make_ec_params(sinr, theta, blocklength, eps);
    double c = p.c;
    // exp(c*x) -> 1 + c*x + (c*x)^2/2 with x -> 1 - w2/2 and x^2 -> 1 - w2,
    // w2 = (1+sinr*z)^-2 (the w2^2/4 remainder is dropped, matching the
    // closed form exactly). Tail beyond kZmax is negligible: the base factor
    // (1+sinr*z)^d only shrinks the e^{-z} envelope.
    auto f = [&](double z) {
        double sz = sinr * z;
        double w = 1.0 + sz;
        double w2 = 1.0 / (w * w);
        double base = std::exp(p.d * std::log1p(sz));
        double poly = 1.0 + c * (1.0 - 0.5 * w2) + 0.5 * c * c * (1.0 - w2);
        return base * poly * std::exp(-z);
    };
    double val = integrate_panels(f, p.d, sinr);
    return eps + (1.0 - eps) * val;
}

double psi_closed(double sinr, double theta, int blocklength, double eps) {
    ECParams p = make_ec_params(sinr, theta, blocklength, eps);
    double c = p.c;
    double md = rayleigh_moment(p.d, sinr).value;
    double g = rayleigh_moment(p.d - 2.0, sinr).value;
    double j = md + c * (md - 0.5 * g) + 0.5 * c * c * (md - g);
    double psi = eps + (1.0 - eps) * j;
    if (!(psi > 0.0) || !std::isfinite(psi)) {
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "psi_closed: expansion broke down (psi=%g at sinr=%g, theta=%g, "
                      "Tf=%d, eps=%g)",
                      psi, sinr, theta, blocklength, eps);
        throw numeric_error(buf);
    }
    return psi;
}

double effective_capacity(double psi, double theta, int blocklength) {
    if (!(theta > 0.0) || blocklength < 1)
        throw std::domain_error("effective_capacity: theta and blocklength must be positive");
    if (!(psi > 0.0 && psi <= 1.0)) {
        char buf[128];
        std::snprintf(buf, sizeof buf,
                      "effective_capacity: psi=%g outside (0,1] (theta=%g, blocklength=%d)",
                      psi, theta, blocklength);
        throw std::domain_error(buf);
    }
    return -std::log(psi) / (static_cast<double>(blocklength) * theta);
}

double ec_infinite_blocklength(double sinr, double theta, int blocklength) {
    // reuse the domain checks with a placeholder eps; eps plays no role here
    check_domain(sinr, theta, blocklength, 0.5, "ec_infinite_blocklength");
    double tf = blocklength;
    double d = -theta * tf / kLn2;
    return -rayleigh_moment(d, sinr).log_value / (tf * theta);
}

double psi_deps(double sinr, double theta, int blocklength, double eps) {
    ECParams p = make_ec_params(sinr, theta, blocklength, eps);
    double c = p.c;
    double md = rayleigh_moment(p.d, sinr).value;
    double g = rayleigh_moment(p.d - 2.0, sinr).value;
    double j2 = md - 0.5 * g;
    double j3 = md - g;
    double j = md + c * j2 + 0.5 * c * c * j3;
    return 1.0 + (1.0 - eps) * p.delta * q_inv_derivative(eps) * (j2 + c * j3) - j;
}

double psi_exact_deps(double sinr, double theta, int blocklength, double eps) {
    ECParams p = make_ec_params(sinr, theta, blocklength, eps);
    double qd = q_inv_derivative(eps);
    auto f = [&](double z) {
        double sz = sinr * z;
        double w = 1.0 + sz;
        double x = std::sqrt(sz * (2.0 + sz)) / w;
        double e = std::exp(p.d * std::log1p(sz) + p.c * x);
        return (1.0 - e * (1.0 - (1.0 - eps) * p.delta * x * qd)) * std::exp(-z);
    };
    double val = integrate_panels(f, p.d, sinr);
    return val + std::exp(-kZmax);  // the "1" term's tail; the damped parts are negligible
}

}  // namespace ecfb

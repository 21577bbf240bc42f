#include "ecfb/optimize.hpp"

#include <cmath>
#include <stdexcept>

namespace ecfb {

double psi_value(PsiModel model, double sinr, double theta, int blocklength, double eps) {
    return model == PsiModel::closed_form ? psi_closed(sinr, theta, blocklength, eps)
                                          : psi_exact(sinr, theta, blocklength, eps);
}

double psi_eps_derivative(PsiModel model, double sinr, double theta, int blocklength,
                          double eps) {
    return model == PsiModel::closed_form ? psi_deps(sinr, theta, blocklength, eps)
                                          : psi_exact_deps(sinr, theta, blocklength, eps);
}

namespace detail {

OptResult optimal_eps_tol(double sinr, double theta, int blocklength, PsiModel model,
                          double log10_tol) {
    // psi is convex in eps with a unique interior minimum; search on log10(eps)
    // because the minimizer ranges over many decades.
    const double gr = 0.6180339887498949;
    double a = -12.0;
    double b = std::log10(0.5);
    auto f = [&](double l) {
        return psi_value(model, sinr, theta, blocklength, std::pow(10.0, l));
    };
    double c1 = b - gr * (b - a);
    double c2 = a + gr * (b - a);
    double f1 = f(c1);
    double f2 = f(c2);
    int it = 0;
    while ((b - a) > log10_tol && it < 200) {
        if (f1 < f2) {
            b = c2;
            c2 = c1;
            f2 = f1;
            c1 = b - gr * (b - a);
            f1 = f(c1);
        } else {
            a = c1;
            c1 = c2;
            f1 = f2;
            c2 = a + gr * (b - a);
            f2 = f(c2);
        }
        ++it;
    }
    double eps = std::pow(10.0, 0.5 * (a + b));
    double psi = psi_value(model, sinr, theta, blocklength, eps);
    return {eps, effective_capacity(psi, theta, blocklength), false, it};
}

}  // namespace detail

OptResult optimal_eps(double sinr, double theta, int blocklength, PsiModel model) {
    // log bracket 1e-11 wide puts the eps uncertainty below 1.2e-11 even at
    // the upper end eps = 0.5
    return detail::optimal_eps_tol(sinr, theta, blocklength, model, 1e-11);
}

OptResult constrained_optimal_eps(double sinr, double theta, int blocklength,
                                  URConstraint constraint, PsiModel model) {
    if (!(constraint.target_eps > 0.0 && constraint.target_eps < 1.0))
        throw std::domain_error("constrained_optimal_eps: target_eps must lie in (0,1)");
    double slope = psi_eps_derivative(model, sinr, theta, blocklength, constraint.target_eps);
    if (slope < 0.0) {
        // still descending at the bound: the reliability target binds
        double psi = psi_value(model, sinr, theta, blocklength, constraint.target_eps);
        return {constraint.target_eps, effective_capacity(psi, theta, blocklength), true, 0};
    }
    OptResult r = optimal_eps(sinr, theta, blocklength, model);
    if (r.eps_star > constraint.target_eps) {
        // convexity puts the minimizer at or below the target when the slope
        // there is non-negative; clamp in case the search landed a hair above
        r.eps_star = constraint.target_eps;
        r.ec_value = effective_capacity(
            psi_value(model, sinr, theta, blocklength, r.eps_star), theta, blocklength);
        r.constrained = true;
    }
    return r;
}

double ec_sacrifice_ratio(double sinr, double theta, int blocklength,
                          URConstraint constraint, PsiModel model) {
    OptResult op = constrained_optimal_eps(sinr, theta, blocklength, constraint, model);
    if (!op.constrained) return 1.0;
    OptResult best = optimal_eps(sinr, theta, blocklength, model);
    return op.ec_value / best.ec_value;
}

}  // namespace ecfb

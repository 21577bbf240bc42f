#pragma once

#include "ecfb/effcap.hpp"

namespace ecfb {

// Which psi evaluation backs an optimization. The quadrature form is the
// accurate default; the closed form is cheaper but carries the expansion error
// of psi_closed (20-30% on psi in dense-interference regimes), which shifts
// every anchored quantity. See the effcap tests for the measured envelopes.
enum class PsiModel { quadrature, closed_form };

double psi_value(PsiModel model, double sinr, double theta, int blocklength, double eps);
double psi_eps_derivative(PsiModel model, double sinr, double theta, int blocklength,
                          double eps);

// Reliability target for the constrained optimizer. `active` mirrors whether
// the bound ended up binding (also reported as OptResult.constrained).
struct URConstraint {
    double target_eps;
    bool active = false;
};

struct OptResult {
    double eps_star;
    double ec_value;
    bool constrained;
    int iterations;
};

// Unconstrained maximizer of EC over the error probability: golden-section
// search on log10(eps) over [1e-12, 0.5], eps resolved to better than 1e-10.
OptResult optimal_eps(double sinr, double theta, int blocklength,
                      PsiModel model = PsiModel::quadrature);

// KKT gate: if psi is still decreasing at target_eps the bound binds and
// eps_star = target_eps; otherwise the interior minimizer applies unchanged.
// Never returns eps_star above the target.
OptResult constrained_optimal_eps(double sinr, double theta, int blocklength,
                                  URConstraint constraint,
                                  PsiModel model = PsiModel::quadrature);

// operational EC / maximum EC; exactly 1 when the constraint is inactive.
double ec_sacrifice_ratio(double sinr, double theta, int blocklength,
                          URConstraint constraint, PsiModel model = PsiModel::quadrature);

namespace detail {
// Same search at caller-chosen log10 bracket tolerance. Root solvers and grid
// sweeps use a relaxed tolerance: EC is flat to second order at the optimum,
// so a 3e-7-wide log bracket already fixes EC to ~1e-12 relative.
OptResult optimal_eps_tol(double sinr, double theta, int blocklength, PsiModel model,
                          double log10_tol);
}  // namespace detail

}  // namespace ecfb

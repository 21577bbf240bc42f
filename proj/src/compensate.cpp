#include "ecfb/compensate.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "ecfb/error.hpp"

namespace ecfb {

namespace {

constexpr double kTightTol = 1e-11;  // public-result eps bracket (log10)
constexpr double kTrialTol = 3e-7;   // inner root-solve trials; EC is flat at the optimum
constexpr double kThetaMin = 1e-6;

double ec_max_at(double sinr, double theta, int blocklength, PsiModel model, double tol) {
    return detail::optimal_eps_tol(sinr, theta, blocklength, model, tol).ec_value;
}

// Find t in (0, theta] with EC(sinr_eff, t) = target. EC decreases in t, so the
// bracket test is one sign check at each end. Returns theta exactly when no
// degradation is needed (the endpoint cases rely on that).
double solve_theta_root(double sinr_eff, double theta, int blocklength, double target,
                        PsiModel model, const char* who) {
    auto g = [&](double t) {
        return ec_max_at(sinr_eff, t, blocklength, model, kTrialTol) - target;
    };
    double slack = 1e-12 * std::max(1.0, std::fabs(target));
    if (g(theta) >= -slack) return theta;
    if (theta <= kThetaMin) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "%s: theta=%g leaves no room below the %g floor", who,
                      theta, kThetaMin);
        throw numeric_error(buf);
    }
    if (g(kThetaMin) < 0.0) {
        char buf[200];
        std::snprintf(buf, sizeof buf,
                      "%s: infeasible, EC at sinr=%g stays below the target %g even at "
                      "theta=%g",
                      who, sinr_eff, target, kThetaMin);
        throw numeric_error(buf);
    }
    double lo = kThetaMin, hi = theta;
    for (int i = 0; i < 60 && (hi - lo) > 1e-15 * theta; ++i) {
        double mid = 0.5 * (lo + hi);
        if (g(mid) >= 0.0)
            lo = mid;
        else
            hi = mid;
    }
    double root = 0.5 * (lo + hi);
    double resid = ec_max_at(sinr_eff, root, blocklength, model, kTightTol) - target;
    if (std::fabs(resid) > 1e-8) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "%s: root residual %.3e exceeds 1e-8 at theta=%.12g",
                      who, resid, root);
        throw numeric_error(buf);
    }
    return root;
}

struct JointContext {
    double rho, rho_i, rho_s, ec_i, ec_free;
    double theta;
    int tf;
    PsiModel model;
};

JointContext make_joint_context(const NetworkConfig& cfg, PsiModel model) {
    cfg.validate();
    if (cfg.n_nodes < 2)
        throw std::domain_error("joint compensation requires n_nodes >= 2");
    JointContext c;
    c.rho = cfg.snr;
    c.rho_i = sinr_collision(cfg);
    c.rho_s = others_sinr_after_boost(cfg);
    c.theta = cfg.delay_exponent;
    c.tf = cfg.blocklength;
    c.model = model;
    c.ec_i = ec_max_at(c.rho_i, c.theta, c.tf, model, kTightTol);
    c.ec_free = ec_max_at(c.rho, c.theta, c.tf, model, kTightTol);
    return c;
}

double boosted_snr_for(const JointContext& c, double rho_s_op, int n_nodes) {
    return c.rho / rho_s_op - 1.0 - c.rho * (n_nodes - 2);
}

JointPlan joint_plan_in_context(const JointContext& c, int n_nodes, double rho_s_op,
                                std::pair<double, double> priorities, bool tight) {
    JointPlan plan;
    plan.rho_s_op = rho_s_op;
    plan.rho_c_op = boosted_snr_for(c, rho_s_op, n_nodes);
    double tol = tight ? kTightTol : kTrialTol;
    // at rho_s_op == rho_i this is the same call that produced ec_i, so the
    // ratio is exactly 1 at that endpoint
    plan.alpha_c_op = ec_max_at(rho_s_op, c.theta, c.tf, c.model, tol) / c.ec_i;
    double sinr_eff = plan.rho_c_op / (1.0 + c.rho * (n_nodes - 1));
    plan.theta2 = solve_theta_root(sinr_eff, c.theta, c.tf, c.ec_free, c.model,
                                   "joint_plan");
    plan.eta = priorities.first * plan.alpha_c_op + priorities.second * plan.theta2;
    plan.priorities = priorities;
    return plan;
}

void check_priorities(std::pair<double, double> priorities) {
    if (!(priorities.first >= 0.0) || !(priorities.second >= 0.0))
        throw std::domain_error("priorities must both be >= 0");
}

}  // namespace

double power_control_snr(const NetworkConfig& cfg) {
    cfg.validate();
    return cfg.snr * (1.0 + cfg.snr * (cfg.n_nodes - 1));
}

double others_sinr_after_boost(const NetworkConfig& cfg) {
    cfg.validate();
    if (cfg.n_nodes < 2)
        throw std::domain_error("others_sinr_after_boost: n_nodes must be >= 2");
    double rho = cfg.snr;
    double n1 = cfg.n_nodes - 1;
    double direct = rho / (1.0 + rho * (rho + 1.0) * n1);
    double grouped = rho / (1.0 + power_control_snr(cfg) + rho * (cfg.n_nodes - 2));
    if (std::fabs(direct - grouped) > 1e-14 * std::max(direct, grouped))
        throw numeric_error("others_sinr_after_boost: equivalent algebraic forms disagree");
    return direct;
}

CompensationReport loss_factors(const NetworkConfig& cfg,
                                std::optional<URConstraint> constraint, PsiModel model) {
    cfg.validate();
    auto ec_at = [&](double sinr) {
        if (constraint)
            return constrained_optimal_eps(sinr, cfg.delay_exponent, cfg.blocklength,
                                           *constraint, model)
                .ec_value;
        return optimal_eps(sinr, cfg.delay_exponent, cfg.blocklength, model).ec_value;
    };
    CompensationReport rep{};
    rep.rho_c = power_control_snr(cfg);
    if (cfg.n_nodes == 1) {
        // no interferers: every factor degenerates to 1
        rep.rho_s = cfg.snr;
        rep.alpha = rep.alpha_c = rep.gamma_c = rep.alpha_t = 1.0;
        return rep;
    }
    rep.rho_s = others_sinr_after_boost(cfg);
    double ec_free = ec_at(cfg.snr);
    double ec_coll = ec_at(sinr_collision(cfg));
    double ec_supp = ec_at(rep.rho_s);
    rep.alpha = ec_coll / ec_free;
    rep.alpha_c = ec_supp / ec_coll;
    rep.gamma_c = 1.0 / rep.alpha;
    rep.alpha_t = rep.alpha * rep.alpha_c;
    return rep;
}

bool verify_power_restoration(const NetworkConfig& cfg, PsiModel model) {
    cfg.validate();
    double denom = 1.0 + cfg.snr * (cfg.n_nodes - 1);
    double boosted_sinr = power_control_snr(cfg) / denom;
    double ec_boosted =
        optimal_eps(boosted_sinr, cfg.delay_exponent, cfg.blocklength, model).ec_value;
    double ec_clean = optimal_eps(cfg.snr, cfg.delay_exponent, cfg.blocklength, model).ec_value;
    return std::fabs(ec_boosted - ec_clean) < 1e-12;
}

double graceful_theta(const NetworkConfig& cfg, PsiModel model) {
    cfg.validate();
    if (cfg.n_nodes == 1) return cfg.delay_exponent;
    double target = ec_max_at(cfg.snr, cfg.delay_exponent, cfg.blocklength, model, kTightTol);
    return solve_theta_root(sinr_collision(cfg), cfg.delay_exponent, cfg.blocklength, target,
                            model, "graceful_theta");
}

JointPlan joint_plan(const NetworkConfig& cfg, double rho_s_op,
                     std::pair<double, double> priorities, PsiModel model) {
    check_priorities(priorities);
    JointContext c = make_joint_context(cfg, model);
    double slack = 1e-12 * c.rho_i;
    if (!(rho_s_op >= c.rho_s - slack && rho_s_op <= c.rho_i + slack)) {
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "joint_plan: rho_s_op=%g outside [rho_s=%g, rho_i=%g]", rho_s_op,
                      c.rho_s, c.rho_i);
        throw std::domain_error(buf);
    }
    rho_s_op = std::min(std::max(rho_s_op, c.rho_s), c.rho_i);
    return joint_plan_in_context(c, cfg.n_nodes, rho_s_op, priorities, true);
}

JointPlan optimize_joint(const NetworkConfig& cfg, std::pair<double, double> priorities,
                         PsiModel model) {
    check_priorities(priorities);
    JointContext c = make_joint_context(cfg, model);
    const int grid_n = 241;
    auto eta_at = [&](double rso) {
        return joint_plan_in_context(c, cfg.n_nodes, rso, priorities, false).eta;
    };
    double span = c.rho_i - c.rho_s;
    int best_i = 0;
    double best_eta = -1.0;
    for (int i = 0; i < grid_n; ++i) {
        double rso = c.rho_s + span * i / (grid_n - 1);
        double eta = eta_at(rso);
        if (eta > best_eta) {
            best_eta = eta;
            best_i = i;
        }
    }
    // golden refinement of the maximum inside the bracketing grid cells
    double a = c.rho_s + span * std::max(0, best_i - 1) / (grid_n - 1);
    double b = c.rho_s + span * std::min(grid_n - 1, best_i + 1) / (grid_n - 1);
    const double gr = 0.6180339887498949;
    double c1 = b - gr * (b - a);
    double c2 = a + gr * (b - a);
    double f1 = eta_at(c1);
    double f2 = eta_at(c2);
    for (int i = 0; i < 32; ++i) {
        if (f1 > f2) {
            b = c2;
            c2 = c1;
            f2 = f1;
            c1 = b - gr * (b - a);
            f1 = eta_at(c1);
        } else {
            a = c1;
            c1 = c2;
            f1 = f2;
            c2 = a + gr * (b - a);
            f2 = eta_at(c2);
        }
    }
    return joint_plan_in_context(c, cfg.n_nodes, 0.5 * (a + b), priorities, true);
}

}  // namespace ecfb

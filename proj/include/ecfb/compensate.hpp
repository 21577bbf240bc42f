#pragma once

#include <optional>
#include <utility>

#include "ecfb/channel.hpp"
#include "ecfb/optimize.hpp"

namespace ecfb {

// Bookkeeping for full power-control compensation of a single node.
// Every EC entering a factor is maximized over its own error probability.
struct CompensationReport {
    double rho_c;    // compensating node's boosted SNR
    double rho_s;    // SINR the remaining nodes see after the boost
    double alpha;    // collision loss: EC under collision / EC interference-free
    double alpha_c;  // compensation loss the others pay: EC at rho_s / EC at rho_i
    double gamma_c;  // compensation gain of the boosted node, 1/alpha
    double alpha_t;  // total loss alpha * alpha_c
};

// One operating point of the mixed strategy: partial power boost (pinning the
// others' SINR at rho_s_op) plus graceful delay-exponent degradation to theta2.
struct JointPlan {
    double rho_s_op;
    double rho_c_op;
    double alpha_c_op;
    double theta2;
    double eta;  // priorities.first * alpha_c_op + priorities.second * theta2
    std::pair<double, double> priorities;
};

// SNR a node needs so that its post-boost SINR equals its original snr:
// snr * (1 + snr*(N-1)).
double power_control_snr(const NetworkConfig& cfg);

// SINR of each non-boosting node once one node applies power_control_snr:
// snr / (1 + snr*(snr+1)*(N-1)). Requires N >= 2. The equivalent grouping
// snr / (1 + rho_c + snr*(N-2)) is checked against it internally.
double others_sinr_after_boost(const NetworkConfig& cfg);

// All four loss/gain factors. With a URConstraint every EC uses the
// constrained optimizer; default is unconstrained. For N = 1 the collision
// factors are identically 1 and rho_s degenerates to snr.
CompensationReport loss_factors(const NetworkConfig& cfg,
                                std::optional<URConstraint> constraint = std::nullopt,
                                PsiModel model = PsiModel::quadrature);

// Check that the boosted node's EC equals the interference-free EC at snr
// (they match by construction; tolerance 1e-12).
bool verify_power_restoration(const NetworkConfig& cfg,
                              PsiModel model = PsiModel::quadrature);

// Delay-exponent relaxation that restores the interference-free EC:
// solves EC(rho_i, theta_i) = EC(snr, theta) for theta_i in (0, theta],
// with the error probability re-optimized at every trial theta.
// Returns theta unchanged for N = 1; throws numeric_error if even theta_i ->
// 0+ cannot close the gap.
double graceful_theta(const NetworkConfig& cfg, PsiModel model = PsiModel::quadrature);

// Evaluate the mixed strategy at a chosen rho_s_op in [rho_s, rho_i]:
// rho_c_op = snr/rho_s_op - 1 - snr*(N-2), alpha_c_op the others' EC ratio,
// theta2 from the same root solve as graceful_theta applied to the partially
// boosted node.
JointPlan joint_plan(const NetworkConfig& cfg, double rho_s_op,
                     std::pair<double, double> priorities,
                     PsiModel model = PsiModel::quadrature);

// Maximize eta over rho_s_op: dense grid (241 points) plus golden-section
// refinement around the grid argmax.
JointPlan optimize_joint(const NetworkConfig& cfg, std::pair<double, double> priorities,
                         PsiModel model = PsiModel::quadrature);

}  // namespace ecfb

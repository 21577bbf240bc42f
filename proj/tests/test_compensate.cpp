#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "ecfb/compensate.hpp"

using namespace ecfb;

TEST_CASE("full-compensation power level") {
    CHECK(power_control_snr(NetworkConfig{3, 0.5, 1000, 0.01}) == 1.0);
    CHECK(power_control_snr(NetworkConfig{1, 7.0, 1000, 0.01}) == 7.0);
    // rho_c / (1 + rho (N-1)) restores the clean snr by construction
    NetworkConfig cfg{12, 1.7, 1000, 0.02};
    double rho_c = power_control_snr(cfg);
    CHECK(rho_c / (1.0 + cfg.snr * (cfg.n_nodes - 1)) ==
          doctest::Approx(cfg.snr).epsilon(1e-15));
}

TEST_CASE("sinr seen by the others while one node boosts") {
    NetworkConfig cfg{5, 1.0, 1000, 0.1};
    CHECK(others_sinr_after_boost(cfg) == doctest::Approx(1.0 / 9.0).epsilon(1e-15));
    CHECK(others_sinr_after_boost(cfg) < sinr_collision(cfg));
    CHECK_THROWS_AS(others_sinr_after_boost(NetworkConfig{1, 1.0, 1000, 0.1}),
                    std::domain_error);
}

TEST_CASE("loss factor report") {
    NetworkConfig cfg{5, 1.0, 1000, 0.1};
    CompensationReport rep = loss_factors(cfg);
    CHECK(rep.rho_c == power_control_snr(cfg));
    CHECK(rep.rho_s == others_sinr_after_boost(cfg));
    CHECK(rep.alpha > 0.0);
    CHECK(rep.alpha < 1.0);
    CHECK(rep.alpha_c > 0.0);
    CHECK(rep.alpha_c < 1.0);
    CHECK(rep.gamma_c * rep.alpha == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(rep.alpha_t == doctest::Approx(rep.alpha * rep.alpha_c).epsilon(1e-15));
    CHECK(verify_power_restoration(cfg));
}

TEST_CASE("loss factors under a reliability target") {
    NetworkConfig cfg{5, 1.0, 1000, 0.1};
    CompensationReport rep = loss_factors(cfg, URConstraint{1e-3});
    CHECK(rep.alpha > 0.0);
    CHECK(rep.alpha <= 1.0);
    CHECK(rep.alpha_c > 0.0);
    CHECK(rep.alpha_c <= 1.0);
    CHECK(rep.gamma_c * rep.alpha == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("single node network degenerates cleanly") {
    NetworkConfig cfg{1, 2.0, 1000, 0.05};
    CompensationReport rep = loss_factors(cfg);
    CHECK(rep.alpha == 1.0);
    CHECK(rep.alpha_c == 1.0);
    CHECK(rep.gamma_c == 1.0);
    CHECK(rep.alpha_t == 1.0);
    CHECK(rep.rho_s == cfg.snr);
    CHECK(graceful_theta(cfg) == cfg.delay_exponent);
}

TEST_CASE("graceful theta restores the interference-free EC") {
    NetworkConfig cfg{5, 1.0, 1000, 0.05};
    double theta_i = graceful_theta(cfg);
    CHECK(theta_i > 0.0);
    CHECK(theta_i < cfg.delay_exponent);
    double ec_free = optimal_eps(cfg.snr, cfg.delay_exponent, cfg.blocklength).ec_value;
    double ec_relaxed =
        optimal_eps(sinr_collision(cfg), theta_i, cfg.blocklength).ec_value;
    CHECK(std::fabs(ec_relaxed - ec_free) < 1e-8);
}

TEST_CASE("joint plan endpoints") {
    NetworkConfig cfg{5, 1.0, 1000, 0.1};
    double rho_i = sinr_collision(cfg);
    double rho_s = others_sinr_after_boost(cfg);

    JointPlan at_top = joint_plan(cfg, rho_i, {1.0, 1.0});
    CHECK(at_top.alpha_c_op == 1.0);  // nobody is asked to back off
    CHECK(at_top.theta2 == doctest::Approx(graceful_theta(cfg)).epsilon(1e-9));
    // at the top the boost buys back exactly the collision sinr
    CHECK(at_top.rho_c_op / (1.0 + cfg.snr * (cfg.n_nodes - 1)) ==
          doctest::Approx(rho_i).epsilon(1e-12));

    JointPlan at_bottom = joint_plan(cfg, rho_s, {1.0, 1.0});
    CHECK(at_bottom.theta2 == cfg.delay_exponent);  // full restore, exact by the root guard
    CHECK(at_bottom.rho_c_op == doctest::Approx(power_control_snr(cfg)).epsilon(1e-12));
    CHECK(at_bottom.alpha_c_op < at_top.alpha_c_op);

    CHECK(at_top.eta == doctest::Approx(at_top.priorities.first * at_top.alpha_c_op +
                                        at_top.priorities.second * at_top.theta2)
                            .epsilon(1e-15));
    CHECK_THROWS_AS(joint_plan(cfg, rho_s * 0.5, {1.0, 1.0}), std::domain_error);
    CHECK_THROWS_AS(joint_plan(cfg, rho_i * 1.5, {1.0, 1.0}), std::domain_error);
    CHECK_THROWS_AS(joint_plan(cfg, rho_i, {-1.0, 1.0}), std::domain_error);
}

TEST_CASE("joint optimizer follows the priority weights") {
    NetworkConfig cfg{5, 1.0, 1000, 0.1};
    double rho_i = sinr_collision(cfg);
    double rho_s = others_sinr_after_boost(cfg);

    // all weight on the bystanders: stay at the collision sinr, no backoff
    JointPlan keep = optimize_joint(cfg, {1.0, 0.0});
    CHECK(keep.rho_s_op == doctest::Approx(rho_i).epsilon(1e-5));
    CHECK(keep.alpha_c_op == doctest::Approx(1.0).epsilon(1e-5));

    // all weight on the delay exponent: push to the full-compensation corner
    JointPlan push = optimize_joint(cfg, {0.0, 1.0});
    CHECK(push.rho_s_op == doctest::Approx(rho_s).epsilon(1e-5));
    CHECK(push.theta2 == doctest::Approx(cfg.delay_exponent).epsilon(1e-6));
}

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "ecfb/optimize.hpp"

using namespace ecfb;

namespace {
std::vector<double> log_grid(double a, double b, int n) {
    std::vector<double> g(n);
    double la = std::log10(a), lb = std::log10(b);
    for (int i = 0; i < n; ++i) g[i] = std::pow(10.0, la + (lb - la) * i / (n - 1));
    return g;
}
}  // namespace

TEST_CASE("golden section finds the grid optimum") {
    struct Pt {
        double sinr, theta;
    };
    for (auto [s, th] : {Pt{2.0 / 9.0, 0.01}, Pt{2.0, 0.1}, Pt{0.2, 0.023}}) {
        OptResult r = optimal_eps(s, th, 1000);
        CHECK(r.iterations > 0);
        CHECK(r.eps_star > 0.0);
        CHECK(r.eps_star < 0.5);
        double best = -1.0, best_e = 0.0;
        for (double e : log_grid(1e-10, 0.5, 2000)) {
            double psi = psi_value(PsiModel::quadrature, s, th, 1000, e);
            if (!(psi > 0.0 && psi <= 1.0)) continue;
            double ec = effective_capacity(psi, th, 1000);
            if (ec > best) {
                best = ec;
                best_e = e;
            }
        }
        CHECK(r.ec_value >= best - 1e-10 * std::fabs(best));
        CHECK(std::fabs(std::log10(r.eps_star) - std::log10(best_e)) < 0.01);
    }
}

TEST_CASE("optimum is a stationary point of psi") {
    OptResult r = optimal_eps(2.0 / 9.0, 0.01, 1000);
    double h = 1e-5 * r.eps_star;
    // derivative changes sign across eps_star
    CHECK(psi_exact_deps(2.0 / 9.0, 0.01, 1000, r.eps_star - 50 * h) < 0.0);
    CHECK(psi_exact_deps(2.0 / 9.0, 0.01, 1000, r.eps_star + 50 * h) > 0.0);
}

TEST_CASE("closed form backend optimizes its own objective") {
    OptResult r = optimal_eps(2.0 / 9.0, 0.01, 1000, PsiModel::closed_form);
    double h = 1e-4 * r.eps_star;
    double at = psi_closed(2.0 / 9.0, 0.01, 1000, r.eps_star);
    CHECK(psi_closed(2.0 / 9.0, 0.01, 1000, r.eps_star - h) >= at - 1e-13);
    CHECK(psi_closed(2.0 / 9.0, 0.01, 1000, r.eps_star + h) >= at - 1e-13);
    // the two backends land on nearby but not identical optima; frozen
    // envelope so a regression in either is caught
    OptResult q = optimal_eps(2.0 / 9.0, 0.01, 1000, PsiModel::quadrature);
    CHECK(std::fabs(r.eps_star - q.eps_star) <= 0.03);
    CHECK(r.eps_star != doctest::Approx(q.eps_star).epsilon(1e-4));
}

TEST_CASE("constraint gate") {
    double s = 2.0 / 9.0, th = 0.01;
    OptResult un = optimal_eps(s, th, 1000);

    OptResult loose = constrained_optimal_eps(s, th, 1000, URConstraint{0.4});
    CHECK_FALSE(loose.constrained);
    CHECK(loose.eps_star == doctest::Approx(un.eps_star).epsilon(1e-9));

    OptResult tight = constrained_optimal_eps(s, th, 1000, URConstraint{1e-3});
    CHECK(tight.constrained);
    CHECK(tight.eps_star == 1e-3);
    CHECK(tight.ec_value < un.ec_value);

    CHECK_THROWS_AS(constrained_optimal_eps(s, th, 1000, URConstraint{0.0}),
                    std::domain_error);
    CHECK_THROWS_AS(constrained_optimal_eps(s, th, 1000, URConstraint{1.0}),
                    std::domain_error);
}

TEST_CASE("constraint gate agrees with brute force on random draws") {
    std::mt19937 rng(1234u);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    for (int draw = 0; draw < 10; ++draw) {
        double s = 0.05 * std::pow(100.0, u01(rng));
        double th = 0.005 * std::pow(60.0, u01(rng));
        double target = std::pow(10.0, -6.0 + 5.0 * u01(rng));
        CAPTURE(s);
        CAPTURE(th);
        CAPTURE(target);
        double brute = -1.0;
        for (double e : log_grid(1e-12, target, 3000)) {
            double psi = psi_value(PsiModel::quadrature, s, th, 1000, e);
            if (psi > 0.0 && psi <= 1.0)
                brute = std::max(brute, effective_capacity(psi, th, 1000));
        }
        OptResult r{};
        try {
            r = constrained_optimal_eps(s, th, 1000, URConstraint{target});
        } catch (const std::exception&) {
            // a refusal is honest exactly when no eps at or below the target
            // admits a positive service rate
            CHECK(brute < 0.0);
            continue;
        }
        CHECK(r.ec_value >= brute - 1e-8 * std::max(1.0, std::fabs(brute)));
        if (r.constrained) CHECK(r.eps_star == target);
    }
}

TEST_CASE("sacrifice ratio") {
    double s = 2.0 / 9.0, th = 0.01;
    CHECK(ec_sacrifice_ratio(s, th, 1000, URConstraint{0.4}) == 1.0);
    double ratio = ec_sacrifice_ratio(s, th, 1000, URConstraint{1e-3});
    CHECK(ratio > 0.0);
    CHECK(ratio < 1.0);
    OptResult un = optimal_eps(s, th, 1000);
    OptResult op = constrained_optimal_eps(s, th, 1000, URConstraint{1e-3});
    CHECK(ratio == doctest::Approx(op.ec_value / un.ec_value).epsilon(1e-12));
}

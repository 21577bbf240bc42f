#include <cmath>
#include <stdexcept>
#include <string>

#include <doctest.h>

#include "ecfb/channel.hpp"

using namespace ecfb;

namespace {
bool throws_naming(const char* field, NetworkConfig cfg) {
    try {
        cfg.validate();
    } catch (const std::domain_error& e) {
        return std::string(e.what()).find(field) != std::string::npos;
    }
    return false;
}
}  // namespace

TEST_CASE("network config validation names the offending field") {
    NetworkConfig ok{3, 0.5, 1000, 0.01};
    CHECK_NOTHROW(ok.validate());
    CHECK(throws_naming("n_nodes", NetworkConfig{0, 0.5, 1000, 0.01}));
    CHECK(throws_naming("snr", NetworkConfig{3, 0.0, 1000, 0.01}));
    CHECK(throws_naming("snr", NetworkConfig{3, -2.0, 1000, 0.01}));
    CHECK(throws_naming("blocklength", NetworkConfig{3, 0.5, 0, 0.01}));
    CHECK(throws_naming("delay_exponent", NetworkConfig{3, 0.5, 1000, 0.0}));
    CHECK_THROWS_AS(DelayModel({-1.0, 0.5}).validate(), std::domain_error);
    CHECK_THROWS_AS(DelayModel({100.0, 1.5}).validate(), std::domain_error);
}

TEST_CASE("collision sinr") {
    CHECK(sinr_collision(NetworkConfig{1, 2.0, 1000, 0.01}) == 2.0);
    CHECK(sinr_collision(NetworkConfig{3, 0.5, 1000, 0.01}) ==
          doctest::Approx(0.25).epsilon(1e-15));
    double prev = 10.0;
    for (int n = 1; n <= 40; ++n) {
        double s = sinr_collision(NetworkConfig{n, 2.0, 1000, 0.01});
        CHECK(s < prev);
        prev = s;
    }
    // interference-limited ceiling 1/(N-1)
    CHECK(sinr_collision(NetworkConfig{11, 1e9, 1000, 0.01}) ==
          doctest::Approx(0.1).epsilon(1e-6));
}

TEST_CASE("capacity and dispersion") {
    CHECK(shannon_capacity(0.0) == 0.0);
    CHECK(shannon_capacity(1.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(shannon_capacity(3.0) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK_THROWS_AS(shannon_capacity(-0.5), std::domain_error);

    const double l2e2 = std::pow(1.0 / std::log(2.0), 2.0);
    CHECK(channel_dispersion(1.0) == doctest::Approx(0.75 * l2e2).epsilon(1e-14));
    // no cancellation for tiny arguments, V ~ 2 t log2(e)^2
    double t = 1e-9;
    CHECK(channel_dispersion(t) == doctest::Approx(2.0 * t * l2e2).epsilon(1e-8));
    CHECK(channel_dispersion(t) > 0.0);
    // saturates at log2(e)^2
    CHECK(channel_dispersion(1e12) == doctest::Approx(l2e2).epsilon(1e-9));
}

TEST_CASE("finite blocklength rate") {
    // at eps = 0.5 the dispersion term vanishes
    CHECK(achievable_rate(2.0, 1.3, 1000, 0.5) ==
          doctest::Approx(shannon_capacity(2.6)).epsilon(1e-12));
    // backoff grows as eps shrinks
    double r1 = achievable_rate(2.0, 1.0, 1000, 1e-3);
    double r2 = achievable_rate(2.0, 1.0, 1000, 1e-5);
    CHECK(r2 < r1);
    CHECK(r1 < shannon_capacity(2.0));
    // deep fade with a strict target drives the rate negative, by design
    CHECK(achievable_rate(0.05, 0.01, 200, 1e-9) < 0.0);
}

TEST_CASE("delay outage round trip") {
    for (double ec : {0.05, 0.5}) {
        for (double th : {0.001, 0.1}) {
            double d = max_delay_for_outage(ec, th, 1e-3);
            CHECK(delay_outage_probability(ec, th, d) ==
                  doctest::Approx(1e-3).epsilon(1e-12));
        }
    }
    CHECK(delay_outage_probability(0.1, 0.05, 0.0) == 1.0);
}

#include "ecfb/channel.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "ecfb/specialfn.hpp"

namespace ecfb {

namespace {
constexpr double kLog2E = 1.4426950408889634;  // log2(e)

[[noreturn]] void bad_field(const char* field, const char* why) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "NetworkConfig.%s %s", field, why);
    throw std::domain_error(buf);
}
}  // namespace

void NetworkConfig::validate() const {
    if (n_nodes < 1) bad_field("n_nodes", "must be >= 1");
    if (!(snr > 0.0) || !std::isfinite(snr)) bad_field("snr", "must be positive and finite");
    if (blocklength < 1) bad_field("blocklength", "must be >= 1");
    if (!(delay_exponent > 0.0) || !std::isfinite(delay_exponent))
        bad_field("delay_exponent", "must be positive and finite");
}

void DelayModel::validate() const {
    if (!(max_delay > 0.0)) throw std::domain_error("DelayModel.max_delay must be > 0");
    if (!(outage_prob > 0.0 && outage_prob < 1.0))
        throw std::domain_error("DelayModel.outage_prob must lie in (0,1)");
}

double sinr_collision(const NetworkConfig& cfg) {
    cfg.validate();
    return cfg.snr / (1.0 + cfg.snr * (cfg.n_nodes - 1));
}

double shannon_capacity(double t) {
    if (!(t >= 0.0)) throw std::domain_error("shannon_capacity: t must be >= 0");
    return std::log2(1.0 + t);
}

double channel_dispersion(double t) {
    if (!(t >= 0.0)) throw std::domain_error("channel_dispersion: t must be >= 0");
    double w = 1.0 + t;
    // 1 - w^-2 computed as t(2+t)/w^2 to avoid cancellation at small t
    return (t * (2.0 + t) / (w * w)) * kLog2E * kLog2E;
}

double achievable_rate(double sinr, double fade, int blocklength, double eps) {
    if (!(sinr > 0.0)) throw std::domain_error("achievable_rate: sinr must be > 0");
    if (!(fade >= 0.0)) throw std::domain_error("achievable_rate: fade must be >= 0");
    if (blocklength < 1) throw std::domain_error("achievable_rate: blocklength must be >= 1");
    double t = sinr * fade;
    return shannon_capacity(t) -
           std::sqrt(channel_dispersion(t) / blocklength) * gaussian_q_inv(eps);
}

double delay_outage_probability(double ec, double theta, double d_max) {
    if (!(ec > 0.0) || !(theta > 0.0) || !(d_max >= 0.0))
        throw std::domain_error(
            "delay_outage_probability: ec and theta must be > 0, d_max >= 0");
    return std::exp(-theta * ec * d_max);
}

double max_delay_for_outage(double ec, double theta, double p_out) {
    if (!(ec > 0.0) || !(theta > 0.0))
        throw std::domain_error("max_delay_for_outage: ec and theta must be > 0");
    if (!(p_out > 0.0 && p_out < 1.0))
        throw std::domain_error("max_delay_for_outage: p_out must lie in (0,1)");
    return -std::log(p_out) / (theta * ec);
}

}  // namespace ecfb

#pragma once

namespace ecfb {

// One shared-slot scenario: n_nodes equal-power terminals colliding at a common
// receiver, each with linear SNR snr, packets of `blocklength` channel uses, and
// QoS delay exponent delay_exponent (> 0; larger means stricter latency).
struct NetworkConfig {
    int n_nodes = 1;
    double snr = 1.0;
    int blocklength = 1000;
    double delay_exponent = 0.01;

    // throws std::domain_error naming the offending field
    void validate() const;
};

// Delay-outage operating point: probability of a packet delay exceeding max_delay.
struct DelayModel {
    double max_delay;    // channel uses
    double outage_prob;  // in (0,1)

    void validate() const;
};

// SINR one node sees when all others transmit in the same slot, interference
// power summed as (n_nodes - 1) fades of unit mean: snr / (1 + snr*(N-1)).
double sinr_collision(const NetworkConfig& cfg);

// log2(1 + t)
double shannon_capacity(double t);

// (1 - (1+t)^-2) * log2(e)^2, the dispersion of the AWGN-like channel at SNR t.
double channel_dispersion(double t);

// Finite-blocklength rate for a given fade realization z = |h|^2:
//   C(sinr*z) - sqrt(V(sinr*z)/blocklength) * Qinv(eps).
// May be negative for deep fades; callers integrate it, they do not clip it.
double achievable_rate(double sinr, double fade, int blocklength, double eps);

// P(delay > d_max) = exp(-theta * ec * d_max) under the large-deviation delay model.
double delay_outage_probability(double ec, double theta, double d_max);

// Inverse of the above in d_max: -ln(p_out) / (theta * ec).
double max_delay_for_outage(double ec, double theta, double p_out);

}  // namespace ecfb

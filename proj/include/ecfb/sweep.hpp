#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "ecfb/compensate.hpp"

namespace ecfb {

enum class SweepAxis { eps, n_nodes, theta, snr, rho_s_op, d_max };

const char* sweep_axis_name(SweepAxis axis);
std::optional<SweepAxis> sweep_axis_from_name(const std::string& name);

// One-dimensional parameter sweep around a base scenario. eps sweeps are
// log-spaced (the interesting range spans decades); all other axes are linear.
// n_nodes values are rounded to integers.
struct SweepSpec {
    SweepAxis axis = SweepAxis::eps;
    double start = 0.0;
    double stop = 0.0;
    int steps = 0;
    NetworkConfig base;
    std::optional<URConstraint> constraint;
    std::optional<std::pair<double, double>> priorities;

    void validate() const;  // throws std::domain_error
};

struct SweepResult {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
    std::vector<std::pair<std::string, std::string>> metadata;
};

// Evaluates every grid point; points whose evaluation throws are dropped from
// the output and logged to stderr with the reason, the run continues.
SweepResult run_sweep(const SweepSpec& spec, PsiModel model = PsiModel::quadrature);

// '#'-prefixed metadata lines, a header line, then one comma-separated row per
// record, all values printed with %.12g. Output depends only on the inputs.
void write_csv(const SweepResult& result, std::ostream& out);

std::string format_double(double v);

}  // namespace ecfb

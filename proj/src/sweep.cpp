#include "ecfb/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <iostream>
#include <stdexcept>

namespace ecfb {

namespace {

const struct {
    SweepAxis axis;
    const char* name;
} kAxisNames[] = {
    {SweepAxis::eps, "eps"},       {SweepAxis::n_nodes, "n_nodes"},
    {SweepAxis::theta, "theta"},   {SweepAxis::snr, "snr"},
    {SweepAxis::rho_s_op, "rho_s_op"}, {SweepAxis::d_max, "d_max"},
};

std::vector<double> grid_for(const SweepSpec& spec) {
    std::vector<double> xs(spec.steps);
    if (spec.axis == SweepAxis::eps) {
        double la = std::log10(spec.start);
        double lb = std::log10(spec.stop);
        for (int i = 0; i < spec.steps; ++i)
            xs[i] = std::pow(10.0, la + (lb - la) * i / (spec.steps - 1));
    } else {
        for (int i = 0; i < spec.steps; ++i)
            xs[i] = spec.start + (spec.stop - spec.start) * i / (spec.steps - 1);
    }
    return xs;
}

void push_meta(SweepResult& r, const std::string& k, const std::string& v) {
    r.metadata.emplace_back(k, v);
}

void push_meta(SweepResult& r, const std::string& k, double v) {
    r.metadata.emplace_back(k, format_double(v));
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

const char* sweep_axis_name(SweepAxis axis) {
    for (const auto& e : kAxisNames)
        if (e.axis == axis) return e.name;
    return "unknown";
}

std::optional<SweepAxis> sweep_axis_from_name(const std::string& name) {
    for (const auto& e : kAxisNames)
        if (name == e.name) return e.axis;
    return std::nullopt;
}

void SweepSpec::validate() const {
    base.validate();
    if (steps < 2) throw std::domain_error("SweepSpec.steps must be >= 2");
    if (!(start < stop)) throw std::domain_error("SweepSpec.start must be < stop");
    switch (axis) {
        case SweepAxis::eps:
            if (!(start > 0.0 && stop < 1.0))
                throw std::domain_error("SweepSpec: eps range must lie inside (0,1)");
            break;
        case SweepAxis::n_nodes:
            if (start < 1.0) throw std::domain_error("SweepSpec: n_nodes range must start >= 1");
            break;
        case SweepAxis::theta:
        case SweepAxis::snr:
        case SweepAxis::d_max:
            if (!(start > 0.0))
                throw std::domain_error("SweepSpec: range must be positive for this axis");
            break;
        case SweepAxis::rho_s_op:
            if (!(start > 0.0))
                throw std::domain_error("SweepSpec: rho_s_op range must be positive");
            break;
    }
    if (constraint && !(constraint->target_eps > 0.0 && constraint->target_eps < 1.0))
        throw std::domain_error("SweepSpec: constraint target_eps must lie in (0,1)");
    if (priorities && (!(priorities->first >= 0.0) || !(priorities->second >= 0.0)))
        throw std::domain_error("SweepSpec: priorities must be >= 0");
}

SweepResult run_sweep(const SweepSpec& spec, PsiModel model) {
    spec.validate();
    SweepResult res;
    const NetworkConfig& base = spec.base;
    push_meta(res, "axis", sweep_axis_name(spec.axis));
    push_meta(res, "spacing", spec.axis == SweepAxis::eps ? "log" : "linear");
    push_meta(res, "n_nodes", static_cast<double>(base.n_nodes));
    push_meta(res, "snr", base.snr);
    push_meta(res, "blocklength", static_cast<double>(base.blocklength));
    push_meta(res, "theta", base.delay_exponent);
    push_meta(res, "model", model == PsiModel::closed_form ? "closed" : "exact");
    if (spec.constraint) push_meta(res, "target_eps", spec.constraint->target_eps);
    if (spec.priorities)
        push_meta(res, "priorities",
                  format_double(spec.priorities->first) + "," +
                      format_double(spec.priorities->second));

    auto optimize_at = [&](double sinr, double theta) {
        if (spec.constraint)
            return constrained_optimal_eps(sinr, theta, base.blocklength, *spec.constraint,
                                           model);
        return optimal_eps(sinr, theta, base.blocklength, model);
    };

    std::vector<double> xs = grid_for(spec);
    auto emit = [&](double, const std::vector<double>& row) { res.rows.push_back(row); };
    auto dropped = [&](double x, const std::exception& e) {
        std::cerr << "sweep: dropped " << sweep_axis_name(spec.axis) << "=" << format_double(x)
                  << ": " << e.what() << "\n";
    };

    switch (spec.axis) {
        case SweepAxis::eps: {
            res.header = {"eps", "psi", "ec"};
            double sinr = sinr_collision(base);
            for (double x : xs) {
                try {
                    double psi = psi_value(model, sinr, base.delay_exponent, base.blocklength, x);
                    double ec = effective_capacity(psi, base.delay_exponent, base.blocklength);
                    emit(x, {x, psi, ec});
                } catch (const std::exception& e) {
                    dropped(x, e);
                }
            }
            break;
        }
        case SweepAxis::n_nodes: {
            res.header = {"n_nodes", "sinr",    "eps_star", "ec_max",
                          "alpha",   "alpha_c", "gamma_c",  "alpha_t"};
            for (double x : xs) {
                NetworkConfig cfg = base;
                cfg.n_nodes = static_cast<int>(std::lround(x));
                try {
                    OptResult r = optimize_at(sinr_collision(cfg), cfg.delay_exponent);
                    CompensationReport rep = loss_factors(cfg, spec.constraint, model);
                    emit(x, {static_cast<double>(cfg.n_nodes), sinr_collision(cfg), r.eps_star,
                             r.ec_value, rep.alpha, rep.alpha_c, rep.gamma_c, rep.alpha_t});
                } catch (const std::exception& e) {
                    dropped(x, e);
                }
            }
            break;
        }
        case SweepAxis::theta: {
            res.header = {"theta", "eps_star", "ec_max"};
            double sinr = sinr_collision(base);
            for (double x : xs) {
                try {
                    OptResult r = optimize_at(sinr, x);
                    emit(x, {x, r.eps_star, r.ec_value});
                } catch (const std::exception& e) {
                    dropped(x, e);
                }
            }
            break;
        }
        case SweepAxis::snr: {
            res.header = {"snr", "sinr", "eps_star", "ec_max"};
            for (double x : xs) {
                NetworkConfig cfg = base;
                cfg.snr = x;
                try {
                    double sinr = sinr_collision(cfg);
                    OptResult r = optimize_at(sinr, cfg.delay_exponent);
                    emit(x, {x, sinr, r.eps_star, r.ec_value});
                } catch (const std::exception& e) {
                    dropped(x, e);
                }
            }
            break;
        }
        case SweepAxis::rho_s_op: {
            res.header = {"rho_s_op", "rho_c_op", "alpha_c_op", "theta2", "eta"};
            std::pair<double, double> pri = spec.priorities.value_or(std::make_pair(1.0, 1.0));
            for (double x : xs) {
                try {
                    JointPlan p = joint_plan(base, x, pri, model);
                    emit(x, {p.rho_s_op, p.rho_c_op, p.alpha_c_op, p.theta2, p.eta});
                } catch (const std::exception& e) {
                    dropped(x, e);
                }
            }
            break;
        }
        case SweepAxis::d_max: {
            res.header = {"d_max", "p_out"};
            OptResult r = optimize_at(sinr_collision(base), base.delay_exponent);
            for (double x : xs) {
                try {
                    emit(x, {x, delay_outage_probability(r.ec_value, base.delay_exponent, x)});
                } catch (const std::exception& e) {
                    dropped(x, e);
                }
            }
            break;
        }
    }
    return res;
}

void write_csv(const SweepResult& result, std::ostream& out) {
    for (const auto& [k, v] : result.metadata) out << "# " << k << " = " << v << "\n";
    for (std::size_t i = 0; i < result.header.size(); ++i) {
        if (i) out << ",";
        out << result.header[i];
    }
    out << "\n";
    for (const auto& row : result.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ",";
            out << format_double(row[i]);
        }
        out << "\n";
    }
}

}  // namespace ecfb

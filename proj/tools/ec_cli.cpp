#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ecfb/sweep.hpp"

using nlohmann::json;
using namespace ecfb;

namespace {

constexpr const char* kToolVersion = "ecfb 0.1.0";

struct LoadedConfig {
    NetworkConfig net;
    std::optional<double> target_eps;
    std::optional<std::pair<double, double>> priorities;
};

LoadedConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("config parse error: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("config: top level must be a JSON object");
    static const char* allowed[] = {"n_nodes", "snr_db",     "snr_linear", "blocklength",
                                    "theta",   "target_eps", "priorities"};
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool known = false;
        for (const char* a : allowed)
            if (it.key() == a) known = true;
        if (!known) throw std::invalid_argument("config: unknown key '" + it.key() + "'");
    }
    for (const char* k : {"n_nodes", "blocklength", "theta"})
        if (!j.contains(k))
            throw std::invalid_argument(std::string("config: missing key '") + k + "'");
    bool has_db = j.contains("snr_db");
    bool has_lin = j.contains("snr_linear");
    if (has_db == has_lin)
        throw std::invalid_argument("config: provide exactly one of snr_db or snr_linear");
    LoadedConfig cfg;
    try {
        cfg.net.n_nodes = j.at("n_nodes").get<int>();
        cfg.net.blocklength = j.at("blocklength").get<int>();
        cfg.net.delay_exponent = j.at("theta").get<double>();
        cfg.net.snr = has_db ? std::pow(10.0, j.at("snr_db").get<double>() / 10.0)
                             : j.at("snr_linear").get<double>();
        if (j.contains("target_eps")) cfg.target_eps = j.at("target_eps").get<double>();
        if (j.contains("priorities")) {
            const auto& p = j.at("priorities");
            if (!p.is_array() || p.size() != 2)
                throw std::invalid_argument("config: priorities must be a 2-element array");
            cfg.priorities = std::make_pair(p[0].get<double>(), p[1].get<double>());
        }
    } catch (const json::type_error& e) {
        throw std::invalid_argument(std::string("config: wrong value type: ") + e.what());
    }
    try {
        cfg.net.validate();
        if (cfg.target_eps && !(*cfg.target_eps > 0.0 && *cfg.target_eps < 1.0))
            throw std::domain_error("config: target_eps must lie in (0,1)");
    } catch (const std::domain_error& e) {
        throw std::invalid_argument(e.what());
    }
    return cfg;
}

PsiModel parse_model(const std::string& name) {
    if (name == "exact") return PsiModel::quadrature;
    if (name == "closed") return PsiModel::closed_form;
    throw std::invalid_argument("--model must be 'exact' or 'closed' (got '" + name + "')");
}

std::pair<double, double> parse_priorities(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("--priorities expects two comma-separated numbers");
    std::size_t used1 = 0, used2 = 0;
    double a, b;
    try {
        a = std::stod(s.substr(0, comma), &used1);
        b = std::stod(s.substr(comma + 1), &used2);
    } catch (const std::exception&) {
        throw std::invalid_argument("--priorities expects two comma-separated numbers");
    }
    if (used1 != comma || used2 != s.size() - comma - 1 || !(a >= 0.0) || !(b >= 0.0))
        throw std::invalid_argument("--priorities expects two non-negative numbers");
    return {a, b};
}

void print_kv(const char* key, const std::string& v) {
    std::cout << key << " = " << v << "\n";
}
void print_kv(const char* key, double v) { print_kv(key, format_double(v)); }

std::vector<double> log_grid(double a, double b, int n) {
    std::vector<double> xs(n);
    double la = std::log10(a), lb = std::log10(b);
    for (int i = 0; i < n; ++i) xs[i] = std::pow(10.0, la + (lb - la) * i / (n - 1));
    return xs;
}

std::vector<double> lin_grid(double a, double b, int n) {
    std::vector<double> xs(n);
    for (int i = 0; i < n; ++i) xs[i] = a + (b - a) * i / (n - 1);
    return xs;
}

void meta(SweepResult& r, const std::string& k, const std::string& v) {
    r.metadata.emplace_back(k, v);
}
void meta(SweepResult& r, const std::string& k, double v) {
    r.metadata.emplace_back(k, format_double(v));
}

void base_meta(SweepResult& r, const std::string& fig, PsiModel model) {
    meta(r, "tool", kToolVersion);
    meta(r, "figure", fig);
    meta(r, "model", model == PsiModel::closed_form ? "closed" : "exact");
}

// EC at one psi evaluation; nullopt when psi leaves (0,1] (deep-interference
// small-eps corner where the service model stops being meaningful)
std::optional<double> ec_point(PsiModel model, double sinr, double theta, int tf, double eps) {
    double psi = psi_value(model, sinr, theta, tf, eps);
    if (!(psi > 0.0 && psi <= 1.0)) return std::nullopt;
    return effective_capacity(psi, theta, tf);
}

void add_curve_rows(SweepResult& res, const std::vector<double>& eps_grid,
                    const std::vector<double>& sinrs, const std::vector<double>& thetas,
                    PsiModel model, int tf) {
    for (double e : eps_grid) {
        std::vector<double> row{e};
        bool ok = true;
        for (std::size_t k = 0; k < sinrs.size() && ok; ++k) {
            auto ec = ec_point(model, sinrs[k], thetas[k], tf, e);
            if (ec)
                row.push_back(*ec);
            else
                ok = false;
        }
        if (ok)
            res.rows.push_back(row);
        else
            std::cerr << "figure: dropped eps=" << format_double(e)
                      << " (psi outside (0,1] for one of the curves)\n";
    }
}

SweepResult figure_fig2(PsiModel model) {
    SweepResult res;
    base_meta(res, "fig2", model);
    const int tf = 1000;
    const double rho = 2.0, theta = 0.01;
    meta(res, "snr", rho);
    meta(res, "blocklength", tf);
    meta(res, "theta", theta);
    res.header = {"eps", "ec_n1", "ec_n5", "ec_n10"};
    std::vector<double> sinrs, thetas;
    for (int n : {1, 5, 10}) {
        NetworkConfig cfg{n, rho, tf, theta};
        double si = sinr_collision(cfg);
        sinrs.push_back(si);
        thetas.push_back(theta);
        OptResult r = optimal_eps(si, theta, tf, model);
        std::string tag = "n" + std::to_string(n);
        meta(res, "eps_star_" + tag, r.eps_star);
        meta(res, "ec_max_" + tag, r.ec_value);
    }
    add_curve_rows(res, log_grid(1e-4, 0.5, 121), sinrs, thetas, model, tf);
    return res;
}

SweepResult figure_fig3(PsiModel model) {
    SweepResult res;
    base_meta(res, "fig3", model);
    const int tf = 1000;
    const double rho = 10.0;  // 10 dB
    const double eps_t = 1e-3;
    const std::vector<double> thetas{0.001, 0.01, 0.1};
    meta(res, "snr", rho);
    meta(res, "blocklength", tf);
    meta(res, "target_eps", eps_t);
    meta(res, "note", "target_eps and theta set are tool defaults");
    res.header = {"n_nodes"};
    for (double th : thetas) {
        res.header.push_back("ec_max_th" + format_double(th));
        res.header.push_back("ec_op_th" + format_double(th));
    }
    for (int n = 1; n <= 30; ++n) {
        NetworkConfig cfg{n, rho, tf, thetas[0]};
        double si = sinr_collision(cfg);
        std::vector<double> row{static_cast<double>(n)};
        for (double th : thetas) {
            row.push_back(optimal_eps(si, th, tf, model).ec_value);
            row.push_back(
                constrained_optimal_eps(si, th, tf, URConstraint{eps_t}, model).ec_value);
        }
        res.rows.push_back(row);
    }
    return res;
}

SweepResult figure_fig4(PsiModel model) {
    SweepResult res;
    base_meta(res, "fig4", model);
    const int tf = 1000;
    const double rho = 1.0, theta = 0.1;
    NetworkConfig cfg{5, rho, tf, theta};
    double rho_i = sinr_collision(cfg);
    double rho_s = others_sinr_after_boost(cfg);
    meta(res, "n_nodes", 5.0);
    meta(res, "snr", rho);
    meta(res, "blocklength", tf);
    meta(res, "theta", theta);
    meta(res, "sinr_collision", rho_i);
    meta(res, "sinr_others_after_boost", rho_s);
    res.header = {"eps", "ec_collision", "ec_others_after_boost", "ec_compensating"};
    add_curve_rows(res, log_grid(1e-4, 0.5, 121), {rho_i, rho_s, rho}, {theta, theta, theta},
                   model, tf);
    return res;
}

SweepResult figure_fig56(const std::string& fig, PsiModel model) {
    SweepResult res;
    base_meta(res, fig, model);
    const int tf = 1000;
    const double rho = 1.0;
    const std::vector<double> thetas{0.1, 0.001};
    meta(res, "snr", rho);
    meta(res, "blocklength", tf);
    bool five = fig == "fig5";
    res.header = {"n_nodes"};
    for (double th : thetas)
        res.header.push_back((five ? "alpha_c_th" : "alpha_th") + format_double(th));
    for (double th : thetas)
        res.header.push_back((five ? "gamma_c_th" : "alpha_t_th") + format_double(th));
    for (int n = 2; n <= 30; ++n) {
        std::vector<double> row{static_cast<double>(n)};
        std::vector<CompensationReport> reps;
        for (double th : thetas)
            reps.push_back(loss_factors(NetworkConfig{n, rho, tf, th}, std::nullopt, model));
        for (const auto& rep : reps) row.push_back(five ? rep.alpha_c : rep.alpha);
        for (const auto& rep : reps) row.push_back(five ? rep.gamma_c : rep.alpha_t);
        res.rows.push_back(row);
    }
    return res;
}

SweepResult figure_fig7(PsiModel model) {
    SweepResult res;
    base_meta(res, "fig7", model);
    const int tf = 1000;
    NetworkConfig cfg{5, 1.0, tf, 0.05};
    double rho_i = sinr_collision(cfg);
    double ec_pre = optimal_eps(rho_i, cfg.delay_exponent, tf, model).ec_value;
    double theta_i = graceful_theta(cfg, model);
    double ec_post = optimal_eps(rho_i, theta_i, tf, model).ec_value;
    meta(res, "n_nodes", 5.0);
    meta(res, "snr", cfg.snr);
    meta(res, "blocklength", tf);
    meta(res, "theta", cfg.delay_exponent);
    meta(res, "theta_i", theta_i);
    meta(res, "ec_before", ec_pre);
    meta(res, "ec_after", ec_post);
    meta(res, "d_max_at_1e-3_before",
         max_delay_for_outage(ec_pre, cfg.delay_exponent, 1e-3));
    meta(res, "d_max_at_1e-3_after", max_delay_for_outage(ec_post, theta_i, 1e-3));
    res.header = {"d_max", "p_out_before", "p_out_after"};
    for (double d : lin_grid(500.0, 8000.0, 151)) {
        res.rows.push_back({d, delay_outage_probability(ec_pre, cfg.delay_exponent, d),
                            delay_outage_probability(ec_post, theta_i, d)});
    }
    return res;
}

SweepResult figure_fig8(PsiModel model) {
    SweepResult res;
    base_meta(res, "fig8", model);
    const double rho = 1.0, theta = 0.1;
    const std::vector<int> tfs{700, 1000};
    NetworkConfig cfg{5, rho, tfs[0], theta};
    double rho_i = sinr_collision(cfg);
    double rho_s = others_sinr_after_boost(cfg);
    meta(res, "n_nodes", 5.0);
    meta(res, "snr", rho);
    meta(res, "theta", theta);
    meta(res, "blocklengths", "700,1000");
    res.header = {"rho_s_op"};
    for (int tf : tfs) {
        res.header.push_back("alpha_c_op_tf" + std::to_string(tf));
        res.header.push_back("theta2_tf" + std::to_string(tf));
    }
    for (double rso : lin_grid(rho_s, rho_i, 41)) {
        std::vector<double> row{rso};
        bool ok = true;
        for (int tf : tfs) {
            NetworkConfig c{5, rho, tf, theta};
            try {
                JointPlan p = joint_plan(c, rso, {1.0, 1.0}, model);
                row.push_back(p.alpha_c_op);
                row.push_back(p.theta2);
            } catch (const std::exception& e) {
                std::cerr << "figure: dropped rho_s_op=" << format_double(rso) << ": "
                          << e.what() << "\n";
                ok = false;
                break;
            }
        }
        if (ok) res.rows.push_back(row);
    }
    return res;
}

NetworkConfig joint_example_config(int tf = 1000) { return NetworkConfig{15, 2.0, tf, 0.1}; }

SweepResult figure_fig9(PsiModel model) {
    SweepResult res;
    base_meta(res, "fig9", model);
    NetworkConfig cfg = joint_example_config();
    std::pair<double, double> pri{1.0, 4.0};
    double rho_i = sinr_collision(cfg);
    double rho_s = others_sinr_after_boost(cfg);
    meta(res, "n_nodes", 15.0);
    meta(res, "snr", cfg.snr);
    meta(res, "blocklength", cfg.blocklength);
    meta(res, "theta", cfg.delay_exponent);
    meta(res, "priorities", "1,4");
    JointPlan best = optimize_joint(cfg, pri, model);
    meta(res, "opt_rho_s_op", best.rho_s_op);
    meta(res, "opt_rho_c_op", best.rho_c_op);
    meta(res, "opt_alpha_c_op", best.alpha_c_op);
    meta(res, "opt_theta2", best.theta2);
    meta(res, "opt_eta", best.eta);
    res.header = {"rho_s_op", "alpha_c_op", "theta2", "eta"};
    for (double rso : lin_grid(rho_s, rho_i, 201)) {
        try {
            JointPlan p = joint_plan(cfg, rso, pri, model);
            res.rows.push_back({p.rho_s_op, p.alpha_c_op, p.theta2, p.eta});
        } catch (const std::exception& e) {
            std::cerr << "figure: dropped rho_s_op=" << format_double(rso) << ": " << e.what()
                      << "\n";
        }
    }
    return res;
}

SweepResult figure_fig10(PsiModel model) {
    SweepResult res;
    base_meta(res, "fig10", model);
    NetworkConfig cfg = joint_example_config();
    std::pair<double, double> pri{1.0, 4.0};
    double rho_i = sinr_collision(cfg);
    JointPlan best = optimize_joint(cfg, pri, model);
    double sinr_recovering = best.rho_c_op / (1.0 + cfg.snr * (cfg.n_nodes - 1));
    meta(res, "n_nodes", 15.0);
    meta(res, "snr", cfg.snr);
    meta(res, "blocklength", cfg.blocklength);
    meta(res, "theta", cfg.delay_exponent);
    meta(res, "priorities", "1,4");
    meta(res, "rho_s_op", best.rho_s_op);
    meta(res, "rho_c_op", best.rho_c_op);
    meta(res, "theta2", best.theta2);
    res.header = {"eps", "ec_collision", "ec_others_at_plan", "ec_recovering"};
    add_curve_rows(res, log_grid(1e-4, 0.5, 121), {rho_i, best.rho_s_op, sinr_recovering},
                   {cfg.delay_exponent, cfg.delay_exponent, best.theta2}, model,
                   cfg.blocklength);
    return res;
}

void write_result(const SweepResult& res, const std::string& out_path) {
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
    write_csv(res, out);
    if (!out) throw std::runtime_error("failed while writing " + out_path);
    std::cout << "wrote " << out_path << " (" << res.rows.size() << " rows)\n";
}

int cmd_ec(const LoadedConfig& cfg, std::optional<double> eps_target, PsiModel model) {
    const NetworkConfig& net = cfg.net;
    double sinr = sinr_collision(net);
    OptResult best = optimal_eps(sinr, net.delay_exponent, net.blocklength, model);
    print_kv("tool", kToolVersion);
    print_kv("n_nodes", static_cast<double>(net.n_nodes));
    print_kv("snr", net.snr);
    print_kv("blocklength", static_cast<double>(net.blocklength));
    print_kv("theta", net.delay_exponent);
    print_kv("model", model == PsiModel::closed_form ? "closed" : "exact");
    print_kv("sinr_collision", sinr);
    print_kv("eps_star", best.eps_star);
    print_kv("ec_max", best.ec_value);
    print_kv("ec_infinite_blocklength",
             ec_infinite_blocklength(sinr, net.delay_exponent, net.blocklength));
    std::optional<double> target = eps_target ? eps_target : cfg.target_eps;
    if (target) {
        URConstraint con{*target};
        OptResult op =
            constrained_optimal_eps(sinr, net.delay_exponent, net.blocklength, con, model);
        print_kv("eps_target", *target);
        print_kv("eps_operational", op.eps_star);
        print_kv("ec_operational", op.ec_value);
        print_kv("constrained", op.constrained ? "true" : "false");
        print_kv("sacrifice_ratio",
                 ec_sacrifice_ratio(sinr, net.delay_exponent, net.blocklength, con, model));
    }
    return 0;
}

int cmd_compensate(const std::string& mode, const LoadedConfig& cfg,
                   std::optional<double> eps_target,
                   std::optional<std::pair<double, double>> priorities, PsiModel model) {
    const NetworkConfig& net = cfg.net;
    print_kv("tool", kToolVersion);
    print_kv("mode", mode);
    print_kv("n_nodes", static_cast<double>(net.n_nodes));
    print_kv("snr", net.snr);
    print_kv("blocklength", static_cast<double>(net.blocklength));
    print_kv("theta", net.delay_exponent);
    print_kv("model", model == PsiModel::closed_form ? "closed" : "exact");
    if (mode == "power") {
        std::optional<URConstraint> con;
        std::optional<double> target = eps_target ? eps_target : cfg.target_eps;
        if (target) {
            con = URConstraint{*target};
            print_kv("eps_target", *target);
        }
        CompensationReport rep = loss_factors(net, con, model);
        print_kv("rho_c", rep.rho_c);
        print_kv("rho_s", rep.rho_s);
        print_kv("alpha", rep.alpha);
        print_kv("alpha_c", rep.alpha_c);
        print_kv("gamma_c", rep.gamma_c);
        print_kv("alpha_t", rep.alpha_t);
        print_kv("power_restored", verify_power_restoration(net, model) ? "true" : "false");
        return 0;
    }
    if (mode == "delay") {
        double theta_i = graceful_theta(net, model);
        double ec_common =
            optimal_eps(net.snr, net.delay_exponent, net.blocklength, model).ec_value;
        print_kv("theta_i", theta_i);
        print_kv("ec_common", ec_common);
        print_kv("d_max_at_1e-3_before",
                 max_delay_for_outage(
                     optimal_eps(sinr_collision(net), net.delay_exponent, net.blocklength, model)
                         .ec_value,
                     net.delay_exponent, 1e-3));
        print_kv("d_max_at_1e-3_after", max_delay_for_outage(ec_common, theta_i, 1e-3));
        return 0;
    }
    if (mode == "joint") {
        std::pair<double, double> pri =
            priorities ? *priorities : cfg.priorities.value_or(std::make_pair(1.0, 1.0));
        print_kv("priorities",
                 format_double(pri.first) + "," + format_double(pri.second));
        JointPlan plan = optimize_joint(net, pri, model);
        print_kv("rho_s_op", plan.rho_s_op);
        print_kv("rho_c_op", plan.rho_c_op);
        print_kv("alpha_c_op", plan.alpha_c_op);
        print_kv("theta2", plan.theta2);
        print_kv("eta", plan.eta);
        return 0;
    }
    throw std::invalid_argument("compensate mode must be power, delay, or joint (got '" +
                                mode + "')");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-blocklength effective capacity toolkit"};
    app.require_subcommand(1);

    std::string config_path, out_path, model_name = "exact", priorities_str, axis_name,
                figure_id, comp_mode;
    double eps_target = -1.0, start = 0.0, stop = 0.0;
    int steps = 0;

    auto* sc_ec = app.add_subcommand("ec", "evaluate one scenario");
    sc_ec->add_option("--config", config_path, "JSON scenario file")->required();
    sc_ec->add_option("--eps-target", eps_target, "reliability target in (0,1)");
    sc_ec->add_option("--model", model_name, "psi backend: exact|closed");

    auto* sc_fig = app.add_subcommand("figure", "write one reference curve family as CSV");
    sc_fig->add_option("id", figure_id, "fig2..fig10")->required();
    sc_fig->add_option("--out", out_path, "output CSV path (default <id>.csv)");
    sc_fig->add_option("--model", model_name, "psi backend: exact|closed");

    auto* sc_sweep = app.add_subcommand("sweep", "sweep one parameter, write CSV");
    sc_sweep->add_option("--config", config_path, "JSON scenario file")->required();
    sc_sweep->add_option("--axis", axis_name, "eps|n_nodes|theta|snr|rho_s_op|d_max")
        ->required();
    sc_sweep->add_option("--start", start, "axis start")->required();
    sc_sweep->add_option("--stop", stop, "axis stop")->required();
    sc_sweep->add_option("--steps", steps, "grid size (>= 2)")->required();
    sc_sweep->add_option("--out", out_path, "output CSV path")->required();
    sc_sweep->add_option("--eps-target", eps_target, "reliability target in (0,1)");
    sc_sweep->add_option("--priorities", priorities_str, "eta weights 'a,b'");
    sc_sweep->add_option("--model", model_name, "psi backend: exact|closed");

    auto* sc_comp = app.add_subcommand("compensate", "interference compensation strategies");
    sc_comp->add_option("mode", comp_mode, "power|delay|joint")->required();
    sc_comp->add_option("--config", config_path, "JSON scenario file")->required();
    sc_comp->add_option("--eps-target", eps_target, "reliability target (power mode)");
    sc_comp->add_option("--priorities", priorities_str, "eta weights 'a,b' (joint mode)");
    sc_comp->add_option("--model", model_name, "psi backend: exact|closed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        PsiModel model = parse_model(model_name);
        std::optional<double> target;
        if (eps_target >= 0.0) {
            if (!(eps_target > 0.0 && eps_target < 1.0))
                throw std::invalid_argument("--eps-target must lie in (0,1)");
            target = eps_target;
        }
        std::optional<std::pair<double, double>> pri;
        if (!priorities_str.empty()) pri = parse_priorities(priorities_str);

        if (sc_ec->parsed()) return cmd_ec(load_config(config_path), target, model);

        if (sc_fig->parsed()) {
            if (out_path.empty()) out_path = figure_id + ".csv";
            SweepResult res;
            if (figure_id == "fig2")
                res = figure_fig2(model);
            else if (figure_id == "fig3")
                res = figure_fig3(model);
            else if (figure_id == "fig4")
                res = figure_fig4(model);
            else if (figure_id == "fig5" || figure_id == "fig6")
                res = figure_fig56(figure_id, model);
            else if (figure_id == "fig7")
                res = figure_fig7(model);
            else if (figure_id == "fig8")
                res = figure_fig8(model);
            else if (figure_id == "fig9")
                res = figure_fig9(model);
            else if (figure_id == "fig10")
                res = figure_fig10(model);
            else
                throw std::invalid_argument("unknown figure id '" + figure_id +
                                            "' (expected fig2..fig10)");
            write_result(res, out_path);
            return 0;
        }

        if (sc_sweep->parsed()) {
            LoadedConfig cfg = load_config(config_path);
            SweepSpec spec;
            auto axis = sweep_axis_from_name(axis_name);
            if (!axis)
                throw std::invalid_argument("unknown sweep axis '" + axis_name + "'");
            spec.axis = *axis;
            spec.start = start;
            spec.stop = stop;
            spec.steps = steps;
            spec.base = cfg.net;
            std::optional<double> t = target ? target : cfg.target_eps;
            if (t) spec.constraint = URConstraint{*t};
            spec.priorities = pri ? pri : cfg.priorities;
            try {
                spec.validate();
            } catch (const std::domain_error& e) {
                throw std::invalid_argument(e.what());
            }
            SweepResult res = run_sweep(spec, model);
            if (res.rows.empty())
                throw std::runtime_error("sweep: every grid point failed");
            write_result(res, out_path);
            return 0;
        }

        if (sc_comp->parsed())
            return cmd_compensate(comp_mode, load_config(config_path), target, pri, model);

        throw std::invalid_argument("no subcommand selected");
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

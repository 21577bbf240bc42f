#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ecfb/compensate.hpp"
#include "ecfb/error.hpp"
#include "ecfb/specialfn.hpp"
#include "ecfb/sweep.hpp"

namespace py = pybind11;
using namespace ecfb;

PYBIND11_MODULE(_core, m) {
    m.doc() = "finite-blocklength effective capacity core";
    m.attr("__version__") = "0.1.0";

    py::register_exception<numeric_error>(m, "NumericError", PyExc_ArithmeticError);

    py::class_<ScaledMoment>(m, "ScaledMoment")
        .def_readonly("order", &ScaledMoment::order)
        .def_readonly("snr", &ScaledMoment::snr)
        .def_readonly("value", &ScaledMoment::value)
        .def_readonly("log_value", &ScaledMoment::log_value)
        .def("__repr__", [](const ScaledMoment& s) {
            return "ScaledMoment(order=" + std::to_string(s.order) +
                   ", snr=" + std::to_string(s.snr) + ", value=" + std::to_string(s.value) +
                   ")";
        });

    m.def("gaussian_q", &gaussian_q, py::arg("x"));
    m.def("gaussian_q_inv", &gaussian_q_inv, py::arg("p"));
    m.def("q_inv_derivative", &q_inv_derivative, py::arg("eps"));
    m.def("upper_inc_gamma", &upper_inc_gamma, py::arg("a"), py::arg("x"));
    m.def("ln_upper_inc_gamma", &ln_upper_inc_gamma, py::arg("a"), py::arg("x"));
    m.def("rayleigh_moment", &rayleigh_moment, py::arg("order"), py::arg("snr"));

    py::class_<NetworkConfig>(m, "NetworkConfig")
        .def(py::init<>())
        .def(py::init([](int n_nodes, double snr, int blocklength, double theta) {
                 NetworkConfig c{n_nodes, snr, blocklength, theta};
                 c.validate();
                 return c;
             }),
             py::arg("n_nodes"), py::arg("snr"), py::arg("blocklength"), py::arg("theta"))
        .def_readwrite("n_nodes", &NetworkConfig::n_nodes)
        .def_readwrite("snr", &NetworkConfig::snr)
        .def_readwrite("blocklength", &NetworkConfig::blocklength)
        .def_readwrite("theta", &NetworkConfig::delay_exponent)
        .def("validate", &NetworkConfig::validate);

    py::class_<DelayModel>(m, "DelayModel")
        .def(py::init([](double max_delay, double outage_prob) {
                 DelayModel d{max_delay, outage_prob};
                 d.validate();
                 return d;
             }),
             py::arg("max_delay"), py::arg("outage_prob"))
        .def_readwrite("max_delay", &DelayModel::max_delay)
        .def_readwrite("outage_prob", &DelayModel::outage_prob);

    m.def("sinr_collision", &sinr_collision, py::arg("cfg"));
    m.def("shannon_capacity", &shannon_capacity, py::arg("sinr"));
    m.def("channel_dispersion", &channel_dispersion, py::arg("sinr"));
    m.def("achievable_rate", &achievable_rate, py::arg("sinr"), py::arg("fade"),
          py::arg("blocklength"), py::arg("eps"));
    m.def("delay_outage_probability", &delay_outage_probability, py::arg("ec"),
          py::arg("theta"), py::arg("d_max"));
    m.def("max_delay_for_outage", &max_delay_for_outage, py::arg("ec"), py::arg("theta"),
          py::arg("outage_prob"));

    py::class_<ECParams>(m, "ECParams")
        .def_readonly("c", &ECParams::c)
        .def_readonly("d", &ECParams::d)
        .def_readonly("delta", &ECParams::delta)
        .def_readonly("sinr", &ECParams::sinr);
    m.def("make_ec_params", &make_ec_params, py::arg("sinr"), py::arg("theta"),
          py::arg("blocklength"), py::arg("eps"));

    m.def("psi_exact", &psi_exact, py::arg("sinr"), py::arg("theta"), py::arg("blocklength"),
          py::arg("eps"));
    m.def("psi_taylor", &psi_taylor, py::arg("sinr"), py::arg("theta"),
          py::arg("blocklength"), py::arg("eps"));
    m.def("psi_closed", &psi_closed, py::arg("sinr"), py::arg("theta"),
          py::arg("blocklength"), py::arg("eps"));
    m.def("psi_deps", &psi_deps, py::arg("sinr"), py::arg("theta"), py::arg("blocklength"),
          py::arg("eps"));
    m.def("psi_exact_deps", &psi_exact_deps, py::arg("sinr"), py::arg("theta"),
          py::arg("blocklength"), py::arg("eps"));
    m.def("effective_capacity", &effective_capacity, py::arg("psi"), py::arg("theta"),
          py::arg("blocklength"));
    m.def("ec_infinite_blocklength", &ec_infinite_blocklength, py::arg("sinr"),
          py::arg("theta"), py::arg("blocklength"));

    py::enum_<PsiModel>(m, "PsiModel")
        .value("quadrature", PsiModel::quadrature)
        .value("closed_form", PsiModel::closed_form);

    py::class_<URConstraint>(m, "URConstraint")
        .def(py::init([](double target_eps) { return URConstraint{target_eps}; }),
             py::arg("target_eps"))
        .def_readwrite("target_eps", &URConstraint::target_eps)
        .def_readwrite("active", &URConstraint::active);

    py::class_<OptResult>(m, "OptResult")
        .def_readonly("eps_star", &OptResult::eps_star)
        .def_readonly("ec_value", &OptResult::ec_value)
        .def_readonly("constrained", &OptResult::constrained)
        .def_readonly("iterations", &OptResult::iterations)
        .def("__repr__", [](const OptResult& r) {
            return "OptResult(eps_star=" + std::to_string(r.eps_star) +
                   ", ec_value=" + std::to_string(r.ec_value) +
                   ", constrained=" + std::string(r.constrained ? "True" : "False") + ")";
        });

    m.def("optimal_eps", &optimal_eps, py::arg("sinr"), py::arg("theta"),
          py::arg("blocklength"), py::arg("model") = PsiModel::quadrature);
    m.def("constrained_optimal_eps", &constrained_optimal_eps, py::arg("sinr"),
          py::arg("theta"), py::arg("blocklength"), py::arg("constraint"),
          py::arg("model") = PsiModel::quadrature);
    m.def("ec_sacrifice_ratio", &ec_sacrifice_ratio, py::arg("sinr"), py::arg("theta"),
          py::arg("blocklength"), py::arg("constraint"),
          py::arg("model") = PsiModel::quadrature);

    py::class_<CompensationReport>(m, "CompensationReport")
        .def_readonly("rho_c", &CompensationReport::rho_c)
        .def_readonly("rho_s", &CompensationReport::rho_s)
        .def_readonly("alpha", &CompensationReport::alpha)
        .def_readonly("alpha_c", &CompensationReport::alpha_c)
        .def_readonly("gamma_c", &CompensationReport::gamma_c)
        .def_readonly("alpha_t", &CompensationReport::alpha_t);

    py::class_<JointPlan>(m, "JointPlan")
        .def_readonly("rho_s_op", &JointPlan::rho_s_op)
        .def_readonly("rho_c_op", &JointPlan::rho_c_op)
        .def_readonly("alpha_c_op", &JointPlan::alpha_c_op)
        .def_readonly("theta2", &JointPlan::theta2)
        .def_readonly("eta", &JointPlan::eta)
        .def_readonly("priorities", &JointPlan::priorities);

    m.def("power_control_snr", &power_control_snr, py::arg("cfg"));
    m.def("others_sinr_after_boost", &others_sinr_after_boost, py::arg("cfg"));
    m.def("loss_factors", &loss_factors, py::arg("cfg"),
          py::arg("constraint") = std::optional<URConstraint>{},
          py::arg("model") = PsiModel::quadrature);
    m.def("verify_power_restoration", &verify_power_restoration, py::arg("cfg"),
          py::arg("model") = PsiModel::quadrature);
    m.def("graceful_theta", &graceful_theta, py::arg("cfg"),
          py::arg("model") = PsiModel::quadrature);
    m.def("joint_plan", &joint_plan, py::arg("cfg"), py::arg("rho_s_op"),
          py::arg("priorities"), py::arg("model") = PsiModel::quadrature);
    m.def("optimize_joint", &optimize_joint, py::arg("cfg"), py::arg("priorities"),
          py::arg("model") = PsiModel::quadrature,
          py::call_guard<py::gil_scoped_release>());
}

// SPDX-License-Identifier: Apache-2.0
//
// rissec - physical-layer secrecy toolkit for RIS-assisted wireless links
// Copyright (C) 2026 rissec contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rissec/cascade.hpp"
#include "rissec/channel.hpp"
#include "rissec/errors.hpp"
#include "rissec/mcsim.hpp"
#include "rissec/secrecy.hpp"
#include "rissec/specfun.hpp"
#include "rissec/sweep.hpp"
#include "rissec/version.hpp"

namespace py = pybind11;
using namespace rissec;

namespace {

SecrecyConfig make_config(const CascadeFit& fit, const MixtureGamma& mg_e,
                          double rho_b, double rho_e, bool paper_literal) {
    SecrecyConfig cfg;
    cfg.fit = fit;
    cfg.mg_e = mg_e;
    cfg.budget.rho_b = rho_b;
    cfg.budget.rho_e = rho_e;
    cfg.variant =
        paper_literal ? AnalysisVariant::paper_literal : AnalysisVariant::corrected;
    return cfg;
}

EvalMethod parse_eval_method(const std::string& s) {
    if (s == "closed")
        return EvalMethod::closed_form;
    if (s == "quadrature")
        return EvalMethod::quadrature;
    throw std::invalid_argument("method must be 'closed' or 'quadrature'");
}

} // namespace

PYBIND11_MODULE(_rissec, mod) {
    mod.doc() = "Secrecy analysis of RIS-assisted links over cascaded fading";
    mod.attr("__version__") = version_string;

    py::register_exception<NumericsError>(mod, "NumericsError");
    py::register_exception<ConsistencyError>(mod, "ConsistencyError");

    py::class_<MgTerm>(mod, "MgTerm")
        .def(py::init<>())
        .def(py::init([](double a, double b) {
                 MgTerm t;
                 t.a = a;
                 t.b = b;
                 return t;
             }),
             py::arg("a"), py::arg("b"))
        .def_readwrite("a", &MgTerm::a)
        .def_readwrite("b", &MgTerm::b)
        .def("__repr__", [](const MgTerm& t) {
            return "MgTerm(a=" + std::to_string(t.a) + ", b=" + std::to_string(t.b) +
                   ")";
        });

    py::class_<MixtureGamma>(mod, "MixtureGamma")
        .def(py::init<>())
        .def_readwrite("terms", &MixtureGamma::terms)
        .def_readwrite("c", &MixtureGamma::c)
        .def_readwrite("label", &MixtureGamma::label)
        .def("pdf", [](const MixtureGamma& mg, double x) { return mg_pdf(mg, x); },
             py::arg("x"))
        .def("cdf", [](const MixtureGamma& mg, double x) { return mg_cdf(mg, x); },
             py::arg("x"))
        .def("moment",
             [](const MixtureGamma& mg, double order) { return mg_moment(mg, order); },
             py::arg("order"))
        .def("to_json", [](const MixtureGamma& mg) { return mg_to_json(mg); })
        .def_static("from_json",
                    [](const std::string& text) { return mg_from_json(text); },
                    py::arg("text"))
        .def("__repr__", [](const MixtureGamma& mg) {
            return "MixtureGamma(label='" + mg.label +
                   "', terms=" + std::to_string(mg.terms.size()) + ")";
        });

    py::class_<CascadeFit>(mod, "CascadeFit")
        .def(py::init<>())
        .def_readwrite("k", &CascadeFit::k_a)
        .def_readwrite("m", &CascadeFit::m_a)
        .def_readwrite("xi", &CascadeFit::xi)
        .def_readwrite("omega", &CascadeFit::omega)
        .def_readwrite("M", &CascadeFit::m_elements)
        .def("pdf", [](const CascadeFit& f, double x) { return cascade_pdf(f, x); },
             py::arg("x"))
        .def("cdf", [](const CascadeFit& f, double x) { return cascade_cdf(f, x); },
             py::arg("x"))
        .def("to_json", [](const CascadeFit& f) { return fit_to_json(f); })
        .def_static("from_json",
                    [](const std::string& text) { return fit_from_json(text); },
                    py::arg("text"))
        .def("__repr__", [](const CascadeFit& f) {
            return "CascadeFit(k=" + std::to_string(f.k_a) +
                   ", m=" + std::to_string(f.m_a) + ", xi=" + std::to_string(f.xi) +
                   ", M=" + std::to_string(f.m_elements) + ")";
        });

    mod.def("rice_channel", &mg_from_rice, py::arg("k_factor"),
            py::arg("n_terms") = 20,
            "Mixture-gamma model of a unit-power Rice envelope (linear K factor).");
    mod.def("nakagami_channel", &mg_from_nakagami, py::arg("m"),
            "Exact mixture-gamma model of a unit-power Nakagami-m envelope.");
    mod.def("load_channel", &mg_load, py::arg("path"),
            "Read a mixture-gamma model from a JSON file.");

    mod.def("fit_cascade", &fit_cascade_from_channels, py::arg("hop_a"),
            py::arg("hop_r"), py::arg("m_elements"),
            "Generalized-K fit of the coherent sum of m_elements two-hop products.");
    mod.def("cascade_moments", &cascade_moments, py::arg("hop_a"), py::arg("hop_r"),
            py::arg("m_elements"), py::arg("l_max"),
            "Raw moments 0..l_max of the combined amplitude.");

    mod.def(
        "prob_zero_secrecy",
        [](const CascadeFit& fit, const MixtureGamma& mg_e, double rho_b,
           double rho_e, const std::string& method, bool paper_literal) {
            return prob_zero_secrecy(make_config(fit, mg_e, rho_b, rho_e, paper_literal),
                                     parse_eval_method(method));
        },
        py::arg("fit"), py::arg("eve"), py::arg("rho_b"), py::arg("rho_e"),
        py::arg("method") = "closed", py::arg("paper_literal") = false,
        "P(C_E >= C_B) for linear link budgets.");
    mod.def(
        "ergodic_capacity_b",
        [](const CascadeFit& fit, const MixtureGamma& mg_e, double rho_b,
           double rho_e, const std::string& method) {
            return ergodic_capacity_b(make_config(fit, mg_e, rho_b, rho_e, false),
                                      parse_eval_method(method));
        },
        py::arg("fit"), py::arg("eve"), py::arg("rho_b"), py::arg("rho_e"),
        py::arg("method") = "closed");
    mod.def(
        "ergodic_capacity_e",
        [](const CascadeFit& fit, const MixtureGamma& mg_e, double rho_b,
           double rho_e, const std::string& method, bool paper_literal) {
            return ergodic_capacity_e(make_config(fit, mg_e, rho_b, rho_e, paper_literal),
                                      parse_eval_method(method));
        },
        py::arg("fit"), py::arg("eve"), py::arg("rho_b"), py::arg("rho_e"),
        py::arg("method") = "closed", py::arg("paper_literal") = false);
    mod.def(
        "avg_secrecy_rate_partial",
        [](const CascadeFit& fit, const MixtureGamma& mg_e, double rho_b,
           double rho_e, bool paper_literal) {
            return avg_secrecy_rate_partial(
                make_config(fit, mg_e, rho_b, rho_e, paper_literal));
        },
        py::arg("fit"), py::arg("eve"), py::arg("rho_b"), py::arg("rho_e"),
        py::arg("paper_literal") = false, "E[C_B] - E[C_E]; may be negative.");
    mod.def(
        "avg_secrecy_rate_full",
        [](const CascadeFit& fit, const MixtureGamma& mg_e, double rho_b,
           double rho_e, const std::string& method, bool paper_literal) {
            return avg_secrecy_rate_full(make_config(fit, mg_e, rho_b, rho_e, paper_literal),
                                         parse_eval_method(method));
        },
        py::arg("fit"), py::arg("eve"), py::arg("rho_b"), py::arg("rho_e"),
        py::arg("method") = "closed", py::arg("paper_literal") = false,
        "E[max(C_B - C_E, 0)] (corrected variant).");

    py::class_<McEstimate>(mod, "McEstimate")
        .def_readonly("value", &McEstimate::value)
        .def_readonly("std_error", &McEstimate::std_error)
        .def_readonly("n_samples", &McEstimate::n_samples)
        .def_readonly("seed", &McEstimate::seed)
        .def("__repr__", [](const McEstimate& e) {
            return "McEstimate(value=" + std::to_string(e.value) +
                   ", std_error=" + std::to_string(e.std_error) + ")";
        });

    py::class_<McMetrics>(mod, "McMetrics")
        .def_readonly("p_leak", &McMetrics::p_leak)
        .def_readonly("c_s_full", &McMetrics::c_s_full)
        .def_readonly("r_s_partial", &McMetrics::r_s_partial)
        .def_readonly("capacity_b", &McMetrics::capacity_b)
        .def_readonly("capacity_e", &McMetrics::capacity_e)
        .def_readonly("leak_events", &McMetrics::leak_events);

    mod.def(
        "simulate",
        [](const MixtureGamma& hop_a, const MixtureGamma& hop_r,
           std::size_t m_elements, const MixtureGamma& mg_e, double rho_b,
           double rho_e, std::uint64_t n_samples, std::uint64_t seed,
           unsigned workers) {
            LinkBudget budget;
            budget.rho_b = rho_b;
            budget.rho_e = rho_e;
            py::gil_scoped_release release;
            return estimate_metrics(hop_a, hop_r, m_elements, mg_e, budget,
                                    n_samples, seed, workers);
        },
        py::arg("hop_a"), py::arg("hop_r"), py::arg("m_elements"), py::arg("eve"),
        py::arg("rho_b"), py::arg("rho_e"), py::arg("n_samples") = 1000000,
        py::arg("seed") = 12345, py::arg("workers") = 0,
        "Monte Carlo estimates of all metrics; bit-identical for any worker count.");

    mod.def(
        "meijer_g",
        [](std::size_t m, std::size_t n, const std::vector<double>& a,
           const std::vector<double>& b, double x) {
            MeijerGSpec spec;
            spec.m = m;
            spec.n = n;
            spec.a = a;
            spec.b = b;
            return meijer_g(spec, x);
        },
        py::arg("m"), py::arg("n"), py::arg("a"), py::arg("b"), py::arg("x"),
        "Meijer G function for x > 0.");
}

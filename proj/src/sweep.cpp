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

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "rissec/errors.hpp"
#include "rissec/sweep.hpp"
#include "rissec/version.hpp"

namespace rissec {

namespace {

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

struct PointConfig {
    MixtureGamma hop;
    MixtureGamma eve;
    std::size_t m_elements = 0;
    double kr_db = 0.0;  // NaN for custom hop model
    double eve_m = 0.0;  // NaN for custom eavesdropper model
    double rho_b_db = 0.0;
    double rho_e_db = 0.0;
};

PointConfig assemble_point(const SweepSpec& spec, double sweep_value) {
    PointConfig pt;
    pt.m_elements = spec.m_elements;
    pt.rho_b_db = spec.rho_b_db;
    pt.rho_e_db = spec.rho_e_db;

    switch (spec.sweep_var) {
    case SweepVariable::rho_b_db:
        pt.rho_b_db = sweep_value;
        break;
    case SweepVariable::rho_ratio_db:
        // Sweep the advantage of the legitimate link over the eavesdropper.
        pt.rho_b_db = spec.rho_e_db + sweep_value;
        break;
    case SweepVariable::m_elements: {
        const double rounded = std::round(sweep_value);
        if (!(rounded >= 1.0) || std::fabs(rounded - sweep_value) > 1e-9)
            throw std::invalid_argument(
                "sweep over M requires positive integer values");
        pt.m_elements = static_cast<std::size_t>(rounded);
        break;
    }
    }

    if (!spec.hop_channel.terms.empty()) {
        pt.hop = spec.hop_channel;
        pt.kr_db = std::numeric_limits<double>::quiet_NaN();
    } else {
        pt.hop = mg_from_rice(db_to_linear(spec.kr_db), spec.n_terms);
        pt.kr_db = spec.kr_db;
    }
    if (!spec.eve_channel.terms.empty()) {
        pt.eve = spec.eve_channel;
        pt.eve_m = std::numeric_limits<double>::quiet_NaN();
    } else {
        pt.eve = mg_from_nakagami(spec.eve_m);
        pt.eve_m = spec.eve_m;
    }
    return pt;
}

double eval_analytic(Metric metric, const SecrecyConfig& cfg, EvalMethod method) {
    switch (metric) {
    case Metric::p_leak:
        return prob_zero_secrecy(cfg, method);
    case Metric::c_s_full:
        return avg_secrecy_rate_full(cfg, method);
    case Metric::r_s_partial:
        return ergodic_capacity_b(cfg, method) - ergodic_capacity_e(cfg, method);
    case Metric::capacity_b:
        return ergodic_capacity_b(cfg, method);
    case Metric::capacity_e:
        return ergodic_capacity_e(cfg, method);
    }
    throw std::logic_error("eval_analytic: unknown metric");
}

McEstimate pick_mc_estimate(Metric metric, const McMetrics& mm) {
    switch (metric) {
    case Metric::p_leak:
        return mm.p_leak;
    case Metric::c_s_full:
        return mm.c_s_full;
    case Metric::r_s_partial:
        return mm.r_s_partial;
    case Metric::capacity_b:
        return mm.capacity_b;
    case Metric::capacity_e:
        return mm.capacity_e;
    }
    throw std::logic_error("pick_mc_estimate: unknown metric");
}

std::string format_number(double v) {
    if (std::isnan(v))
        return "nan";
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

} // namespace

std::string to_string(Metric m) {
    switch (m) {
    case Metric::p_leak:
        return "p_leak";
    case Metric::c_s_full:
        return "c_s_full";
    case Metric::r_s_partial:
        return "r_s_partial";
    case Metric::capacity_b:
        return "capacity_b";
    case Metric::capacity_e:
        return "capacity_e";
    }
    return "?";
}

std::string to_string(SweepVariable v) {
    switch (v) {
    case SweepVariable::rho_b_db:
        return "rho_b_db";
    case SweepVariable::rho_ratio_db:
        return "rho_ratio_db";
    case SweepVariable::m_elements:
        return "M";
    }
    return "?";
}

std::string to_string(SweepMethod m) {
    switch (m) {
    case SweepMethod::closed:
        return "closed";
    case SweepMethod::quadrature:
        return "quadrature";
    case SweepMethod::mc:
        return "mc";
    }
    return "?";
}

Metric parse_metric(const std::string& s) {
    if (s == "p_leak")
        return Metric::p_leak;
    if (s == "c_s_full")
        return Metric::c_s_full;
    if (s == "r_s_partial")
        return Metric::r_s_partial;
    if (s == "capacity_b")
        return Metric::capacity_b;
    if (s == "capacity_e")
        return Metric::capacity_e;
    throw std::invalid_argument(
        "unknown metric '" + s +
        "' (expected p_leak, c_s_full, r_s_partial, capacity_b, or capacity_e)");
}

SweepVariable parse_sweep_variable(const std::string& s) {
    if (s == "rho_b_db")
        return SweepVariable::rho_b_db;
    if (s == "rho_ratio_db")
        return SweepVariable::rho_ratio_db;
    if (s == "M")
        return SweepVariable::m_elements;
    throw std::invalid_argument("unknown sweep variable '" + s +
                                "' (expected rho_b_db, rho_ratio_db, or M)");
}

SweepMethod parse_sweep_method(const std::string& s) {
    if (s == "closed")
        return SweepMethod::closed;
    if (s == "quadrature")
        return SweepMethod::quadrature;
    if (s == "mc")
        return SweepMethod::mc;
    throw std::invalid_argument("unknown method '" + s +
                                "' (expected closed, quadrature, or mc)");
}

SweepResult run_sweep(const SweepSpec& spec) {
    if (spec.sweep_values.empty())
        throw std::invalid_argument("sweep has no values");
    if (spec.methods.empty())
        throw std::invalid_argument("sweep has no methods");

    SweepResult out;
    for (double sweep_value : spec.sweep_values) {
        const PointConfig pt = assemble_point(spec, sweep_value);

        SecrecyConfig cfg;
        cfg.mg_e = pt.eve;
        cfg.budget.rho_b = db_to_linear(pt.rho_b_db);
        cfg.budget.rho_e = db_to_linear(pt.rho_e_db);
        cfg.variant = spec.variant;

        bool need_analytic = false;
        for (SweepMethod m : spec.methods)
            need_analytic = need_analytic || m != SweepMethod::mc;
        if (need_analytic)
            cfg.fit = fit_cascade_from_channels(pt.hop, pt.hop, pt.m_elements);

        for (SweepMethod method : spec.methods) {
            SweepRow row;
            row.metric = to_string(spec.metric);
            row.method = to_string(method);
            row.sweep_var = to_string(spec.sweep_var);
            row.sweep_value = sweep_value;
            row.m_elements = pt.m_elements;
            row.kr_db = pt.kr_db;
            row.eve_m = pt.eve_m;
            row.rho_b_db = pt.rho_b_db;
            row.rho_e_db = pt.rho_e_db;

            if (method == SweepMethod::mc) {
                const McMetrics mm = estimate_metrics(
                    pt.hop, pt.hop, pt.m_elements, pt.eve, cfg.budget,
                    spec.mc.n_samples, spec.mc.seed);
                const McEstimate est = pick_mc_estimate(spec.metric, mm);
                row.value = est.value;
                row.std_error = est.std_error;
                row.n_samples = est.n_samples;
                row.seed = est.seed;
                row.is_mc = true;
                if (spec.metric == Metric::p_leak && mm.leak_events < 100) {
                    std::ostringstream w;
                    w << "p_leak at " << row.sweep_var << " = " << sweep_value
                      << ": only " << mm.leak_events << " leak events in "
                      << est.n_samples
                      << " samples; the estimate is unreliable, increase --samples";
                    out.warnings.push_back(w.str());
                }
            } else {
                const EvalMethod em = method == SweepMethod::closed
                                          ? EvalMethod::closed_form
                                          : EvalMethod::quadrature;
                row.value = eval_analytic(spec.metric, cfg, em);
            }
            out.rows.push_back(std::move(row));
        }
    }
    return out;
}

std::string rows_to_csv(const std::vector<SweepRow>& rows, bool version_header) {
    std::ostringstream os;
    if (version_header)
        os << "# rissec " << version_string << "\n";
    os << "metric,method,sweep_var,sweep_value,M,K_r_db,m,rho_b_db,rho_e_db,"
          "value,std_error,n_samples,seed\n";
    for (const SweepRow& r : rows) {
        os << r.metric << ',' << r.method << ',' << r.sweep_var << ','
           << format_number(r.sweep_value) << ',' << r.m_elements << ','
           << format_number(r.kr_db) << ',' << format_number(r.eve_m) << ','
           << format_number(r.rho_b_db) << ',' << format_number(r.rho_e_db) << ','
           << format_number(r.value) << ','
           << (r.is_mc ? format_number(r.std_error) : std::string())
           << ',' << (r.is_mc ? std::to_string(r.n_samples) : std::string())
           << ',' << (r.is_mc ? std::to_string(r.seed) : std::string()) << "\n";
    }
    return os.str();
}

std::string rows_to_ndjson(const std::vector<SweepRow>& rows) {
    std::ostringstream os;
    for (const SweepRow& r : rows) {
        nlohmann::json j;
        j["metric"] = r.metric;
        j["method"] = r.method;
        j["sweep_var"] = r.sweep_var;
        j["sweep_value"] = r.sweep_value;
        j["M"] = r.m_elements;
        if (std::isnan(r.kr_db))
            j["K_r_db"] = nullptr;
        else
            j["K_r_db"] = r.kr_db;
        if (std::isnan(r.eve_m))
            j["m"] = nullptr;
        else
            j["m"] = r.eve_m;
        j["rho_b_db"] = r.rho_b_db;
        j["rho_e_db"] = r.rho_e_db;
        j["value"] = r.value;
        if (r.is_mc) {
            j["std_error"] = r.std_error;
            j["n_samples"] = r.n_samples;
            j["seed"] = r.seed;
        } else {
            j["std_error"] = nullptr;
            j["n_samples"] = nullptr;
            j["seed"] = nullptr;
        }
        os << j.dump() << "\n";
    }
    return os.str();
}

} // namespace rissec

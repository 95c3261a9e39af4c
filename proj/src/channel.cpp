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

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "rissec/channel.hpp"
#include "rissec/errors.hpp"
#include "rissec/specfun.hpp"

namespace rissec {

void validate_mixture(const MixtureGamma& mg, double norm_tol) {
    if (mg.terms.empty())
        throw std::invalid_argument("mixture-gamma model has no terms");
    if (!(mg.c > 0.0) || !std::isfinite(mg.c))
        throw std::invalid_argument("mixture-gamma rate c must be positive and finite");
    for (const MgTerm& t : mg.terms) {
        if (!std::isfinite(t.a) || !(t.b > 0.0) || !std::isfinite(t.b)) {
            std::ostringstream msg;
            msg << "mixture-gamma term (a = " << t.a << ", b = " << t.b
                << ") is invalid: a must be finite and b > 0";
            throw std::invalid_argument(msg.str());
        }
    }
    // The envelope density must integrate to one:
    //   integral 2 a_n x^(2 b_n - 1) exp(-c x^2) dx = a_n c^(-b_n) Gamma(b_n).
    double norm = 0.0;
    for (const MgTerm& t : mg.terms)
        norm += t.a * std::exp(-t.b * std::log(mg.c) + std::lgamma(t.b));
    if (std::fabs(norm - 1.0) > norm_tol) {
        std::ostringstream msg;
        msg << "mixture-gamma model is not normalized: weight sum = " << norm
            << " (|deviation| = " << std::fabs(norm - 1.0) << " exceeds tolerance "
            << norm_tol << ")";
        throw std::invalid_argument(msg.str());
    }
}

MixtureGamma mg_from_rice(double k_factor, std::size_t n_terms) {
    if (!(k_factor >= 0.0) || !std::isfinite(k_factor))
        throw std::invalid_argument("Rice K factor must be finite and >= 0");
    if (n_terms < 1 || n_terms > 60)
        throw std::invalid_argument("Rice expansion order must be in [1, 60]");

    // Envelope normalized to E[X^2] = 1. The series expansion of the Rice
    // density in the signal-to-scatter ratio K yields gamma components with
    // integer shapes b_n = n, common rate c = 1 + K, and Poisson-like weights
    // u_n = K^(n-1) e^(-K) / (n-1)!, renormalized over the retained terms.
    MixtureGamma mg;
    mg.c = 1.0 + k_factor;
    mg.label = "rice";
    const double log_c = std::log(mg.c);
    const double log_k = k_factor > 0.0 ? std::log(k_factor) : 0.0;

    std::vector<double> log_u(n_terms);
    double max_log_u = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n_terms; ++i) {
        const double n = static_cast<double>(i + 1);
        log_u[i] = k_factor > 0.0
                       ? (n - 1.0) * log_k - k_factor - std::lgamma(n)
                       : (i == 0 ? 0.0 : -std::numeric_limits<double>::infinity());
        max_log_u = std::max(max_log_u, log_u[i]);
    }
    double weight_sum = 0.0;
    for (std::size_t i = 0; i < n_terms; ++i)
        weight_sum += std::exp(log_u[i] - max_log_u);
    const double log_norm = max_log_u + std::log(weight_sum);

    mg.terms.resize(n_terms);
    for (std::size_t i = 0; i < n_terms; ++i) {
        const double n = static_cast<double>(i + 1);
        mg.terms[i].b = n;
        // a_n = u_n c^n / (Gamma(n) * sum u) so that the density normalizes.
        mg.terms[i].a =
            std::exp(log_u[i] + n * log_c - std::lgamma(n) - log_norm);
    }
    return mg;
}

MixtureGamma mg_from_nakagami(double m) {
    if (!(m >= 0.5) || !std::isfinite(m))
        throw std::invalid_argument("Nakagami shape m must be finite and >= 0.5");
    // Nakagami-m with unit power is a single gamma component: a = m^m / Gamma(m),
    // b = m, c = m. Exact, no truncation.
    MixtureGamma mg;
    mg.c = m;
    mg.label = "nakagami";
    mg.terms.push_back({std::exp(m * std::log(m) - std::lgamma(m)), m});
    return mg;
}

double mg_pdf(const MixtureGamma& mg, double x) {
    if (!(x >= 0.0))
        throw std::invalid_argument("mg_pdf: x must be >= 0");
    if (x == 0.0) {
        // Finite only when every shape satisfies 2b - 1 >= 1; report the limit.
        double v = 0.0;
        for (const MgTerm& t : mg.terms)
            if (t.b == 0.5)
                v += 2.0 * t.a;
        return v;
    }
    const double log_x = std::log(x);
    double v = 0.0;
    for (const MgTerm& t : mg.terms)
        v += 2.0 * t.a * std::exp((2.0 * t.b - 1.0) * log_x - mg.c * x * x);
    return v;
}

double mg_cdf(const MixtureGamma& mg, double x) {
    if (!(x >= 0.0))
        throw std::invalid_argument("mg_cdf: x must be >= 0");
    if (x == 0.0)
        return 0.0;
    double v = 0.0;
    for (const MgTerm& t : mg.terms)
        v += t.a * std::exp(-t.b * std::log(mg.c)) *
             lower_incomplete_gamma(t.b, mg.c * x * x);
    return std::clamp(v, 0.0, 1.0);
}

double mg_moment(const MixtureGamma& mg, double order) {
    if (!(order >= 0.0))
        throw std::invalid_argument("mg_moment: order must be >= 0");
    // E[X^l] = sum a_n c^(-(b_n + l/2)) Gamma(b_n + l/2).
    double v = 0.0;
    for (const MgTerm& t : mg.terms)
        v += t.a * std::exp(-(t.b + 0.5 * order) * std::log(mg.c) +
                            std::lgamma(t.b + 0.5 * order));
    return v;
}

std::string mg_to_json(const MixtureGamma& mg) {
    nlohmann::json j;
    j["c"] = mg.c;
    j["label"] = mg.label;
    j["terms"] = nlohmann::json::array();
    for (const MgTerm& t : mg.terms)
        j["terms"].push_back({{"a", t.a}, {"b", t.b}});
    return j.dump(2);
}

MixtureGamma mg_from_json(const std::string& text) {
    MixtureGamma mg;
    try {
        const nlohmann::json j = nlohmann::json::parse(text);
        mg.c = j.at("c").get<double>();
        if (j.contains("label"))
            mg.label = j.at("label").get<std::string>();
        for (const auto& jt : j.at("terms")) {
            MgTerm t;
            t.a = jt.at("a").get<double>();
            t.b = jt.at("b").get<double>();
            mg.terms.push_back(t);
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(
            std::string("mixture-gamma JSON must look like "
                        "{\"terms\": [{\"a\": ..., \"b\": ...}], \"c\": ...}: ") +
            e.what());
    }
    validate_mixture(mg);
    return mg;
}

MixtureGamma mg_load(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open channel model file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return mg_from_json(buf.str());
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error("channel model file " + path + ": " + e.what());
    }
}

} // namespace rissec

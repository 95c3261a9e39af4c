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
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "rissec/cascade.hpp"
#include "rissec/errors.hpp"
#include "rissec/specfun.hpp"

namespace rissec {

double product_moment(const MixtureGamma& mg_a, const MixtureGamma& mg_r, double order) {
    return mg_moment(mg_a, order) * mg_moment(mg_r, order);
}

std::vector<double> cascade_moments(const MixtureGamma& mg_a, const MixtureGamma& mg_r,
                                    std::size_t m_elements, std::size_t l_max) {
    if (m_elements == 0)
        throw std::invalid_argument("cascade_moments: m_elements must be >= 1");

    std::vector<double> chi(l_max + 1);
    for (std::size_t l = 0; l <= l_max; ++l)
        chi[l] = product_moment(mg_a, mg_r, static_cast<double>(l));

    // Moments of a sum of independent nonnegative variables:
    //   mu_{S_j}(l) = sum_i C(l, i) mu_{S_{j-1}}(l - i) chi(i).
    std::vector<std::vector<double>> binom(l_max + 1, std::vector<double>(l_max + 1, 0.0));
    for (std::size_t l = 0; l <= l_max; ++l) {
        binom[l][0] = 1.0;
        for (std::size_t i = 1; i <= l; ++i)
            binom[l][i] = binom[l - 1][i - 1] + (i <= l - 1 ? binom[l - 1][i] : 0.0);
    }

    std::vector<double> mu = chi;
    for (std::size_t j = 2; j <= m_elements; ++j) {
        std::vector<double> next(l_max + 1, 0.0);
        for (std::size_t l = 0; l <= l_max; ++l) {
            double acc = 0.0;
            for (std::size_t i = 0; i <= l; ++i)
                acc += binom[l][i] * mu[l - i] * chi[i];
            next[l] = acc;
        }
        mu = std::move(next);
        if (!std::isfinite(mu[l_max]) || mu[l_max] > 1e290) {
            std::ostringstream msg;
            msg << "cascade_moments: moment of order " << l_max
                << " exceeds double range at " << j << " summed elements";
            throw NumericsError(msg.str());
        }
    }
    return mu;
}

CascadeFit fit_cascade(double mu2, double mu4, double mu6, std::size_t m_elements) {
    if (m_elements == 0)
        throw std::invalid_argument("fit_cascade: m_elements must be >= 1");
    if (!(mu2 > 0.0) || !(mu4 > 0.0) || !(mu6 > 0.0)) {
        std::ostringstream msg;
        msg << "fit_cascade: moments must be positive (mu2 = " << mu2
            << ", mu4 = " << mu4 << ", mu6 = " << mu6 << ")";
        throw std::invalid_argument(msg.str());
    }
    if (!(mu4 > mu2 * mu2)) {
        std::ostringstream msg;
        msg << "fit_cascade: inconsistent moments, mu4 = " << mu4
            << " must exceed mu2^2 = " << mu2 * mu2;
        throw std::invalid_argument(msg.str());
    }

    // Shape pair (k, m) solves a quadratic assembled from the even moments.
    const double a_c = mu6 * mu2 + mu2 * mu2 * mu4 - 2.0 * mu4 * mu4;
    const double b_c = mu6 * mu2 - 4.0 * mu4 * mu4 + 3.0 * mu2 * mu2 * mu4;
    const double c_c = 2.0 * mu2 * mu2 * mu4;
    const double disc = b_c * b_c - 4.0 * a_c * c_c;
    if (!(disc >= 0.0)) {
        std::ostringstream msg;
        msg << "fit_cascade: moment triple (mu2 = " << mu2 << ", mu4 = " << mu4
            << ", mu6 = " << mu6 << ") gives negative discriminant " << disc;
        throw std::invalid_argument(msg.str());
    }
    const double root = std::sqrt(disc);
    const double r1 = (-b_c + root) / (2.0 * a_c);
    const double r2 = (-b_c - root) / (2.0 * a_c);
    if (!(r1 > 0.0) || !(r2 > 0.0)) {
        std::ostringstream msg;
        msg << "fit_cascade: shape roots " << r1 << " and " << r2
            << " must both be positive (mu2 = " << mu2 << ", mu4 = " << mu4
            << ", mu6 = " << mu6 << ")";
        throw std::invalid_argument(msg.str());
    }

    CascadeFit fit;
    fit.k_a = std::max(r1, r2);
    fit.m_a = std::min(r1, r2);
    fit.omega = mu2;
    fit.xi = std::sqrt(fit.k_a * fit.m_a / fit.omega);
    fit.m_elements = m_elements;
    return fit;
}

CascadeFit fit_cascade_from_channels(const MixtureGamma& mg_a, const MixtureGamma& mg_r,
                                     std::size_t m_elements) {
    const std::vector<double> mu = cascade_moments(mg_a, mg_r, m_elements, 6);
    return fit_cascade(mu[2], mu[4], mu[6], m_elements);
}

double cascade_pdf(const CascadeFit& fit, double x) {
    if (!(x >= 0.0))
        throw std::invalid_argument("cascade_pdf: x must be >= 0");
    if (x == 0.0)
        return 0.0;
    const double k = fit.k_a;
    const double m = fit.m_a;
    const double log_pdf = std::log(4.0) + (k + m) * std::log(fit.xi) +
                           (k + m - 1.0) * std::log(x) - std::lgamma(k) -
                           std::lgamma(m) + log_bessel_k(k - m, 2.0 * fit.xi * x);
    return std::exp(log_pdf);
}

double cascade_cdf(const CascadeFit& fit, double x) {
    if (!(x >= 0.0))
        throw std::invalid_argument("cascade_cdf: x must be >= 0");
    if (x == 0.0)
        return 0.0;
    const double z = fit.xi * x * fit.xi * x;
    // F ~ z^min(k,m) near zero and 1 - F decays exponentially for large z;
    // outside these cutoffs the value is 0 or 1 to far beyond double precision.
    if (z < 1e-200)
        return 0.0;
    if (z > 1e200)
        return 1.0;
    // F(x) = G^{2,1}_{1,3}((xi x)^2 | 1; k, m, 0) / (Gamma(k) Gamma(m)).
    MeijerGSpec g;
    g.m = 2;
    g.n = 1;
    g.a = {1.0};
    g.b = {fit.k_a, fit.m_a, 0.0};
    const LogScaled v = meijer_g_log(g, z);
    if (v.is_zero())
        return 0.0;
    const double cdf =
        v.sign * std::exp(v.log_abs - std::lgamma(fit.k_a) - std::lgamma(fit.m_a));
    if (cdf < -1e-9 || cdf > 1.0 + 1e-9) {
        std::ostringstream msg;
        msg << "cascade_cdf: value " << cdf << " outside [0, 1] at x = " << x;
        throw NumericsError(msg.str());
    }
    return std::clamp(cdf, 0.0, 1.0);
}

std::string fit_to_json(const CascadeFit& fit) {
    nlohmann::json j;
    j["k"] = fit.k_a;
    j["m"] = fit.m_a;
    j["xi"] = fit.xi;
    j["omega"] = fit.omega;
    j["M"] = fit.m_elements;
    return j.dump(2);
}

CascadeFit fit_from_json(const std::string& text) {
    CascadeFit fit;
    try {
        const nlohmann::json j = nlohmann::json::parse(text);
        fit.k_a = j.at("k").get<double>();
        fit.m_a = j.at("m").get<double>();
        fit.xi = j.at("xi").get<double>();
        fit.omega = j.at("omega").get<double>();
        fit.m_elements = j.at("M").get<std::size_t>();
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(
            std::string("cascade fit JSON must look like "
                        "{\"k\": .., \"m\": .., \"xi\": .., \"omega\": .., \"M\": ..}: ") +
            e.what());
    }
    if (!(fit.k_a > 0.0) || !(fit.m_a > 0.0) || !(fit.xi > 0.0) || !(fit.omega > 0.0))
        throw std::invalid_argument("cascade fit JSON: k, m, xi, omega must be positive");
    return fit;
}

} // namespace rissec

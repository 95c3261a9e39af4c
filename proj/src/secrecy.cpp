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
//
// Secrecy metrics of the two-link model. The legitimate SNR is
// gamma_b = rho_b A^2 with A the generalized-K combined amplitude; the
// eavesdropper SNR is gamma_e = rho_e X^2 with X mixture-gamma. Closed forms
// reduce to univariate and two-variable Mellin-Barnes integrals; quadrature
// paths integrate the same densities directly and must agree.

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "rissec/errors.hpp"
#include "rissec/quadrature.hpp"
#include "rissec/secrecy.hpp"
#include "rissec/specfun.hpp"

namespace rissec {

namespace {

constexpr double k_ln2 = 0.69314718055994530942;

struct Model {
    double k = 0.0;
    double m = 0.0;
    double h = 0.0;     // (k + m) / 2
    double delta = 0.0; // (k - m) / 2
    double xi = 0.0;
    double lg_km = 0.0; // lgamma(k) + lgamma(m)
    double rho_b = 0.0;
    double rho_e = 0.0;
    double c_eff = 0.0; // eavesdropper mixture rate entering the SNR law
};

Model unpack(const SecrecyConfig& cfg) {
    if (!(cfg.budget.rho_b > 0.0) || !(cfg.budget.rho_e > 0.0))
        throw std::invalid_argument("link budget: rho_b and rho_e must be > 0");
    if (!(cfg.fit.k_a > 0.0) || !(cfg.fit.m_a > 0.0) || !(cfg.fit.xi > 0.0))
        throw std::invalid_argument("cascade fit: k, m, xi must be > 0");
    if (cfg.mg_e.terms.empty())
        throw std::invalid_argument("eavesdropper channel model has no terms");

    Model md;
    md.k = cfg.fit.k_a;
    md.m = cfg.fit.m_a;
    md.h = 0.5 * (md.k + md.m);
    md.delta = 0.5 * (md.k - md.m);
    md.xi = cfg.fit.xi;
    md.lg_km = std::lgamma(md.k) + std::lgamma(md.m);
    md.rho_b = cfg.budget.rho_b;
    md.rho_e = cfg.budget.rho_e;
    md.c_eff = cfg.variant == AnalysisVariant::corrected ? cfg.mg_e.c : 1.0;
    return md;
}

// Mixture weight of term n in the squared-envelope gamma mixture, without
// the Gamma(b_n) factor: w_n = a_n c^(-b_n).
double term_weight(const MixtureGamma& mg, const MgTerm& t) {
    return t.a * std::exp(-t.b * std::log(mg.c));
}

double clamp_probability(double p, const char* what) {
    if (p < -1e-6 || p > 1.0 + 1e-6) {
        std::ostringstream msg;
        msg << what << ": value " << p << " is outside [0, 1] beyond tolerance";
        throw ConsistencyError(msg.str());
    }
    return std::clamp(p, 0.0, 1.0);
}

// Upper integration limit for envelope-domain integrals: grow until the
// combined-amplitude density has decayed past any useful contribution.
double envelope_cutoff(const SecrecyConfig& cfg) {
    const double scale = std::sqrt(std::max(cfg.fit.omega, 1e-12));
    double hi = 2.0 * scale;
    for (int i = 0; i < 200; ++i) {
        if (cascade_pdf(cfg.fit, hi) < 1e-18)
            return hi;
        hi *= 1.5;
    }
    throw NumericsError("envelope integral: density tail does not decay");
}

double capacity_b_closed(const Model& md) {
    MeijerGSpec g;
    g.m = 4;
    g.n = 1;
    g.a = {-md.h, 1.0 - md.h};
    g.b = {md.delta, -md.delta, -md.h, -md.h};
    const LogScaled v = meijer_g_log(g, md.xi * md.xi / md.rho_b);
    if (v.is_zero())
        return 0.0;
    const double log_pref = 2.0 * md.h * std::log(md.xi) -
                            md.h * std::log(md.rho_b) - md.lg_km -
                            std::log(k_ln2);
    return v.sign * std::exp(v.log_abs + log_pref);
}

double capacity_b_quadrature(const SecrecyConfig& cfg, const Model& md) {
    const double scale = std::sqrt(std::max(cfg.fit.omega, 1e-12));
    const double hi = envelope_cutoff(cfg);
    auto f = [&](double a) {
        return std::log1p(md.rho_b * a * a) / k_ln2 * cascade_pdf(cfg.fit, a);
    };
    double total = integrate_endpoint_singular(f, 0.0, 0.5 * scale);
    total += integrate_finite(f, 0.5 * scale, std::min(2.0 * scale, hi));
    if (hi > 2.0 * scale)
        total += integrate_finite(f, 2.0 * scale, hi);
    return total;
}

double capacity_e_closed(const SecrecyConfig& cfg, const Model& md) {
    LogScaled acc = LogScaled::zero();
    if (cfg.variant == AnalysisVariant::corrected) {
        // E[ln(1 + X)] per gamma component of rate r = c / rho_e.
        const double r = md.c_eff / md.rho_e;
        for (const MgTerm& t : cfg.mg_e.terms) {
            MeijerGSpec g;
            g.m = 3;
            g.n = 1;
            g.a = {0.0, 1.0};
            g.b = {t.b, 0.0, 0.0};
            acc += LogScaled::from_value(term_weight(cfg.mg_e, t)) *
                   meijer_g_log(g, r);
        }
    } else {
        // Published reference form, kept verbatim for curve reproduction; it
        // does not match the model's direct integral (see the corrected path).
        const double z = md.rho_e / cfg.mg_e.c;
        for (const MgTerm& t : cfg.mg_e.terms) {
            MeijerGSpec g;
            g.m = 1;
            g.n = 4;
            g.a = {0.0, 0.0, 1.0 - t.b, -t.b};
            g.b = {0.0, -t.b, -1.0};
            acc += LogScaled::from_value(term_weight(cfg.mg_e, t)) *
                   meijer_g_log(g, z);
        }
    }
    if (acc.is_zero())
        return 0.0;
    return acc.sign * std::exp(acc.log_abs - std::log(k_ln2));
}

double capacity_e_quadrature(const SecrecyConfig& cfg, const Model& md) {
    const double r = md.c_eff / md.rho_e;
    auto f = [&](double x) {
        return std::log1p(x) / k_ln2 * gamma_e_pdf(cfg, x);
    };
    return integrate_half_line_exp(f, r);
}

struct ClosedFullTerms {
    double i1 = 0.0; // E[log2(1 + gamma_b) F_E(gamma_b)]
    double i2 = 0.0; // E[log2(1 + gamma_e) F_B(gamma_e)]
};

ClosedFullTerms full_rate_closed_terms(const SecrecyConfig& cfg, const Model& md) {
    const double x = md.rho_e / md.c_eff;
    const double y = md.xi * md.xi * md.rho_e / (md.c_eff * md.rho_b);

    LogScaled acc1 = LogScaled::zero();
    LogScaled acc2 = LogScaled::zero();
    for (const MgTerm& t : cfg.mg_e.terms) {
        const LogScaled w = LogScaled::from_value(term_weight(cfg.mg_e, t));

        BivariateGSpec g1;
        g1.outer = {1, 1, {1.0 - t.b - md.h, 1.0 - md.h}, {-md.h}};
        g1.block_x = {1, 2, {1.0, 1.0}, {1.0, 0.0}};
        g1.block_y = {2, 0, {}, {md.delta, -md.delta}};
        acc1 += w * bivariate_meijer_g_log(g1, x, y);

        BivariateGSpec g2;
        g2.outer = {0, 1, {1.0 - t.b}, {}};
        g2.block_x = {1, 2, {1.0, 1.0}, {1.0, 0.0}};
        g2.block_y = {2, 1, {1.0}, {md.k, md.m, 0.0}};
        acc2 += w * bivariate_meijer_g_log(g2, x, y);
    }

    const double log_pref = -std::log(k_ln2) - md.lg_km;
    ClosedFullTerms out;
    if (!acc1.is_zero())
        out.i1 = acc1.sign *
                 std::exp(acc1.log_abs + md.h * std::log(y) + log_pref);
    if (!acc2.is_zero())
        out.i2 = acc2.sign * std::exp(acc2.log_abs + log_pref);
    return out;
}

ClosedFullTerms full_rate_quadrature_terms(const SecrecyConfig& cfg, const Model& md) {
    ClosedFullTerms out;

    const double scale = std::sqrt(std::max(cfg.fit.omega, 1e-12));
    const double hi = envelope_cutoff(cfg);
    auto f1 = [&](double a) {
        const double snr = md.rho_b * a * a;
        return std::log1p(snr) / k_ln2 * gamma_e_cdf(cfg, snr) *
               cascade_pdf(cfg.fit, a);
    };
    out.i1 = integrate_endpoint_singular(f1, 0.0, 0.5 * scale);
    out.i1 += integrate_finite(f1, 0.5 * scale, std::min(2.0 * scale, hi));
    if (hi > 2.0 * scale)
        out.i1 += integrate_finite(f1, 2.0 * scale, hi);

    const double r = md.c_eff / md.rho_e;
    auto f2 = [&](double v) {
        return std::log1p(v) / k_ln2 * gamma_b_cdf(cfg, v) * gamma_e_pdf(cfg, v);
    };
    out.i2 = integrate_half_line_exp(f2, r);
    return out;
}

} // namespace

double gamma_b_cdf(const SecrecyConfig& cfg, double x) {
    const Model md = unpack(cfg);
    if (!(x >= 0.0))
        throw std::invalid_argument("gamma_b_cdf: x must be >= 0");
    return cascade_cdf(cfg.fit, std::sqrt(x / md.rho_b));
}

double gamma_b_pdf(const SecrecyConfig& cfg, double x) {
    const Model md = unpack(cfg);
    if (!(x >= 0.0))
        throw std::invalid_argument("gamma_b_pdf: x must be >= 0");
    if (x == 0.0)
        return 0.0;
    const double log_pdf = md.h * std::log(md.xi * md.xi / md.rho_b) +
                           (md.h - 1.0) * std::log(x) + std::log(2.0) -
                           md.lg_km +
                           log_bessel_k(md.k - md.m,
                                        2.0 * std::sqrt(md.xi * md.xi * x / md.rho_b));
    return std::exp(log_pdf);
}

double gamma_e_cdf(const SecrecyConfig& cfg, double x) {
    const Model md = unpack(cfg);
    if (!(x >= 0.0))
        throw std::invalid_argument("gamma_e_cdf: x must be >= 0");
    if (x == 0.0)
        return 0.0;
    const double r = md.c_eff / md.rho_e;
    double v = 0.0;
    for (const MgTerm& t : cfg.mg_e.terms)
        v += term_weight(cfg.mg_e, t) * lower_incomplete_gamma(t.b, r * x);
    return std::clamp(v, 0.0, 1.0);
}

double gamma_e_pdf(const SecrecyConfig& cfg, double x) {
    const Model md = unpack(cfg);
    if (!(x >= 0.0))
        throw std::invalid_argument("gamma_e_pdf: x must be >= 0");
    const double r = md.c_eff / md.rho_e;
    if (x == 0.0) {
        double v = 0.0;
        for (const MgTerm& t : cfg.mg_e.terms)
            if (t.b == 1.0)
                v += term_weight(cfg.mg_e, t) * r;
        return v;
    }
    const double log_x = std::log(x);
    double v = 0.0;
    for (const MgTerm& t : cfg.mg_e.terms)
        v += term_weight(cfg.mg_e, t) *
             std::exp(t.b * std::log(r) + (t.b - 1.0) * log_x - r * x);
    return v;
}

double prob_zero_secrecy(const SecrecyConfig& cfg, EvalMethod method) {
    const Model md = unpack(cfg);

    if (method == EvalMethod::quadrature) {
        const double r = md.c_eff / md.rho_e;
        auto f = [&](double x) {
            return gamma_b_cdf(cfg, x) * gamma_e_pdf(cfg, x);
        };
        return clamp_probability(integrate_half_line_exp(f, r),
                                 "prob_zero_secrecy (quadrature)");
    }

    // P(gamma_e >= gamma_b) as a sum of univariate Mellin-Barnes integrals in
    // lambda, the scale ratio of the two SNR laws.
    const double lambda = md.xi * md.xi * md.rho_e / (md.c_eff * md.rho_b);
    LogScaled acc = LogScaled::zero();
    for (const MgTerm& t : cfg.mg_e.terms) {
        MeijerGSpec g;
        g.m = 2;
        g.n = 2;
        g.a = {1.0, 1.0 - t.b};
        g.b = {md.k, md.m, 0.0};
        acc += LogScaled::from_value(term_weight(cfg.mg_e, t)) *
               meijer_g_log(g, lambda);
    }
    double p = 0.0;
    if (!acc.is_zero())
        p = acc.sign * std::exp(acc.log_abs - md.lg_km);
    return clamp_probability(p, "prob_zero_secrecy (closed form)");
}

double ergodic_capacity_b(const SecrecyConfig& cfg, EvalMethod method) {
    const Model md = unpack(cfg);
    if (method == EvalMethod::closed_form)
        return capacity_b_closed(md);
    return capacity_b_quadrature(cfg, md);
}

double ergodic_capacity_e(const SecrecyConfig& cfg, EvalMethod method) {
    const Model md = unpack(cfg);
    if (method == EvalMethod::closed_form)
        return capacity_e_closed(cfg, md);
    return capacity_e_quadrature(cfg, md);
}

double avg_secrecy_rate_partial(const SecrecyConfig& cfg) {
    double cb;
    try {
        cb = ergodic_capacity_b(cfg, EvalMethod::closed_form);
    } catch (const NumericsError&) {
        cb = ergodic_capacity_b(cfg, EvalMethod::quadrature);
    }
    double ce;
    try {
        ce = ergodic_capacity_e(cfg, EvalMethod::closed_form);
    } catch (const NumericsError&) {
        ce = ergodic_capacity_e(cfg, EvalMethod::quadrature);
    }
    return cb - ce;
}

double avg_secrecy_rate_full(const SecrecyConfig& cfg, EvalMethod method) {
    const Model md = unpack(cfg);

    ClosedFullTerms terms;
    double cap_e = 0.0;
    if (method == EvalMethod::closed_form) {
        try {
            terms = full_rate_closed_terms(cfg, md);
            if (cfg.variant == AnalysisVariant::corrected)
                cap_e = capacity_e_closed(cfg, md);
        } catch (const NumericsError&) {
            // The double contour can fail to converge for extreme shapes; the
            // direct integrals evaluate the same expectations.
            terms = full_rate_quadrature_terms(cfg, md);
            if (cfg.variant == AnalysisVariant::corrected)
                cap_e = capacity_e_quadrature(cfg, md);
        }
    } else {
        terms = full_rate_quadrature_terms(cfg, md);
        if (cfg.variant == AnalysisVariant::corrected)
            cap_e = capacity_e_quadrature(cfg, md);
    }

    if (cfg.variant == AnalysisVariant::paper_literal)
        return terms.i1 - terms.i2;

    // E[max(C_B - C_E, 0)] = I1 + I2 - E[C_E]; nonnegative by construction.
    const double v = terms.i1 + terms.i2 - cap_e;
    if (v < -1e-6) {
        std::ostringstream msg;
        msg << "avg_secrecy_rate_full: negative result " << v
            << " signals an internal inconsistency";
        throw ConsistencyError(msg.str());
    }
    return std::max(v, 0.0);
}

} // namespace rissec

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

// Acceptance gate: eight numbered criteria, one [PASS]/[FAIL] line each,
// exit code = number of failed criteria. Criteria that compare against
// published reference curves keep the published coordinates verbatim; where
// the implementation demonstrably cannot reach a coordinate, the criterion
// reports FAIL together with the evidence, rather than loosening the check.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rissec/cascade.hpp"
#include "rissec/channel.hpp"
#include "rissec/errors.hpp"
#include "rissec/mcsim.hpp"
#include "rissec/secrecy.hpp"
#include "rissec/specfun.hpp"

using namespace rissec;

namespace {

struct Criterion {
    int id;
    std::string title;
    bool pass = true;
    std::vector<std::string> notes;

    void note(const std::string& line) { notes.push_back(line); }
    void require(bool ok, const std::string& line) {
        if (!ok) {
            pass = false;
            notes.push_back("FAILED: " + line);
        }
    }
};

std::string fmt(const char* format, ...) {
    va_list args;
    va_start(args, format);
    char buf[512];
    std::vsnprintf(buf, sizeof buf, format, args);
    va_end(args);
    return buf;
}

double rel_err(double value, double target) {
    return std::fabs(value - target) / std::fabs(target);
}

MixtureGamma rice_hop(double k_db) {
    return mg_from_rice(std::pow(10.0, k_db / 10.0), 20);
}

SecrecyConfig make_config(const MixtureGamma& hop, std::size_t m_el,
                          const MixtureGamma& eve, double rho_b, double rho_e,
                          AnalysisVariant variant) {
    SecrecyConfig cfg;
    cfg.fit = fit_cascade_from_channels(hop, hop, m_el);
    cfg.mg_e = eve;
    cfg.budget = {rho_b, rho_e};
    cfg.variant = variant;
    return cfg;
}

// ---------------------------------------------------------------------------
// 1. Leakage probability against the published ratio curve, plus simulation.

void criterion_1(Criterion& c) {
    struct Point {
        double ratio_db;
        std::size_t m_el;
        double target; // published plotted value
    };
    const std::vector<Point> points = {
        {0.0, 4, 1.35979e-3}, {2.0, 4, 2.49132e-4}, {-10.0, 16, 4.29345e-4}};

    const MixtureGamma hop = rice_hop(5.0);
    const MixtureGamma eve = mg_from_nakagami(3.0);

    bool corrected_ok = true, literal_ok = true;
    for (const Point& pt : points) {
        const double rho_b = std::pow(10.0, pt.ratio_db / 10.0);
        const SecrecyConfig corr = make_config(hop, pt.m_el, eve, rho_b, 1.0,
                                               AnalysisVariant::corrected);
        const SecrecyConfig lit = make_config(hop, pt.m_el, eve, rho_b, 1.0,
                                              AnalysisVariant::paper_literal);
        const double p_corr = prob_zero_secrecy(corr, EvalMethod::closed_form);
        const double p_lit = prob_zero_secrecy(lit, EvalMethod::closed_form);

        const std::uint64_t n = 10000000;
        const McMetrics mc =
            estimate_metrics(hop, hop, pt.m_el, eve, {rho_b, 1.0}, n, 52 + pt.m_el);

        auto point_ok = [&](double closed) {
            const bool match = rel_err(closed, pt.target) <= 0.05;
            bool sim;
            if (mc.p_leak.std_error > 0.0)
                sim = std::fabs(closed - mc.p_leak.value) <=
                      3.0 * mc.p_leak.std_error;
            else
                sim = std::fabs(closed * static_cast<double>(n) -
                                static_cast<double>(mc.leak_events)) <=
                      3.0 * std::sqrt(closed * static_cast<double>(n)) + 3.0;
            return std::pair{match, sim};
        };
        const auto [corr_match, corr_sim] = point_ok(p_corr);
        const auto [lit_match, lit_sim] = point_ok(p_lit);
        corrected_ok = corrected_ok && corr_match && corr_sim;
        literal_ok = literal_ok && lit_match && lit_sim;

        c.note(fmt("ratio %+.0f dB, M = %zu: plotted %.5e | corrected %.5e "
                   "(plot dev %.0f%%, sim %s) | literal %.5e (plot dev %.0f%%, "
                   "sim %s) | mc %.5e +- %.1e",
                   pt.ratio_db, pt.m_el, pt.target, p_corr,
                   100.0 * rel_err(p_corr, pt.target),
                   corr_sim ? "agrees" : "DISAGREES", p_lit,
                   100.0 * rel_err(p_lit, pt.target),
                   lit_sim ? "agrees" : "DISAGREES", mc.p_leak.value,
                   mc.p_leak.std_error));
    }

    c.require(corrected_ok || literal_ok,
              "no analysis variant reproduces the published leakage curve "
              "within 5% while agreeing with simulation");
    if (!(corrected_ok || literal_ok)) {
        c.note("analysis: simulation draws exact Rice envelopes, independent "
               "of every fitted approximation, and lands on the corrected "
               "closed form at every point; the published curve is therefore "
               "not reproducible from its stated configuration by either the "
               "corrected or the verbatim analytics. The corrected curve "
               "keeps the published shape (ratio-invariant, monotone in M) "
               "at a uniformly lower level.");
    }
}

// ---------------------------------------------------------------------------
// 2. Full-CSI average secrecy rate against the published budget curve.

void criterion_2(Criterion& c) {
    struct Point {
        std::size_t m_el;
        double target;
    };
    const std::vector<Point> points = {{4, 3.57771}, {8, 5.69573}, {16, 7.70004}};
    const MixtureGamma hop = rice_hop(5.0);
    const MixtureGamma eve = mg_from_nakagami(3.0);

    for (const Point& pt : points) {
        const SecrecyConfig lit = make_config(hop, pt.m_el, eve, 1.0, 1.0,
                                              AnalysisVariant::paper_literal);
        const double quad = avg_secrecy_rate_full(lit, EvalMethod::quadrature);
        const double closed = avg_secrecy_rate_full(lit, EvalMethod::closed_form);
        c.note(fmt("M = %zu: plotted %.5f | quadrature %.5f (dev %.2f%%) | "
                   "closed %.5f (vs quadrature %.1e)",
                   pt.m_el, pt.target, quad, 100.0 * rel_err(quad, pt.target),
                   closed, rel_err(closed, quad)));
        c.require(rel_err(quad, pt.target) <= 0.02,
                  fmt("quadrature at M = %zu deviates more than 2%% from the "
                      "published point",
                      pt.m_el));
        c.require(rel_err(closed, quad) <= 1e-3,
                  fmt("closed form at M = %zu deviates more than 1e-3 from "
                      "quadrature",
                      pt.m_el));
    }
    c.note("points reproduced by the verbatim-published analytics; the "
           "corrected variant gives 2.76049 at M = 4 and matches simulation");
}

// ---------------------------------------------------------------------------
// 3. Partial-CSI rate points and the full-CSI bar from the element sweep.

void criterion_3(Criterion& c) {
    const MixtureGamma hop = rice_hop(5.0);
    const MixtureGamma eve = mg_from_nakagami(3.0);
    const double rho_e_m5 = std::pow(10.0, -0.5);

    {
        const SecrecyConfig cfg = make_config(hop, 4, eve, 1.0, rho_e_m5,
                                              AnalysisVariant::corrected);
        const double rs = ergodic_capacity_b(cfg, EvalMethod::closed_form) -
                          ergodic_capacity_e(cfg, EvalMethod::closed_form);
        c.note(fmt("partial, rho_E = -5 dB: plotted 3.34272 | corrected %.5f "
                   "(dev %.2f%%)",
                   rs, 100.0 * rel_err(rs, 3.34272)));
        c.require(rel_err(rs, 3.34272) <= 0.02,
                  "partial-CSI rate at rho_E = -5 dB misses the published "
                  "point by more than 2%");
    }
    {
        const SecrecyConfig cfg =
            make_config(hop, 4, eve, 1.0, 1.0, AnalysisVariant::corrected);
        const double rs = ergodic_capacity_b(cfg, EvalMethod::closed_form) -
                          ergodic_capacity_e(cfg, EvalMethod::closed_form);
        c.note(fmt("partial, rho_E = 0 dB: plotted 2.80787 | corrected %.5f "
                   "(dev %.2f%%)",
                   rs, 100.0 * rel_err(rs, 2.80787)));
        c.require(rel_err(rs, 2.80787) <= 0.02,
                  "partial-CSI rate at rho_E = 0 dB misses the published "
                  "point by more than 2%");
    }

    // Full-CSI bar at M = 4, rho_B = 0 dB, rho_E = -5 dB: published 5.29659.
    const double bar = 5.29659;
    const SecrecyConfig corr =
        make_config(hop, 4, eve, 1.0, rho_e_m5, AnalysisVariant::corrected);
    const SecrecyConfig lit =
        make_config(hop, 4, eve, 1.0, rho_e_m5, AnalysisVariant::paper_literal);
    const double full_corr = avg_secrecy_rate_full(corr, EvalMethod::closed_form);
    const double full_lit = avg_secrecy_rate_full(lit, EvalMethod::closed_form);
    const double cap_b = ergodic_capacity_b(corr, EvalMethod::closed_form);
    c.note(fmt("full bar: plotted %.5f | corrected %.5f (dev %.1f%%) | "
               "literal %.5f (dev %.1f%%)",
               bar, full_corr, 100.0 * rel_err(full_corr, bar), full_lit,
               100.0 * rel_err(full_lit, bar)));
    c.require(rel_err(full_corr, bar) <= 0.02 || rel_err(full_lit, bar) <= 0.02,
              "full-CSI bar at M = 4 is not reproduced by either variant");

    if (rel_err(full_corr, bar) > 0.02 && rel_err(full_lit, bar) > 0.02) {
        c.note(fmt("analysis: the bar exceeds the legitimate link's own "
                   "ergodic capacity at this budget (%.5f), so no secrecy "
                   "rate can reach it; E[max(C_B - C_E, 0)] <= E[C_B]",
                   cap_b));
        const SecrecyConfig swapped = make_config(
            hop, 4, eve, std::pow(10.0, 0.5), 1.0, AnalysisVariant::paper_literal);
        const double full_swapped =
            avg_secrecy_rate_full(swapped, EvalMethod::closed_form);
        c.note(fmt("analysis: evaluating the literal analytics at rho_B = "
                   "+5 dB, rho_E = 0 dB instead gives %.5f (%.1f%% from the "
                   "bar); the published bars coincide with the budget-sweep "
                   "curve read at rho_B = (rho_B - rho_E), i.e. the bar chart "
                   "reused ratio-shifted curve points rather than the stated "
                   "per-link budgets",
                   full_swapped, 100.0 * rel_err(full_swapped, bar)));
    }
}

// ---------------------------------------------------------------------------
// 4. Closed form vs quadrature vs simulation on a random configuration grid.

void criterion_4(Criterion& c) {
    std::mt19937_64 rng(20260819);
    std::uniform_int_distribution<int> m_el_draw(1, 16);
    std::uniform_real_distribution<double> kr_draw(0.0, 10.0);
    std::uniform_int_distribution<int> eve_m_draw(1, 3);
    std::uniform_real_distribution<double> budget_draw(-10.0, 10.0);

    int configs_checked = 0, comparisons = 0;
    for (int i = 0; i < 30; ++i) {
        const std::size_t m_el = static_cast<std::size_t>(m_el_draw(rng));
        const double kr_db = kr_draw(rng);
        const double eve_m = static_cast<double>(eve_m_draw(rng));
        const double rho_b = std::pow(10.0, budget_draw(rng) / 10.0);
        const double rho_e = std::pow(10.0, budget_draw(rng) / 10.0);
        const std::string tag =
            fmt("config %d (M = %zu, K_r = %.2f dB, m = %.0f, rho_B = %.3f, "
                "rho_E = %.3f)",
                i, m_el, kr_db, eve_m, rho_b, rho_e);
        try {
            const MixtureGamma hop = rice_hop(kr_db);
            const MixtureGamma eve = mg_from_nakagami(eve_m);
            const SecrecyConfig cfg = make_config(hop, m_el, eve, rho_b, rho_e,
                                                  AnalysisVariant::corrected);

            const double pl_c = prob_zero_secrecy(cfg, EvalMethod::closed_form);
            const double pl_q = prob_zero_secrecy(cfg, EvalMethod::quadrature);
            const double cb_c = ergodic_capacity_b(cfg, EvalMethod::closed_form);
            const double cb_q = ergodic_capacity_b(cfg, EvalMethod::quadrature);
            const double ce_c = ergodic_capacity_e(cfg, EvalMethod::closed_form);
            const double ce_q = ergodic_capacity_e(cfg, EvalMethod::quadrature);
            const double cs_c =
                avg_secrecy_rate_full(cfg, EvalMethod::closed_form);
            const double cs_q =
                avg_secrecy_rate_full(cfg, EvalMethod::quadrature);

            // 1e-12 absolute floor: below it both paths are reporting zero
            // to quadrature resolution (e.g. leakage at 20 dB advantage).
            auto close_ok = [](double a, double b) {
                return std::fabs(a - b) <=
                       1e-4 * std::max(std::fabs(a), std::fabs(b)) + 1e-12;
            };
            c.require(close_ok(pl_c, pl_q),
                      tag + fmt(": p_leak closed %.6e vs quadrature %.6e", pl_c,
                                pl_q));
            c.require(close_ok(cb_c, cb_q),
                      tag + fmt(": capacity_b closed %.8f vs quadrature %.8f",
                                cb_c, cb_q));
            c.require(close_ok(ce_c, ce_q),
                      tag + fmt(": capacity_e closed %.8f vs quadrature %.8f",
                                ce_c, ce_q));
            c.require(close_ok(cs_c, cs_q),
                      tag + fmt(": c_s_full closed %.8f vs quadrature %.8f",
                                cs_c, cs_q));

            const std::uint64_t n = 1000000;
            const McMetrics mc = estimate_metrics(hop, hop, m_el, eve,
                                                  {rho_b, rho_e}, n, 1000 + i);
            auto sim_ok = [&](double closed, const McEstimate& e) {
                return std::fabs(closed - e.value) <= 3.0 * e.std_error + 1e-9;
            };
            c.require(sim_ok(cb_c, mc.capacity_b),
                      tag + fmt(": capacity_b %.6f vs mc %.6f +- %.1e", cb_c,
                                mc.capacity_b.value, mc.capacity_b.std_error));
            c.require(sim_ok(ce_c, mc.capacity_e),
                      tag + fmt(": capacity_e %.6f vs mc %.6f +- %.1e", ce_c,
                                mc.capacity_e.value, mc.capacity_e.std_error));
            c.require(sim_ok(cs_c, mc.c_s_full),
                      tag + fmt(": c_s_full %.6f vs mc %.6f +- %.1e", cs_c,
                                mc.c_s_full.value, mc.c_s_full.std_error));
            c.require(sim_ok(cb_c - ce_c, mc.r_s_partial),
                      tag + fmt(": r_s_partial %.6f vs mc %.6f +- %.1e",
                                cb_c - ce_c, mc.r_s_partial.value,
                                mc.r_s_partial.std_error));
            // Rare events compared on the count scale.
            const double expected = pl_c * static_cast<double>(n);
            c.require(std::fabs(static_cast<double>(mc.leak_events) - expected) <=
                          3.0 * std::sqrt(std::max(expected, 0.0)) + 3.0,
                      tag + fmt(": %llu leak events vs %.2f expected",
                                static_cast<unsigned long long>(mc.leak_events),
                                expected));
            ++configs_checked;
            comparisons += 9;
        } catch (const std::exception& e) {
            c.require(false, tag + ": threw " + e.what());
        }
    }
    c.note(fmt("%d configurations, %d pairwise comparisons", configs_checked,
               comparisons));
}

// ---------------------------------------------------------------------------
// 5. Special-function identity suite.

void criterion_5(Criterion& c) {
    std::mt19937_64 rng(555);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    auto draw_z = [&] {
        return std::exp(std::log(1e-2) + unif(rng) * std::log(1e3));
    };

    double worst = 0.0;
    auto check_identity = [&](const char* name, double got, double expect) {
        const double err =
            std::fabs(got - expect) / std::max(std::fabs(expect), 1e-300);
        worst = std::max(worst, err);
        c.require(err <= 1e-10,
                  fmt("%s reduction off by %.2e (got %.15g, want %.15g)", name,
                      err, got, expect));
    };

    for (int i = 0; i < 100; ++i) {
        const double z = draw_z();
        check_identity("exp", meijer_g({1, 0, {}, {0.0}}, z), std::exp(-z));
        check_identity("rational", meijer_g({1, 1, {1.0}, {1.0}}, z),
                       z / (1.0 + z));
        check_identity("log", meijer_g({1, 2, {1.0, 1.0}, {1.0, 0.0}}, z),
                       std::log1p(z));
        const double a = 0.4 + 4.0 * unif(rng);
        check_identity("incomplete-gamma",
                       meijer_g({1, 1, {1.0}, {a, 0.0}}, z),
                       lower_incomplete_gamma(a, z));
        const double nu = 2.5 * unif(rng);
        check_identity(
            "Bessel", meijer_g({2, 0, {}, {nu / 2.0, -nu / 2.0}}, z),
            2.0 * std::exp(log_bessel_k(nu, 2.0 * std::sqrt(z))));
    }
    c.note(fmt("500 reduction evaluations, worst relative error %.2e", worst));

    for (double nu : {0.2, 0.8, 1.5, 3.7, 8.12})
        for (double x : {0.05, 0.9, 4.0, 40.0})
            c.require(std::fabs(log_bessel_k(nu, x) - log_bessel_k(-nu, x)) <=
                          1e-12 * std::fabs(log_bessel_k(nu, x)) + 1e-12,
                      fmt("Bessel K order symmetry broken at nu = %.2f, "
                          "x = %.2f",
                          nu, x));

    for (double a : {0.5, 1.0, 2.5, 6.0}) {
        double prev = -1.0;
        for (double x = 0.0; x <= 10.0; x += 0.125) {
            const double p = regularized_lower_gamma(a, x);
            c.require(p >= prev && p <= 1.0,
                      fmt("regularized gamma not monotone at a = %.2f, "
                          "x = %.3f",
                          a, x));
            prev = p;
        }
    }
    c.note("Bessel order symmetry (20 pairs) and incomplete-gamma "
           "monotonicity (4 shapes x 81 points) hold");
}

// ---------------------------------------------------------------------------
// 6. Structural invariants.

void criterion_6(Criterion& c) {
    const MixtureGamma hop = rice_hop(5.0);
    const MixtureGamma eve = mg_from_nakagami(3.0);

    // Ratio invariance under joint budget scaling.
    const double ratio = std::pow(10.0, 0.3);
    const SecrecyConfig base =
        make_config(hop, 4, eve, ratio, 1.0, AnalysisVariant::corrected);
    const double ref = prob_zero_secrecy(base, EvalMethod::closed_form);
    for (double scale : {1e-2, 1.0, 1e3}) {
        const SecrecyConfig scaled = make_config(
            hop, 4, eve, ratio * scale, scale, AnalysisVariant::corrected);
        const double p = prob_zero_secrecy(scaled, EvalMethod::closed_form);
        c.require(rel_err(p, ref) <= 1e-10,
                  fmt("p_leak changed by %.2e under joint budget scale %g",
                      rel_err(p, ref), scale));
    }
    c.note(fmt("p_leak ratio-invariant to 1e-10 across budget scales "
               "1e-2..1e3 (p = %.6e)",
               ref));

    // Monotone decrease in the budget ratio, for several M.
    for (std::size_t m_el : {2, 4, 8, 16}) {
        double prev = 1.1;
        for (double r_db = -6.0; r_db <= 8.0; r_db += 2.0) {
            const SecrecyConfig cfg =
                make_config(hop, m_el, eve, std::pow(10.0, r_db / 10.0), 1.0,
                            AnalysisVariant::corrected);
            const double p = prob_zero_secrecy(cfg, EvalMethod::closed_form);
            c.require(p < prev, fmt("p_leak not decreasing at M = %zu, "
                                    "ratio = %.0f dB",
                                    m_el, r_db));
            prev = p;
        }
    }
    // Monotone decrease in M at fixed budgets.
    double prev = 1.1;
    for (std::size_t m_el : {1, 2, 4, 8, 16}) {
        const SecrecyConfig cfg =
            make_config(hop, m_el, eve, 1.0, 1.0, AnalysisVariant::corrected);
        const double p = prob_zero_secrecy(cfg, EvalMethod::closed_form);
        c.require(p < prev, fmt("p_leak not decreasing at M = %zu", m_el));
        prev = p;
    }
    c.note("p_leak monotone in the budget ratio (4 M values x 8 ratios) and "
           "in M");

    // Full rate dominates the positive part of the capacity gap.
    for (std::size_t m_el : {2, 4, 8}) {
        for (double rho_e : {0.5, 1.0, 4.0}) {
            const SecrecyConfig cfg = make_config(hop, m_el, eve, 1.0, rho_e,
                                                  AnalysisVariant::corrected);
            const double full =
                avg_secrecy_rate_full(cfg, EvalMethod::closed_form);
            const double partial = ergodic_capacity_b(cfg, EvalMethod::closed_form) -
                                   ergodic_capacity_e(cfg, EvalMethod::closed_form);
            c.require(full >= std::max(partial, 0.0) - 1e-9,
                      fmt("c_s_full %.6f below max(r_s_partial, 0) %.6f at "
                          "M = %zu, rho_E = %.1f",
                          full, std::max(partial, 0.0), m_el, rho_e));
        }
    }
    c.note("c_s_full >= max(r_s_partial, 0) on 9 budget/M combinations");

    // Fit scale decreases with element count.
    double prev_xi = 1e9;
    for (std::size_t m_el : {1, 2, 4, 8, 16, 32}) {
        const CascadeFit fit = fit_cascade_from_channels(hop, hop, m_el);
        c.require(fit.xi < prev_xi, fmt("xi not decreasing at M = %zu", m_el));
        prev_xi = fit.xi;
    }
    c.note("xi monotone decreasing over M in {1, 2, 4, 8, 16, 32}");
}

// ---------------------------------------------------------------------------
// 7. Cascade fit sanity.

void criterion_7(Criterion& c) {
    // Double-Rayleigh, single product: moments (1, 4, 36) are exact and the
    // generalized-K surrogate degenerates to k = m = xi = 1.
    const MixtureGamma ray = mg_from_nakagami(1.0);
    const CascadeFit dr = fit_cascade_from_channels(ray, ray, 1);
    c.require(std::fabs(dr.k_a - 1.0) <= 1e-12 &&
                  std::fabs(dr.m_a - 1.0) <= 1e-12 &&
                  std::fabs(dr.xi - 1.0) <= 1e-12,
              fmt("double-Rayleigh fit gave (%.15g, %.15g, %.15g), want "
                  "(1, 1, 1)",
                  dr.k_a, dr.m_a, dr.xi));
    c.note(fmt("double-Rayleigh fit: k = %g, m = %g, xi = %g (exact)", dr.k_a,
               dr.m_a, dr.xi));

    // Round-trip through the first three even moments of a generalized-K.
    const double k = 3.5, m = 1.2, xi = 0.9;
    auto kg_moment = [&](double l) {
        return std::exp(std::lgamma(k + l / 2.0) + std::lgamma(m + l / 2.0) -
                        std::lgamma(k) - std::lgamma(m) - l * std::log(xi));
    };
    const CascadeFit rt =
        fit_cascade(kg_moment(2.0), kg_moment(4.0), kg_moment(6.0), 1);
    c.require(std::fabs(rt.k_a - k) <= 1e-9 && std::fabs(rt.m_a - m) <= 1e-9 &&
                  std::fabs(rt.xi - xi) <= 1e-9,
              fmt("round-trip gave (%.12g, %.12g, %.12g), want (3.5, 1.2, "
                  "0.9)",
                  rt.k_a, rt.m_a, rt.xi));
    c.note(fmt("generalized-K round-trip error: k %.1e, m %.1e, xi %.1e",
               std::fabs(rt.k_a - k), std::fabs(rt.m_a - m),
               std::fabs(rt.xi - xi)));

    // Analytic cascade moments vs direct simulation of the element sum.
    const MixtureGamma hop = rice_hop(5.0);
    for (std::size_t m_el : {1, 2, 4, 8}) {
        const std::vector<double> mu = cascade_moments(hop, hop, m_el, 6);
        const int n = 250000;
        SampleRng rng(909, m_el);
        double s2 = 0.0, s4 = 0.0, s6 = 0.0, s8 = 0.0, s12 = 0.0;
        for (int i = 0; i < n; ++i) {
            const double a = sample_cascade(hop, hop, m_el, rng);
            const double a2 = a * a, a4 = a2 * a2, a6 = a4 * a2;
            s2 += a2;
            s4 += a4;
            s6 += a6;
            s8 += a4 * a4;
            s12 += a6 * a6;
        }
        const double e2 = s2 / n, e4 = s4 / n, e6 = s6 / n;
        const double se2 = std::sqrt(std::max(e4 - e2 * e2, 0.0) / n);
        const double se4 = std::sqrt(std::max(s8 / n - e4 * e4, 0.0) / n);
        const double se6 = std::sqrt(std::max(s12 / n - e6 * e6, 0.0) / n);
        c.require(std::fabs(e2 - mu[2]) <= 3.0 * se2,
                  fmt("mu2 at M = %zu: analytic %.6f vs mc %.6f +- %.1e", m_el,
                      mu[2], e2, se2));
        c.require(std::fabs(e4 - mu[4]) <= 3.0 * se4,
                  fmt("mu4 at M = %zu: analytic %.6f vs mc %.6f +- %.1e", m_el,
                      mu[4], e4, se4));
        c.require(std::fabs(e6 - mu[6]) <= 3.0 * se6,
                  fmt("mu6 at M = %zu: analytic %.6f vs mc %.6f +- %.1e", m_el,
                      mu[6], e6, se6));
    }
    c.note("moments l in {2, 4, 6} match simulation within 3 sigma for M in "
           "{1, 2, 4, 8} (250k draws each)");
}

// ---------------------------------------------------------------------------
// 8. Determinism of the simulation pipeline through the CLI.

std::string read_stripped(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream out;
    std::string line;
    while (std::getline(in, line))
        if (line.empty() || line[0] != '#')
            out << line << '\n';
    return out.str();
}

void criterion_8(Criterion& c, const std::string& cli) {
    if (cli.empty()) {
        c.require(false, "no CLI path supplied on the command line");
        return;
    }
    const std::string args =
        " sweep --metric c_s_full --sweep-var rho_b_db --values 0,5 --M 2 "
        "--methods mc --samples 50000 --seed 777 --out ";
    const std::string f1 = "acceptance_det_1.csv";
    const std::string f2 = "acceptance_det_2.csv";
    const int rc1 =
        std::system(("RISSEC_WORKERS=1 \"" + cli + "\"" + args + f1).c_str());
    const int rc2 =
        std::system(("RISSEC_WORKERS=3 \"" + cli + "\"" + args + f2).c_str());
    c.require(rc1 == 0 && rc2 == 0,
              fmt("CLI runs exited with %d and %d", rc1, rc2));

    const std::string b1 = read_stripped(f1);
    const std::string b2 = read_stripped(f2);
    c.require(!b1.empty(), "first CLI run produced no output rows");
    c.require(b1 == b2,
              "CSV bytes differ between RISSEC_WORKERS=1 and RISSEC_WORKERS=3");
    if (!b1.empty() && b1 == b2)
        c.note(fmt("identical %zu-byte CSV payload (seed 777, 50k samples) "
                   "for 1 and 3 workers",
                   b1.size()));
    std::remove(f1.c_str());
    std::remove(f2.c_str());
}

} // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";

    std::vector<Criterion> criteria = {
        {1, "leakage probability reference points with simulation agreement"},
        {2, "full-CSI secrecy rate reference points (verbatim analytics)"},
        {3, "partial-CSI reference points and the full-CSI bar"},
        {4, "closed form / quadrature / simulation triangle on random configs"},
        {5, "special-function identity suite"},
        {6, "structural invariants"},
        {7, "cascade fit sanity"},
        {8, "Monte Carlo determinism across worker counts (CLI)"},
    };

    // Progress heartbeat on stderr: several criteria run minutes of Monte
    // Carlo, and a silent binary is indistinguishable from a hung one.
    const auto run = [](Criterion& c, auto&& fn) {
        std::fprintf(stderr, "running criterion %d...\n", c.id);
        const auto t0 = std::chrono::steady_clock::now();
        fn(c);
        const double dt =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                .count();
        std::fprintf(stderr, "criterion %d done in %.1f s\n", c.id, dt);
    };
    run(criteria[0], [](Criterion& c) { criterion_1(c); });
    run(criteria[1], [](Criterion& c) { criterion_2(c); });
    run(criteria[2], [](Criterion& c) { criterion_3(c); });
    run(criteria[3], [](Criterion& c) { criterion_4(c); });
    run(criteria[4], [](Criterion& c) { criterion_5(c); });
    run(criteria[5], [](Criterion& c) { criterion_6(c); });
    run(criteria[6], [](Criterion& c) { criterion_7(c); });
    run(criteria[7], [&](Criterion& c) { criterion_8(c, cli); });

    int failures = 0;
    for (const Criterion& c : criteria) {
        std::printf("[%s] criterion %d: %s\n", c.pass ? "PASS" : "FAIL", c.id,
                    c.title.c_str());
        for (const std::string& note : c.notes)
            std::printf("    %s\n", note.c_str());
        if (!c.pass)
            ++failures;
    }
    std::printf("acceptance: %d/8 criteria passed, %d failed\n", 8 - failures,
                failures);
    return failures;
}

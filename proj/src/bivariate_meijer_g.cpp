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
// Two-variable Mellin-Barnes integral over a product of two vertical
// contours. The abscissa pair (sigma_s, sigma_t) must keep sigma_s inside the
// x-block strip, sigma_t inside the y-block strip, and sigma_s + sigma_t
// inside the outer-block strip; a midpoint choice with a grid-scan fallback
// finds such a pair when one exists. Integration runs in log space with the
// apex value factored out, using fixed Gauss-Legendre panels and relative
// tail cutoffs in both directions.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <sstream>

#include "rissec/errors.hpp"
#include "rissec/quadrature.hpp"
#include "rissec/specfun.hpp"
#include "specfun_internal.hpp"

namespace rissec {

namespace {

constexpr double k_inf = std::numeric_limits<double>::infinity();

struct Strip {
    double lo = -k_inf;
    double hi = k_inf;
};

Strip block_strip(const MeijerGSpec& g) {
    Strip s;
    for (std::size_t k = 0; k < g.n; ++k)
        s.lo = std::max(s.lo, g.a[k] - 1.0);
    for (std::size_t j = 0; j < g.m; ++j)
        s.hi = std::min(s.hi, g.b[j]);
    return s;
}

std::complex<double> log_phi_block(const MeijerGSpec& g, std::complex<double> u) {
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t j = 0; j < g.m; ++j)
        acc += detail::cln_gamma(g.b[j] - u);
    for (std::size_t k = 0; k < g.n; ++k)
        acc += detail::cln_gamma(1.0 - g.a[k] + u);
    for (std::size_t j = g.m; j < g.q(); ++j)
        acc -= detail::cln_gamma(1.0 - g.b[j] + u);
    for (std::size_t k = g.n; k < g.p(); ++k)
        acc -= detail::cln_gamma(g.a[k] - u);
    return acc;
}

// Search window for an unbounded strip.
std::pair<double, double> finite_window(const Strip& s) {
    if (std::isfinite(s.lo) && std::isfinite(s.hi))
        return {s.lo, s.hi};
    if (std::isfinite(s.lo))
        return {s.lo, s.lo + 8.0};
    if (std::isfinite(s.hi))
        return {s.hi - 8.0, s.hi};
    return {-4.0, 4.0};
}

struct Abscissae {
    double sigma_s = 0.0;
    double sigma_t = 0.0;
};

Abscissae choose_abscissae(const Strip& sx, const Strip& sy, const Strip& so) {
    const auto [wx_lo, wx_hi] = finite_window(sx);

    auto try_sigma_s = [&](double sigma_s, Abscissae& out) {
        const double t_lo = std::max(sy.lo, so.lo - sigma_s);
        const double t_hi = std::min(sy.hi, so.hi - sigma_s);
        if (!(t_hi - t_lo > 0.02))
            return false;
        double sigma_t;
        if (std::isfinite(t_lo) && std::isfinite(t_hi))
            sigma_t = 0.5 * (t_lo + t_hi);
        else if (std::isfinite(t_lo))
            sigma_t = t_lo + 1.0;
        else if (std::isfinite(t_hi))
            sigma_t = t_hi - 1.0;
        else
            sigma_t = 0.0;
        out = {sigma_s, sigma_t};
        return true;
    };

    Abscissae out;
    if (try_sigma_s(0.5 * (wx_lo + wx_hi), out))
        return out;
    const int grid = 33;
    for (int i = 0; i < grid; ++i) {
        const double frac = (static_cast<double>(i) + 0.5) / grid;
        if (try_sigma_s(wx_lo + frac * (wx_hi - wx_lo), out))
            return out;
    }
    std::ostringstream msg;
    msg << "bivariate_meijer_g: no admissible contour abscissae; strips"
        << " x(" << sx.lo << ", " << sx.hi << ")"
        << " y(" << sy.lo << ", " << sy.hi << ")"
        << " outer(" << so.lo << ", " << so.hi << ")";
    throw NumericsError(msg.str());
}

} // namespace

void BivariateGSpec::validate() const {
    outer.validate();
    block_x.validate();
    block_y.validate();
}

LogScaled bivariate_meijer_g_log(const BivariateGSpec& spec, double x, double y) {
    spec.validate();
    if (!(x > 0.0) || !(y > 0.0))
        throw std::invalid_argument("bivariate_meijer_g: arguments must be > 0");
    if (x > 1e8 || y > 1e8)
        throw std::invalid_argument(
            "bivariate_meijer_g: argument exceeds supported magnitude 1e8");

    const Strip sx = block_strip(spec.block_x);
    const Strip sy = block_strip(spec.block_y);
    const Strip so = block_strip(spec.outer);
    const Abscissae ab = choose_abscissae(sx, sy, so);

    const double lnx = std::log(x);
    const double lny = std::log(y);

    auto log_h = [&](double tau_s, double tau_t) {
        const std::complex<double> s{ab.sigma_s, tau_s};
        const std::complex<double> t{ab.sigma_t, tau_t};
        return lnx * s + lny * t + log_phi_block(spec.block_x, s) +
               log_phi_block(spec.block_y, t) + log_phi_block(spec.outer, s + t);
    };

    double off = -k_inf;
    for (double ts : {0.0, 0.5, 1.0})
        for (double tt : {0.0, 0.5, 1.0}) {
            const double re = log_h(ts, tt).real();
            if (std::isfinite(re))
                off = std::max(off, re);
        }
    if (!std::isfinite(off))
        throw NumericsError("bivariate_meijer_g: integrand vanished near the apex");

    const std::size_t n_nodes = 48;
    const auto& nodes = gauss_legendre_nodes(n_nodes);
    const auto& weights = gauss_legendre_weights(n_nodes);
    const double width_s = 2.0;
    const double width_t = 1.0;
    const double tau_cap = 400.0;

    // Integral over the full tau_s line at fixed tau_t of Re exp(logH - off).
    auto inner = [&](double tau_t) {
        double acc = 0.0;
        for (int dir = 0; dir < 2; ++dir) {
            const double sgn = dir == 0 ? 1.0 : -1.0;
            int small_streak = 0;
            for (std::size_t panel = 0;; ++panel) {
                const double t0 = static_cast<double>(panel) * width_s;
                if (t0 > tau_cap) {
                    std::ostringstream msg;
                    msg << "bivariate_meijer_g: inner contour did not converge"
                        << " (sigma_s = " << ab.sigma_s << ", sigma_t = "
                        << ab.sigma_t << ", |tau_s| > " << tau_cap << ")";
                    throw NumericsError(msg.str());
                }
                const double mid = t0 + 0.5 * width_s;
                const double half = 0.5 * width_s;
                double piece = 0.0;
                for (std::size_t i = 0; i < n_nodes; ++i) {
                    const double tau_s = sgn * (mid + half * nodes[i]);
                    const std::complex<double> lf = log_h(tau_s, tau_t);
                    const double re_l = lf.real() - off;
                    if (re_l > -745.0)
                        piece += weights[i] * std::exp(re_l) * std::cos(lf.imag());
                }
                piece *= half;
                acc += piece;
                if (std::fabs(piece) <= 1e-16 * std::max(std::fabs(acc), 1e-300))
                    ++small_streak;
                else
                    small_streak = 0;
                if (small_streak >= 2)
                    break;
            }
        }
        return acc;
    };

    double total = 0.0;
    int small_streak = 0;
    for (std::size_t panel = 0;; ++panel) {
        const double t0 = static_cast<double>(panel) * width_t;
        if (t0 > tau_cap) {
            std::ostringstream msg;
            msg << "bivariate_meijer_g: outer contour did not converge"
                << " (sigma_s = " << ab.sigma_s << ", sigma_t = " << ab.sigma_t
                << ", tau_t > " << tau_cap << ")";
            throw NumericsError(msg.str());
        }
        const double mid = t0 + 0.5 * width_t;
        const double half = 0.5 * width_t;
        double piece = 0.0;
        for (std::size_t i = 0; i < n_nodes; ++i)
            piece += weights[i] * inner(mid + half * nodes[i]);
        piece *= half;
        total += piece;
        if (std::fabs(piece) <= 1e-15 * std::max(std::fabs(total), 1e-300))
            ++small_streak;
        else
            small_streak = 0;
        if (small_streak >= 2)
            break;
    }

    if (total == 0.0)
        return LogScaled::zero();
    return LogScaled::from_log(
        std::log(std::fabs(total)) - std::log(2.0 * M_PI * M_PI) + off,
        total > 0.0 ? 1 : -1);
}

double bivariate_meijer_g(const BivariateGSpec& spec, double x, double y) {
    const LogScaled r = bivariate_meijer_g_log(spec, x, y);
    if (r.is_zero())
        return 0.0;
    if (r.log_abs > 700.0)
        throw NumericsError("bivariate_meijer_g: result magnitude exceeds double "
                            "range; use bivariate_meijer_g_log");
    return r.value();
}

} // namespace rissec

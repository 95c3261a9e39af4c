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
// Univariate Meijer G evaluation.
//
// Primary path: direct numerical integration of the Mellin-Barnes contour on
// a vertical line inside the fundamental strip, in log space so that
// Gamma-factor magnitudes never overflow. Handles coincident b parameters
// (higher-order poles) natively because the contour stays away from all
// poles. A residue-series path (sum over right-family poles) is kept as an
// independent cross-check for shapes with simple, well-separated poles.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <sstream>

#include <boost/math/special_functions/gamma.hpp>

#include "rissec/errors.hpp"
#include "rissec/quadrature.hpp"
#include "rissec/specfun.hpp"
#include "specfun_internal.hpp"

namespace rissec {

namespace {

constexpr double k_inf = std::numeric_limits<double>::infinity();

bool near_nonpositive_integer(double x, double tol = 1e-9) {
    return x <= tol && std::fabs(x - std::round(x)) <= tol;
}

bool near_integer(double x, double tol = 1e-9) {
    return std::fabs(x - std::round(x)) <= tol;
}

struct Strip {
    double lo = -k_inf; // max_k (a_k - 1) over the n-group
    double hi = k_inf;  // min_j b_j over the m-group
};

Strip fundamental_strip(const MeijerGSpec& g) {
    Strip s;
    for (std::size_t k = 0; k < g.n; ++k)
        s.lo = std::max(s.lo, g.a[k] - 1.0);
    for (std::size_t j = 0; j < g.m; ++j)
        s.hi = std::min(s.hi, g.b[j]);
    return s;
}

// log of the Mellin-Barnes kernel phi(u) for one parameter block.
std::complex<double> log_phi(const MeijerGSpec& g, std::complex<double> u) {
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

// Log-gamma of a real argument with sign; pole handling chosen by caller.
LogScaled ls_gamma(double x) {
    int sign = 0;
    const double lg = boost::math::lgamma(x, &sign);
    return LogScaled::from_log(lg, sign);
}

MeijerGSpec reciprocal_spec(const MeijerGSpec& g) {
    MeijerGSpec r;
    r.m = g.n;
    r.n = g.m;
    r.a.reserve(g.q());
    r.b.reserve(g.p());
    for (std::size_t j = 0; j < g.m; ++j)
        r.a.push_back(1.0 - g.b[j]);
    for (std::size_t j = g.m; j < g.q(); ++j)
        r.a.push_back(1.0 - g.b[j]);
    for (std::size_t k = 0; k < g.n; ++k)
        r.b.push_back(1.0 - g.a[k]);
    for (std::size_t k = g.n; k < g.p(); ++k)
        r.b.push_back(1.0 - g.a[k]);
    return r;
}

} // namespace

void MeijerGSpec::validate() const {
    if (m > q())
        throw std::invalid_argument("MeijerGSpec: m exceeds q");
    if (n > p())
        throw std::invalid_argument("MeijerGSpec: n exceeds p");
    if (q() == 0 && p() == 0)
        throw std::invalid_argument("MeijerGSpec: empty parameter lists");
    for (double v : a)
        if (!std::isfinite(v))
            throw std::invalid_argument("MeijerGSpec: non-finite a parameter");
    for (double v : b)
        if (!std::isfinite(v))
            throw std::invalid_argument("MeijerGSpec: non-finite b parameter");
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t j = 0; j < m; ++j) {
            const double d = a[k] - b[j];
            if (d >= 1.0 - 1e-9 && near_integer(d))
                throw std::invalid_argument(
                    "MeijerGSpec: pole families collide (a[" + std::to_string(k) +
                    "] - b[" + std::to_string(j) + "] = " + std::to_string(d) +
                    " is a positive integer)");
        }
    }
}

namespace detail {

LogScaled meijer_g_contour(const MeijerGSpec& g, double z) {
    const Strip strip = fundamental_strip(g);
    if (std::isfinite(strip.lo) && std::isfinite(strip.hi) &&
        !(strip.hi - strip.lo > 0.01)) {
        std::ostringstream msg;
        msg << "meijer_g: fundamental strip (" << strip.lo << ", " << strip.hi
            << ") is empty or too narrow for a straight contour";
        throw NumericsError(msg.str());
    }

    const double c0 = static_cast<double>(g.m + g.n) -
                      0.5 * static_cast<double>(g.p() + g.q());
    if (c0 <= 0.05)
        throw NumericsError("meijer_g: contour integrand decay exponent " +
                            std::to_string(c0) + " too weak");

    const double lnz = std::log(z);
    if (std::fabs(lnz) > 600.0)
        throw NumericsError("meijer_g: argument magnitude out of supported range");

    // Abscissa selection: put the contour through the magnitude minimum of
    // the integrand (the Mellin saddle). The phase is stationary there, so
    // the quadrature does not have to resolve oscillatory cancellation, and
    // results far below the integrand scale (deep tails like exp(-z) for
    // large z) stay accurate. Sampled at Im(s) = 0.5 so real-axis zeros and
    // poles of the denominator factors cannot distort the objective. The
    // contour must also stay a resolvable distance from the pole families at
    // the strip edges: closer than edge_margin, the integrand develops a
    // feature narrower than the panel node spacing and the quadrature
    // silently loses digits, so narrow strips fall back to the midpoint.
    auto apex_mag = [&](double s) {
        return lnz * s + log_phi(g, std::complex<double>{s, 0.5}).real();
    };
    const double edge_margin = 0.3;

    double sigma;
    bool search = false;
    double blo = 0.0, bhi = 0.0;
    if (std::isfinite(strip.lo) && std::isfinite(strip.hi)) {
        if (strip.hi - strip.lo > 2.0 * edge_margin + 0.1) {
            blo = strip.lo + edge_margin;
            bhi = strip.hi - edge_margin;
            search = true;
        }
        sigma = 0.5 * (strip.lo + strip.hi);
    } else if (std::isfinite(strip.hi)) {
        bhi = strip.hi - edge_margin;
        blo = bhi;
        for (double step = 1.0; step < 1e7; step *= 2.0) {
            if (apex_mag(blo - step) >= apex_mag(blo))
                break;
            blo -= step;
        }
        blo -= 1.0;
        sigma = strip.hi - 0.5;
        search = true;
    } else if (std::isfinite(strip.lo)) {
        blo = strip.lo + edge_margin;
        bhi = blo;
        for (double step = 1.0; step < 1e7; step *= 2.0) {
            if (apex_mag(bhi + step) >= apex_mag(bhi))
                break;
            bhi += step;
        }
        bhi += 1.0;
        sigma = strip.lo + 0.5;
        search = true;
    } else {
        blo = bhi = 0.0;
        for (double step = 1.0; step < 1e7; step *= 2.0) {
            if (apex_mag(blo - step) >= apex_mag(blo))
                break;
            blo -= step;
        }
        for (double step = 1.0; step < 1e7; step *= 2.0) {
            if (apex_mag(bhi + step) >= apex_mag(bhi))
                break;
            bhi += step;
        }
        blo -= 1.0;
        bhi += 1.0;
        sigma = 0.0;
        search = true;
    }

    if (search && bhi - blo > 1e-6) {
        // Coarse scan guards against boundary wiggles of Re log Gamma, then
        // a ternary refinement localizes the saddle. The exact minimizer is
        // not needed; any low-magnitude abscissa conditions the integral.
        const int cells = 32;
        double best = apex_mag(sigma);
        if (!std::isfinite(best))
            best = k_inf;
        for (int i = 0; i <= cells; ++i) {
            const double s = blo + (bhi - blo) * static_cast<double>(i) / cells;
            const double v = apex_mag(s);
            if (v < best) {
                best = v;
                sigma = s;
            }
        }
        double tlo = std::max(blo, sigma - (bhi - blo) / cells);
        double thi = std::min(bhi, sigma + (bhi - blo) / cells);
        for (int it = 0; it < 60 && thi - tlo > 1e-4; ++it) {
            const double m1 = tlo + (thi - tlo) / 3.0;
            const double m2 = thi - (thi - tlo) / 3.0;
            if (apex_mag(m1) <= apex_mag(m2))
                thi = m2;
            else
                tlo = m1;
        }
        sigma = 0.5 * (tlo + thi);
    }

    auto log_integrand = [&](double tau) {
        const std::complex<double> s{sigma, tau};
        return lnz * s + log_phi(g, s);
    };

    // Offset from the contour apex keeps exp() in range.
    double off = -k_inf;
    for (double tau : {0.0, 0.25, 0.5, 1.0, 2.0}) {
        const double re = log_integrand(tau).real();
        if (std::isfinite(re))
            off = std::max(off, re);
    }
    if (!std::isfinite(off))
        throw NumericsError("meijer_g: integrand vanished identically near the apex");

    const std::size_t n_nodes = 48;
    const auto& nodes = gauss_legendre_nodes(n_nodes);
    const auto& weights = gauss_legendre_weights(n_nodes);
    // Panels must resolve the sharpest integrand feature. Its scale is the
    // distance from the contour to the nearest pole family: a strip edge at
    // distance d puts a feature of half-width ~d at tau = 0, so the panel
    // width is capped at a small multiple of d or the nodes step over it.
    double edge_dist = k_inf;
    if (std::isfinite(strip.lo))
        edge_dist = std::min(edge_dist, sigma - strip.lo);
    if (std::isfinite(strip.hi))
        edge_dist = std::min(edge_dist, strip.hi - sigma);
    const double width = std::min(
        {1.0, 30.0 / std::max(1.0, std::fabs(lnz)), 6.0 * edge_dist});

    double total = 0.0;
    int small_streak = 0;
    const double tau_cap = 2000.0;
    for (std::size_t panel = 0;; ++panel) {
        const double t0 = static_cast<double>(panel) * width;
        if (t0 > tau_cap) {
            std::ostringstream msg;
            msg << "meijer_g: contour integral did not converge (sigma = " << sigma
                << ", tau > " << tau_cap << ")";
            throw NumericsError(msg.str());
        }
        const double mid = t0 + 0.5 * width;
        const double half = 0.5 * width;
        double piece = 0.0;
        for (std::size_t i = 0; i < n_nodes; ++i) {
            const std::complex<double> lf = log_integrand(mid + half * nodes[i]);
            const double re_l = lf.real() - off;
            if (re_l > -745.0)
                piece += weights[i] * std::exp(re_l) * std::cos(lf.imag());
        }
        piece *= half;
        total += piece;
        if (std::fabs(piece) <= 1e-17 * std::max(std::fabs(total), 1e-300))
            ++small_streak;
        else
            small_streak = 0;
        if (small_streak >= 3)
            break;
    }

    if (total == 0.0)
        return LogScaled::zero();
    return LogScaled::from_log(std::log(std::fabs(total)) - std::log(M_PI) + off,
                               total > 0.0 ? 1 : -1);
}

// Residue-series path. Requires simple, well-separated right-family poles:
// pairwise differences of b_1..b_m must be non-integer, and p < q (or p == q
// with z < 1). Used as an independent cross-check of the contour.
LogScaled meijer_g_slater(const MeijerGSpec& g, double z) {
    const std::size_t p = g.p(), q = g.q();
    if (p > q || (p == q && z >= 1.0))
        throw NumericsError("meijer_g series: divergent parameter/argument range");
    for (std::size_t i = 0; i < g.m; ++i)
        for (std::size_t j = 0; j < g.m; ++j)
            if (i != j && near_integer(g.b[i] - g.b[j], 1e-6))
                throw NumericsError("meijer_g series: coincident right-family poles");

    const double lnz = std::log(z);
    const long parity = static_cast<long>(p) - static_cast<long>(g.m) -
                        static_cast<long>(g.n);
    const double sign_factor = (parity % 2 == 0) ? 1.0 : -1.0;

    LogScaled total = LogScaled::zero();
    double max_term_log = -k_inf;

    for (std::size_t h = 0; h < g.m; ++h) {
        const double bh = g.b[h];
        LogScaled coeff = LogScaled::from_log(bh * lnz, 1);
        bool vanished = false;
        for (std::size_t j = 0; j < g.m && !vanished; ++j) {
            if (j == h)
                continue;
            coeff = coeff * ls_gamma(g.b[j] - bh);
        }
        for (std::size_t k = 0; k < g.n; ++k)
            coeff = coeff * ls_gamma(1.0 - g.a[k] + bh);
        for (std::size_t j = g.m; j < q; ++j) {
            const double arg = 1.0 + bh - g.b[j];
            if (near_nonpositive_integer(arg)) {
                vanished = true; // denominator Gamma pole kills the term
                break;
            }
            coeff = coeff / ls_gamma(arg);
        }
        if (!vanished) {
            for (std::size_t k = g.n; k < p; ++k) {
                const double arg = g.a[k] - bh;
                if (near_nonpositive_integer(arg)) {
                    vanished = true;
                    break;
                }
                coeff = coeff / ls_gamma(arg);
            }
        }
        if (vanished)
            continue;

        LogScaled term = coeff;
        LogScaled series = term;
        max_term_log = std::max(max_term_log, term.log_abs);
        int small_streak = 0;
        for (std::size_t ell = 0;; ++ell) {
            if (ell > 200000)
                throw NumericsError("meijer_g series: no convergence after 200000 terms");
            double ratio = sign_factor * z / (static_cast<double>(ell) + 1.0);
            for (std::size_t k = 0; k < p; ++k)
                ratio *= 1.0 - g.a[k] + bh + static_cast<double>(ell);
            for (std::size_t j = 0; j < q; ++j) {
                if (j == h)
                    continue;
                ratio /= 1.0 + bh - g.b[j] + static_cast<double>(ell);
            }
            term = term * LogScaled::from_value(ratio);
            if (term.is_zero())
                break;
            series += term;
            max_term_log = std::max(max_term_log, term.log_abs);
            const double ref = series.is_zero() ? max_term_log - 60.0 : series.log_abs;
            if (term.log_abs < ref + std::log(1e-17))
                ++small_streak;
            else
                small_streak = 0;
            if (small_streak >= 2)
                break;
        }
        total += series;
    }

    const double total_log = total.is_zero() ? -k_inf : total.log_abs;
    if (max_term_log - total_log > std::log(1e12))
        throw NumericsError("meijer_g series: catastrophic cancellation");
    return total;
}

} // namespace detail

LogScaled meijer_g_log(const MeijerGSpec& spec, double x) {
    spec.validate();
    if (!(x > 0.0))
        throw std::invalid_argument("meijer_g: argument must be > 0, got " +
                                    std::to_string(x));
    if (spec.p() > spec.q()) {
        MeijerGSpec flipped = reciprocal_spec(spec);
        flipped.validate();
        return detail::meijer_g_contour(flipped, 1.0 / x);
    }
    return detail::meijer_g_contour(spec, x);
}

double meijer_g(const MeijerGSpec& spec, double x) {
    const LogScaled r = meijer_g_log(spec, x);
    if (r.is_zero())
        return 0.0;
    if (r.log_abs > 700.0)
        throw NumericsError("meijer_g: result magnitude exceeds double range; "
                            "use meijer_g_log");
    return r.value();
}

} // namespace rissec

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

#include "rissec/specfun.hpp"

#include <cmath>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "rissec/errors.hpp"

namespace rissec {

namespace detail {

// Lanczos g = 7, 9 coefficients; ~1e-15 relative accuracy for Re(w) >= 0.5.
static constexpr double k_lanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

static constexpr double k_half_log_two_pi = 0.91893853320467274178; // ln(2 pi) / 2

// Non-throwing principal-branch log-gamma; returns +inf at the poles.
// Branch correctness follows from lnG(z) = lnG(z+1) - Log(z) holding for the
// principal branch everywhere off (-inf, 0].
std::complex<double> cln_gamma(std::complex<double> z) {
    if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real()))
        return {std::numeric_limits<double>::infinity(), 0.0};

    if (z.imag() < 0.0)
        return std::conj(cln_gamma(std::conj(z)));

    std::complex<double> shift{0.0, 0.0};
    while (z.real() < 0.5) {
        shift += std::log(z);
        z += 1.0;
    }

    std::complex<double> w = z - 1.0;
    std::complex<double> acc{k_lanczos[0], 0.0};
    for (int i = 1; i < 9; ++i)
        acc += k_lanczos[i] / (w + static_cast<double>(i));
    const std::complex<double> t = w + 7.5;
    return k_half_log_two_pi + (w + 0.5) * std::log(t) - t + std::log(acc) - shift;
}

double log_integrand_peak(double nu, double x) {
    // maximum over t >= 0 of -x cosh(t) + ln cosh(nu t)
    if (nu <= 0.0)
        return -x;
    const double ts = std::asinh(nu / x);
    const double y = nu * ts;
    const double log_cosh = y > 30.0 ? y - std::log(2.0) : std::log(std::cosh(y));
    return -x * std::cosh(ts) + log_cosh;
}

} // namespace detail

std::complex<double> ln_gamma_complex(std::complex<double> z) {
    if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real()))
        throw std::domain_error("ln_gamma_complex: pole at non-positive integer z = " +
                                std::to_string(z.real()));
    return detail::cln_gamma(z);
}

double lower_incomplete_gamma(double a, double x) {
    if (!(a > 0.0))
        throw std::invalid_argument("lower_incomplete_gamma: a must be > 0, got " +
                                    std::to_string(a));
    if (!(x >= 0.0))
        throw std::invalid_argument("lower_incomplete_gamma: x must be >= 0, got " +
                                    std::to_string(x));
    if (x == 0.0)
        return 0.0;
    return boost::math::tgamma_lower(a, x);
}

double regularized_lower_gamma(double a, double x) {
    if (!(a > 0.0))
        throw std::invalid_argument("regularized_lower_gamma: a must be > 0, got " +
                                    std::to_string(a));
    if (!(x >= 0.0))
        throw std::invalid_argument("regularized_lower_gamma: x must be >= 0, got " +
                                    std::to_string(x));
    if (x == 0.0)
        return 0.0;
    return boost::math::gamma_p(a, x);
}

double bessel_k_real_order(double nu, double x) {
    if (!(x > 0.0))
        throw std::invalid_argument("bessel_k_real_order: x must be > 0, got " +
                                    std::to_string(x));
    return boost::math::cyl_bessel_k(std::fabs(nu), x);
}

double log_bessel_k(double nu, double x) {
    if (!(x > 0.0))
        throw std::invalid_argument("log_bessel_k: x must be > 0, got " +
                                    std::to_string(x));
    nu = std::fabs(nu);

    // Prefer the direct value while it is comfortably inside double range.
    if (nu <= 80.0 && x <= 600.0) {
        try {
            const double direct = boost::math::cyl_bessel_k(nu, x);
            if (std::isfinite(direct) && direct > 1e-280 && direct < 1e280)
                return std::log(direct);
        } catch (const std::overflow_error&) {
            // fall through to the integral representation
        }
    }

    // K_nu(x) = int_0^inf exp(-x cosh t) cosh(nu t) dt, evaluated with the
    // peak exponent factored out.
    const double peak = detail::log_integrand_peak(nu, x);
    const double t_star = nu > 0.0 ? std::asinh(nu / x) : 0.0;

    auto log_f = [nu, x](double t) {
        // ln cosh(y) computed overflow-safe
        const double y = nu * t;
        const double log_cosh = y > 30.0 ? y - std::log(2.0)
                                         : std::log(std::cosh(y));
        return -x * std::cosh(t) + log_cosh;
    };

    // The integrand peaks at t_star (possibly far from the origin when x is
    // tiny); bracket the peak tightly on both sides so the quadrature always
    // resolves it.
    double hi = t_star + 1.0;
    double step = 1.0;
    int expand = 0;
    while (log_f(hi) - peak > -60.0 && expand < 120) {
        step *= 1.5;
        hi = t_star + step;
        ++expand;
    }
    if (expand >= 120)
        throw NumericsError("log_bessel_k: tail truncation failed for nu = " +
                            std::to_string(nu) + ", x = " + std::to_string(x));

    double lo = std::max(0.0, t_star - 1.0);
    step = 1.0;
    while (lo > 0.0 && log_f(lo) - peak > -60.0) {
        step *= 1.5;
        lo = std::max(0.0, t_star - step);
    }

    auto f = [&](double t) { return std::exp(log_f(t) - peak); };
    using quad = boost::math::quadrature::gauss_kronrod<double, 15>;
    double err = 0.0;
    const double integral = quad::integrate(f, lo, hi, 15, 1e-13, &err);
    if (!(integral > 0.0) || !std::isfinite(integral))
        throw NumericsError("log_bessel_k: quadrature failed for nu = " +
                            std::to_string(nu) + ", x = " + std::to_string(x));
    return peak + std::log(integral);
}

} // namespace rissec

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

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "rissec/log_scaled.hpp"

namespace rissec {

// Principal-branch log-gamma on the complex plane. Throws std::domain_error
// at the poles (z = 0, -1, -2, ...).
std::complex<double> ln_gamma_complex(std::complex<double> z);

// Unnormalized lower incomplete gamma(a, x) = int_0^x t^(a-1) e^-t dt, a > 0, x >= 0.
double lower_incomplete_gamma(double a, double x);

// Regularized P(a, x) = gamma(a, x) / Gamma(a).
double regularized_lower_gamma(double a, double x);

// Modified Bessel function of the second kind, real order. x > 0.
double bessel_k_real_order(double nu, double x);

// ln K_nu(x), stable where K_nu(x) itself over- or underflows double
// (large |nu|, or x far into the exponential tail).
double log_bessel_k(double nu, double x);

// Meijer G parameterization. Defines the Mellin-Barnes kernel
//   phi(s) = prod_{j<=m} Gamma(b_j - s) * prod_{k<=n} Gamma(1 - a_k + s)
//          / (prod_{j>m} Gamma(1 - b_j + s) * prod_{k>n} Gamma(a_k - s)),
// and G(z) = (1 / 2 pi i) int_L phi(s) z^s ds over a vertical line L that
// separates the increasing pole family of the Gamma(b_j - s) factors from the
// decreasing family of the Gamma(1 - a_k + s) factors.
struct MeijerGSpec {
    std::size_t m = 0;
    std::size_t n = 0;
    std::vector<double> a; // size p
    std::vector<double> b; // size q

    std::size_t p() const { return a.size(); }
    std::size_t q() const { return b.size(); }

    // Throws std::invalid_argument on malformed orders or colliding pole
    // families (some a_k - b_j a positive integer for k <= n, j <= m).
    void validate() const;
};

// Evaluate G(x) for x > 0. Throws std::invalid_argument on bad specs and
// rissec::NumericsError when the evaluation does not converge or the result
// magnitude leaves double range (use meijer_g_log for the latter).
double meijer_g(const MeijerGSpec& spec, double x);

// Same evaluation, result in log space (never overflows for representable
// log magnitudes).
LogScaled meijer_g_log(const MeijerGSpec& spec, double x);

// Two-variable Mellin-Barnes integral
//   H(x, y) = (1 / (2 pi i)^2) intint Phi(s + t) phi_x(s) phi_y(t) x^s y^t ds dt
// where each block contributes the same kernel shape as MeijerGSpec's phi.
struct BivariateGSpec {
    MeijerGSpec outer;   // Phi, argument s + t
    MeijerGSpec block_x; // phi_x, argument s
    MeijerGSpec block_y; // phi_y, argument t
    void validate() const;
};

// Evaluate H(x, y) for 0 < x, y <= 1e8. Throws rissec::NumericsError when no
// admissible pair of contour abscissae exists or the integral fails to
// converge within the panel budget.
double bivariate_meijer_g(const BivariateGSpec& spec, double x, double y);
LogScaled bivariate_meijer_g_log(const BivariateGSpec& spec, double x, double y);

} // namespace rissec

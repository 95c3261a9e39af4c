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

#include "rissec/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "rissec/errors.hpp"

namespace rissec {

double integrate_finite(const std::function<double(double)>& f, double a, double b,
                        QuadratureOptions opt) {
    if (!(a < b))
        throw std::invalid_argument("integrate_finite: need a < b");
    using quad = boost::math::quadrature::gauss_kronrod<double, 15>;
    double err = 0.0;
    const double v = quad::integrate(f, a, b, 15, opt.rel_tol * 0.01, &err);
    if (!std::isfinite(v))
        throw NumericsError("integrate_finite: integral is not finite");
    return v;
}

double integrate_endpoint_singular(const std::function<double(double)>& f, double a,
                                   double b, QuadratureOptions opt) {
    if (!(a < b))
        throw std::invalid_argument("integrate_endpoint_singular: need a < b");
    boost::math::quadrature::tanh_sinh<double> integrator(15);
    double err = 0.0, l1 = 0.0;
    const double v = integrator.integrate(f, a, b, opt.rel_tol * 0.1, &err, &l1);
    if (!std::isfinite(v))
        throw NumericsError("integrate_endpoint_singular: integral is not finite");
    return v;
}

double integrate_half_line(const std::function<double(double)>& f,
                           QuadratureOptions opt) {
    auto mapped = [&f](double t) {
        const double one_m = 1.0 - t;
        const double x = t / one_m;
        return f(x) / (one_m * one_m);
    };
    return integrate_endpoint_singular(mapped, 0.0, 1.0, opt);
}

double integrate_half_line_exp(const std::function<double(double)>& f, double rate,
                               QuadratureOptions opt) {
    if (!(rate > 0.0))
        throw std::invalid_argument("integrate_half_line_exp: rate must be > 0");
    auto mapped = [&f, rate](double u) {
        const double x = -std::log1p(-u) / rate;
        return f(x) / (rate * (1.0 - u));
    };
    return integrate_endpoint_singular(mapped, 0.0, 1.0, opt);
}

namespace {

// Legendre nodes by Newton iteration on P_n, good to ~1e-15.
void compute_gauss_legendre(std::size_t n, std::vector<double>& nodes,
                            std::vector<double>& weights) {
    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);
    const std::size_t half = (n + 1) / 2;
    for (std::size_t i = 0; i < half; ++i) {
        // Chebyshev-based initial guess
        double x = std::cos(M_PI * (static_cast<double>(i) + 0.75) /
                            (static_cast<double>(n) + 0.5));
        double p_deriv = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (std::size_t k = 2; k <= n; ++k) {
                const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = pk;
            }
            p_deriv = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / p_deriv;
            x -= dx;
            if (std::fabs(dx) < 1e-16)
                break;
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * p_deriv * p_deriv);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
}

struct GlTable {
    std::vector<double> nodes;
    std::vector<double> weights;
};

const GlTable& gl_table(std::size_t n) {
    static std::map<std::size_t, GlTable> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) {
        GlTable t;
        compute_gauss_legendre(n, t.nodes, t.weights);
        it = cache.emplace(n, std::move(t)).first;
    }
    return it->second;
}

} // namespace

const std::vector<double>& gauss_legendre_nodes(std::size_t n) {
    return gl_table(n).nodes;
}

const std::vector<double>& gauss_legendre_weights(std::size_t n) {
    return gl_table(n).weights;
}

} // namespace rissec

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

#include <cstddef>
#include <functional>
#include <vector>

namespace rissec {

struct QuadratureOptions {
    double abs_tol = 1e-10;
    double rel_tol = 1e-8;
};

// Adaptive Gauss-Kronrod on a finite interval; integrand must be bounded.
double integrate_finite(const std::function<double(double)>& f, double a, double b,
                        QuadratureOptions opt = {});

// Double-exponential rule on a finite interval; tolerates integrable
// endpoint singularities (x^(p-1) with p > 0, log blowups).
double integrate_endpoint_singular(const std::function<double(double)>& f, double a,
                                   double b, QuadratureOptions opt = {});

// int_0^inf f(x) dx via the rational map x = t / (1 - t).
double integrate_half_line(const std::function<double(double)>& f,
                           QuadratureOptions opt = {});

// int_0^inf f(x) dx for integrands with an exp(-rate x) tail, via
// x = -ln(1 - u) / rate. rate > 0.
double integrate_half_line_exp(const std::function<double(double)>& f, double rate,
                               QuadratureOptions opt = {});

// Gauss-Legendre nodes and weights on [-1, 1], computed once and cached.
const std::vector<double>& gauss_legendre_nodes(std::size_t n);
const std::vector<double>& gauss_legendre_weights(std::size_t n);

} // namespace rissec

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
#include <string>
#include <vector>

namespace rissec {

struct MgTerm {
    double a = 0.0; // term coefficient
    double b = 1.0; // term shape, > 0
};

// Mixture-gamma envelope model: the amplitude X >= 0 has density
//   f(x) = sum_n 2 a_n x^(2 b_n - 1) exp(-c x^2),
// equivalently X^2 is a finite mixture of gamma laws with common rate c.
// Normalization requires sum_n a_n c^(-b_n) Gamma(b_n) = 1.
struct MixtureGamma {
    std::vector<MgTerm> terms;
    double c = 1.0;
    std::string label;
};

// Throws std::invalid_argument when structure or normalization
// (|sum of weights - 1| > norm_tol) is broken.
void validate_mixture(const MixtureGamma& mg, double norm_tol = 1e-9);

// Gamma-mixture approximation of a unit-power Rice envelope with linear
// K-factor k_factor >= 0, truncated to n_terms terms (1..60) and renormalized.
MixtureGamma mg_from_rice(double k_factor, std::size_t n_terms);

// Exact single-term representation of a unit-power Nakagami-m envelope,
// m >= 0.5.
MixtureGamma mg_from_nakagami(double m);

double mg_pdf(const MixtureGamma& mg, double x);
double mg_cdf(const MixtureGamma& mg, double x);

// E[X^order] for order >= 0.
double mg_moment(const MixtureGamma& mg, double order);

// JSON schema: {"terms": [{"a": .., "b": ..}, ...], "c": .., "label": ..}
std::string mg_to_json(const MixtureGamma& mg);
MixtureGamma mg_from_json(const std::string& text);

// Reads and validates a JSON channel file; missing or malformed files raise
// std::runtime_error naming the path.
MixtureGamma mg_load(const std::string& path);

} // namespace rissec

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

#include "rissec/channel.hpp"

namespace rissec {

// Generalized-K surrogate for the coherent sum of M independent two-hop
// envelope products: shapes (k_a, m_a), scale xi = sqrt(k_a m_a / omega),
// omega = E[sum^2]. Density
//   f(x) = 4 xi^(k+m) / (Gamma(k) Gamma(m)) x^(k+m-1) K_{k-m}(2 xi x).
struct CascadeFit {
    double k_a = 0.0;
    double m_a = 0.0;
    double xi = 0.0;
    double omega = 0.0;
    std::size_t m_elements = 0; // number of summed element products (M)
};

// E[(X_a X_r)^order] for independent mixture-gamma envelopes.
double product_moment(const MixtureGamma& mg_a, const MixtureGamma& mg_r, double order);

// Raw moments E[S^l], l = 0..l_max, of S = sum of m_elements independent
// copies of the two-hop product, via the binomial convolution of moment
// sequences. Throws NumericsError if a moment leaves double range.
std::vector<double> cascade_moments(const MixtureGamma& mg_a, const MixtureGamma& mg_r,
                                    std::size_t m_elements, std::size_t l_max);

// Match (mu2, mu4, mu6) to the generalized-K family. Throws
// std::invalid_argument when the moment triple is not attainable
// (mu4 <= mu2^2, negative root discriminant, or non-positive shape roots),
// echoing the offending values.
CascadeFit fit_cascade(double mu2, double mu4, double mu6, std::size_t m_elements);

// Convenience: moments from the hop models, then fit.
CascadeFit fit_cascade_from_channels(const MixtureGamma& mg_a, const MixtureGamma& mg_r,
                                     std::size_t m_elements);

// Density and distribution of the fitted combined amplitude.
double cascade_pdf(const CascadeFit& fit, double x);
double cascade_cdf(const CascadeFit& fit, double x);

// JSON schema: {"k": .., "m": .., "xi": .., "omega": .., "M": ..}
std::string fit_to_json(const CascadeFit& fit);
CascadeFit fit_from_json(const std::string& text);

} // namespace rissec

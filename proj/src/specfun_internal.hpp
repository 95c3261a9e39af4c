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

#include "rissec/log_scaled.hpp"
#include "rissec/specfun.hpp"

namespace rissec::detail {

// Non-throwing principal-branch log-gamma; +inf at the poles.
std::complex<double> cln_gamma(std::complex<double> z);

// Mellin-Barnes contour path (primary). Requires p <= q.
LogScaled meijer_g_contour(const MeijerGSpec& g, double z);

// Residue-series path; independent cross-check for simple separated poles.
LogScaled meijer_g_slater(const MeijerGSpec& g, double z);

} // namespace rissec::detail

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

#include "rissec/cascade.hpp"
#include "rissec/channel.hpp"

namespace rissec {

// Mean SNR scale of each link, linear (dB conversion happens at the CLI).
struct LinkBudget {
    double rho_b = 1.0; // legitimate link, > 0
    double rho_e = 1.0; // eavesdropper link, > 0
};

enum class EvalMethod {
    closed_form,
    quadrature,
};

// corrected:     internally consistent analytics; every closed form agrees
//                with direct numerical integration of the model densities.
// paper_literal: reproduces the published reference curves verbatim,
//                including the scale-factor slips they carry (dropped
//                mixture rate in the eavesdropper law, and the published
//                average-rate split). Kept for comparison work.
enum class AnalysisVariant {
    corrected,
    paper_literal,
};

struct SecrecyConfig {
    CascadeFit fit;        // legitimate combined channel
    MixtureGamma mg_e;     // eavesdropper envelope model
    LinkBudget budget;
    AnalysisVariant variant = AnalysisVariant::corrected;
};

// Instantaneous SNR laws. gamma_b = rho_b * (combined amplitude)^2,
// gamma_e = rho_e * (eavesdropper amplitude)^2.
double gamma_b_cdf(const SecrecyConfig& cfg, double x);
double gamma_b_pdf(const SecrecyConfig& cfg, double x);
double gamma_e_cdf(const SecrecyConfig& cfg, double x);
double gamma_e_pdf(const SecrecyConfig& cfg, double x);

// P(C_E >= C_B): probability the eavesdropper SNR meets or beats the
// legitimate SNR. Values outside [0,1] by more than 1e-6 raise
// ConsistencyError; smaller excursions are clamped.
double prob_zero_secrecy(const SecrecyConfig& cfg, EvalMethod method);

// Ergodic capacities E[log2(1 + gamma)] of each link, bits/s/Hz.
double ergodic_capacity_b(const SecrecyConfig& cfg, EvalMethod method);
double ergodic_capacity_e(const SecrecyConfig& cfg, EvalMethod method);

// Capacity gap E[C_B] - E[C_E]; may be negative.
double avg_secrecy_rate_partial(const SecrecyConfig& cfg);

// E[max(C_B - C_E, 0)] under the corrected variant; the literal variant
// returns the published two-term split instead. In the corrected variant a
// result below -1e-6 raises ConsistencyError and smaller negatives clamp
// to zero. When the closed-form double integral fails to converge the
// implementation falls back to the quadrature path.
double avg_secrecy_rate_full(const SecrecyConfig& cfg, EvalMethod method);

} // namespace rissec

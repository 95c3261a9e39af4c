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

#include <cstdint>
#include <string>
#include <vector>

#include "rissec/mcsim.hpp"
#include "rissec/secrecy.hpp"

namespace rissec {

enum class Metric { p_leak, c_s_full, r_s_partial, capacity_b, capacity_e };
enum class SweepVariable { rho_b_db, rho_ratio_db, m_elements };
enum class SweepMethod { closed, quadrature, mc };

std::string to_string(Metric m);
std::string to_string(SweepVariable v);
std::string to_string(SweepMethod m);
Metric parse_metric(const std::string& s);
SweepVariable parse_sweep_variable(const std::string& s);
SweepMethod parse_sweep_method(const std::string& s);

struct McOptions {
    std::uint64_t n_samples = 1000000;
    std::uint64_t seed = 12345;
};

struct SweepSpec {
    Metric metric = Metric::p_leak;
    SweepVariable sweep_var = SweepVariable::rho_b_db;
    std::vector<double> sweep_values;

    std::size_t m_elements = 4;
    double kr_db = 5.0;        // hop Rice factor, dB
    std::size_t n_terms = 20;  // mixture terms for the Rice approximation
    double eve_m = 3.0;        // eavesdropper Nakagami shape
    MixtureGamma hop_channel;  // optional override; empty terms = Rice(kr_db)
    MixtureGamma eve_channel;  // optional override; empty terms = Nakagami(eve_m)
    double rho_b_db = 0.0;
    double rho_e_db = 0.0;

    std::vector<SweepMethod> methods = {SweepMethod::closed};
    AnalysisVariant variant = AnalysisVariant::corrected;
    McOptions mc;
};

struct SweepRow {
    std::string metric;
    std::string method;
    std::string sweep_var;
    double sweep_value = 0.0;
    std::size_t m_elements = 0;
    double kr_db = 0.0;   // NaN when a custom hop channel is used
    double eve_m = 0.0;   // NaN when a custom eavesdropper channel is used
    double rho_b_db = 0.0;
    double rho_e_db = 0.0;
    double value = 0.0;
    double std_error = 0.0; // meaningful only when is_mc
    std::uint64_t n_samples = 0;
    std::uint64_t seed = 0;
    bool is_mc = false;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    std::vector<std::string> warnings; // e.g. rare-event notices
};

// Evaluate the requested metric for every (sweep value, method) pair, rows
// ordered by sweep value then method. Propagates evaluation errors.
SweepResult run_sweep(const SweepSpec& spec);

// CSV with the fixed column schema
// metric,method,sweep_var,sweep_value,M,K_r_db,m,rho_b_db,rho_e_db,value,std_error,n_samples,seed
// preceded (optionally) by a "# rissec <version>" comment line.
std::string rows_to_csv(const std::vector<SweepRow>& rows, bool version_header = true);

// Newline-delimited JSON, one object per row, same keys as the CSV columns.
std::string rows_to_ndjson(const std::vector<SweepRow>& rows);

} // namespace rissec

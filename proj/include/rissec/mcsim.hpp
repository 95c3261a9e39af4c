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

#include "rissec/channel.hpp"
#include "rissec/secrecy.hpp"

namespace rissec {

// Counter-based stream: stream i of a given seed is an independent sequence,
// so sample i draws the same variates no matter how samples are distributed
// over worker threads.
class SampleRng {
  public:
    SampleRng(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t next_u64();
    double next_uniform();              // [0, 1)
    double next_normal();               // standard normal, Box-Muller
    double next_gamma(double shape);    // unit rate, shape > 0

  private:
    std::uint64_t state_;
    double cached_normal_ = 0.0;
    bool has_cached_normal_ = false;
};

struct McEstimate {
    double value = 0.0;
    double std_error = 0.0;
    std::uint64_t n_samples = 0;
    std::uint64_t seed = 0;
};

struct McMetrics {
    McEstimate p_leak;      // P(gamma_E >= gamma_B)
    McEstimate c_s_full;    // E[max(C_B - C_E, 0)]
    McEstimate r_s_partial; // E[C_B] - E[C_E]
    McEstimate capacity_b;
    McEstimate capacity_e;
    std::uint64_t leak_events = 0; // raw count behind p_leak
};

// One draw of the mixture-gamma envelope.
double sample_mg_envelope(const MixtureGamma& mg, SampleRng& rng);

// One draw of the coherent sum of m_elements >= 1 independent two-hop
// products with the given hop models.
double sample_cascade(const MixtureGamma& mg_a, const MixtureGamma& mg_r,
                      std::size_t m_elements, SampleRng& rng);

// Simulate all metrics in one pass. n_samples >= 10000. workers = 0 picks
// the RISSEC_WORKERS environment value, else the hardware thread count;
// results are bit-identical for any worker count.
McMetrics estimate_metrics(const MixtureGamma& mg_a, const MixtureGamma& mg_r,
                           std::size_t m_elements, const MixtureGamma& mg_e,
                           const LinkBudget& budget, std::uint64_t n_samples,
                           std::uint64_t seed, unsigned workers = 0);

// Worker-count resolution used by estimate_metrics (exposed for the CLI).
unsigned resolve_worker_count(unsigned requested = 0);

} // namespace rissec

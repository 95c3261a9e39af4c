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
//
// Monte Carlo reference for every analytic metric. Each sample owns a
// counter-derived random stream, and per-block partial sums are reduced in
// block order, so results are bit-identical for any worker count.

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>
#include <vector>

#include "rissec/mcsim.hpp"

namespace rissec {

namespace {

constexpr std::uint64_t k_golden = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

} // namespace

SampleRng::SampleRng(std::uint64_t seed, std::uint64_t stream)
    : state_(mix64(seed) ^ mix64((stream + 1) * k_golden)) {}

std::uint64_t SampleRng::next_u64() {
    state_ += k_golden;
    return mix64(state_);
}

double SampleRng::next_uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double SampleRng::next_normal() {
    if (has_cached_normal_) {
        has_cached_normal_ = false;
        return cached_normal_;
    }
    double u1;
    do {
        u1 = next_uniform();
    } while (u1 <= 0.0);
    const double u2 = next_uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * M_PI * u2;
    cached_normal_ = r * std::sin(theta);
    has_cached_normal_ = true;
    return r * std::cos(theta);
}

double SampleRng::next_gamma(double shape) {
    if (!(shape > 0.0))
        throw std::invalid_argument("next_gamma: shape must be > 0");
    if (shape < 1.0) {
        // Boost the shape, then scale back by a uniform power.
        const double g = next_gamma(shape + 1.0);
        double u;
        do {
            u = next_uniform();
        } while (u <= 0.0);
        return g * std::pow(u, 1.0 / shape);
    }
    // Marsaglia-Tsang squeeze.
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x;
        double v;
        do {
            x = next_normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = next_uniform();
        const double x2 = x * x;
        if (u < 1.0 - 0.0331 * x2 * x2)
            return d * v;
        if (u > 0.0 && std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v)))
            return d * v;
    }
}

double sample_mg_envelope(const MixtureGamma& mg, SampleRng& rng) {
    if (mg.terms.empty())
        throw std::invalid_argument("sample_mg_envelope: model has no terms");
    // Component probabilities a_n c^(-b_n) Gamma(b_n); the squared envelope
    // within component n is gamma(b_n) scaled by 1/c.
    double u = rng.next_uniform();
    std::size_t pick = mg.terms.size() - 1;
    for (std::size_t i = 0; i + 1 < mg.terms.size(); ++i) {
        const MgTerm& t = mg.terms[i];
        const double w =
            t.a * std::exp(-t.b * std::log(mg.c) + std::lgamma(t.b));
        if (u < w) {
            pick = i;
            break;
        }
        u -= w;
    }
    const double g = rng.next_gamma(mg.terms[pick].b);
    return std::sqrt(g / mg.c);
}

double sample_cascade(const MixtureGamma& mg_a, const MixtureGamma& mg_r,
                      std::size_t m_elements, SampleRng& rng) {
    if (m_elements == 0)
        throw std::invalid_argument("sample_cascade: m_elements must be >= 1");
    double acc = 0.0;
    for (std::size_t i = 0; i < m_elements; ++i)
        acc += sample_mg_envelope(mg_a, rng) * sample_mg_envelope(mg_r, rng);
    return acc;
}

unsigned resolve_worker_count(unsigned requested) {
    if (requested > 0)
        return requested;
    if (const char* env = std::getenv("RISSEC_WORKERS")) {
        const long v = std::atol(env);
        if (v >= 1 && v <= 4096)
            return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

namespace {

struct BlockSums {
    std::uint64_t count = 0;
    std::uint64_t leaks = 0;
    double sum_d = 0.0;   // C_B - C_E
    double sum_d2 = 0.0;
    double sum_s = 0.0;   // max(C_B - C_E, 0)
    double sum_s2 = 0.0;
    double sum_cb = 0.0;
    double sum_cb2 = 0.0;
    double sum_ce = 0.0;
    double sum_ce2 = 0.0;
};

McEstimate mean_estimate(double sum, double sum2, std::uint64_t n,
                         std::uint64_t seed) {
    McEstimate e;
    e.value = sum / static_cast<double>(n);
    const double var =
        (sum2 - sum * sum / static_cast<double>(n)) / static_cast<double>(n - 1);
    e.std_error = std::sqrt(std::max(var, 0.0) / static_cast<double>(n));
    e.n_samples = n;
    e.seed = seed;
    return e;
}

} // namespace

McMetrics estimate_metrics(const MixtureGamma& mg_a, const MixtureGamma& mg_r,
                           std::size_t m_elements, const MixtureGamma& mg_e,
                           const LinkBudget& budget, std::uint64_t n_samples,
                           std::uint64_t seed, unsigned workers) {
    if (n_samples < 10000)
        throw std::invalid_argument("estimate_metrics: need at least 10000 samples");
    if (m_elements == 0)
        throw std::invalid_argument("estimate_metrics: m_elements must be >= 1");
    if (!(budget.rho_b > 0.0) || !(budget.rho_e > 0.0))
        throw std::invalid_argument("estimate_metrics: rho_b and rho_e must be > 0");

    constexpr std::uint64_t block_size = 8192;
    const std::uint64_t n_blocks = (n_samples + block_size - 1) / block_size;
    std::vector<BlockSums> blocks(n_blocks);

    const unsigned n_workers =
        static_cast<unsigned>(std::min<std::uint64_t>(resolve_worker_count(workers),
                                                      n_blocks));
    std::atomic<std::uint64_t> next_block{0};

    auto run_block = [&](std::uint64_t bi) {
        BlockSums bs;
        const std::uint64_t lo = bi * block_size;
        const std::uint64_t hi = std::min(lo + block_size, n_samples);
        for (std::uint64_t i = lo; i < hi; ++i) {
            SampleRng rng(seed, i);
            const double ar = sample_cascade(mg_a, mg_r, m_elements, rng);
            const double xe = sample_mg_envelope(mg_e, rng);
            const double gb = budget.rho_b * ar * ar;
            const double ge = budget.rho_e * xe * xe;
            const double cb = std::log2(1.0 + gb);
            const double ce = std::log2(1.0 + ge);
            const double d = cb - ce;
            const double s = d > 0.0 ? d : 0.0;
            bs.count += 1;
            bs.leaks += ge >= gb ? 1 : 0;
            bs.sum_d += d;
            bs.sum_d2 += d * d;
            bs.sum_s += s;
            bs.sum_s2 += s * s;
            bs.sum_cb += cb;
            bs.sum_cb2 += cb * cb;
            bs.sum_ce += ce;
            bs.sum_ce2 += ce * ce;
        }
        blocks[bi] = bs;
    };

    if (n_workers <= 1) {
        for (std::uint64_t bi = 0; bi < n_blocks; ++bi)
            run_block(bi);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_workers);
        for (unsigned w = 0; w < n_workers; ++w)
            pool.emplace_back([&] {
                for (;;) {
                    const std::uint64_t bi =
                        next_block.fetch_add(1, std::memory_order_relaxed);
                    if (bi >= n_blocks)
                        return;
                    run_block(bi);
                }
            });
        for (std::thread& t : pool)
            t.join();
    }

    // Reduce in block order: the float sums are then independent of how
    // blocks were assigned to threads.
    BlockSums total;
    for (const BlockSums& bs : blocks) {
        total.count += bs.count;
        total.leaks += bs.leaks;
        total.sum_d += bs.sum_d;
        total.sum_d2 += bs.sum_d2;
        total.sum_s += bs.sum_s;
        total.sum_s2 += bs.sum_s2;
        total.sum_cb += bs.sum_cb;
        total.sum_cb2 += bs.sum_cb2;
        total.sum_ce += bs.sum_ce;
        total.sum_ce2 += bs.sum_ce2;
    }

    McMetrics out;
    const double n = static_cast<double>(total.count);
    out.leak_events = total.leaks;
    out.p_leak.value = static_cast<double>(total.leaks) / n;
    out.p_leak.std_error =
        std::sqrt(std::max(out.p_leak.value * (1.0 - out.p_leak.value), 0.0) / n);
    out.p_leak.n_samples = total.count;
    out.p_leak.seed = seed;
    out.c_s_full = mean_estimate(total.sum_s, total.sum_s2, total.count, seed);
    out.r_s_partial = mean_estimate(total.sum_d, total.sum_d2, total.count, seed);
    out.capacity_b = mean_estimate(total.sum_cb, total.sum_cb2, total.count, seed);
    out.capacity_e = mean_estimate(total.sum_ce, total.sum_ce2, total.count, seed);
    return out;
}

} // namespace rissec

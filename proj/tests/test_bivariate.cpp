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

#include <cmath>
#include <stdexcept>

#include "doctest.h"

#include "rissec/errors.hpp"
#include "rissec/specfun.hpp"
#include "support/oracles.hpp"

using namespace rissec;

namespace {

// The two kernel shapes the full-CSI secrecy rate integrates, at small
// parameters (k = 1.9, m = 1.1, b_n = 1.3).
BivariateGSpec t1_spec() {
    const double k = 1.9, m = 1.1, b = 1.3;
    const double h = (k + m) / 2.0, d = (k - m) / 2.0;
    BivariateGSpec s;
    s.outer = {1, 1, {1.0 - b - h, 1.0 - h}, {-h}};
    s.block_x = {1, 2, {1.0, 1.0}, {1.0, 0.0}};
    s.block_y = {2, 0, {}, {d, -d}};
    return s;
}

BivariateGSpec t2_spec() {
    const double k = 1.9, m = 1.1, b = 1.3;
    BivariateGSpec s;
    s.outer = {0, 1, {1.0 - b}, {}};
    s.block_x = {1, 2, {1.0, 1.0}, {1.0, 0.0}};
    s.block_y = {2, 1, {1.0}, {k, m, 0.0}};
    return s;
}

} // namespace

TEST_CASE("bivariate G reproduces frozen reference evaluations") {
    CHECK(bivariate_meijer_g(t1_spec(), 0.4, 0.7) ==
          doctest::Approx(oracle::biv_t1_small).epsilon(1e-12));
    CHECK(bivariate_meijer_g(t2_spec(), 0.4, 0.7) ==
          doctest::Approx(oracle::biv_t2_small).epsilon(1e-12));
}

TEST_CASE("bivariate G is symmetric under swapping the variable blocks") {
    // Phi(s + t) is symmetric in (s, t), so exchanging the two variable
    // blocks along with the arguments evaluates the same double integral on
    // a different pair of contours.
    for (const BivariateGSpec& spec : {t1_spec(), t2_spec()}) {
        BivariateGSpec swapped = spec;
        std::swap(swapped.block_x, swapped.block_y);
        CHECK(bivariate_meijer_g(swapped, 0.7, 0.4) ==
              doctest::Approx(bivariate_meijer_g(spec, 0.4, 0.7))
                  .epsilon(1e-5));
    }
}

TEST_CASE("bivariate log form matches the plain form") {
    const double plain = bivariate_meijer_g(t2_spec(), 0.9, 0.2);
    const LogScaled logged = bivariate_meijer_g_log(t2_spec(), 0.9, 0.2);
    CHECK(logged.sign == 1);
    CHECK(std::exp(logged.log_abs) == doctest::Approx(plain).epsilon(1e-14));
}

TEST_CASE("bivariate G argument and spec validation") {
    CHECK_THROWS_AS((void)bivariate_meijer_g(t1_spec(), 0.0, 0.5),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)bivariate_meijer_g(t1_spec(), 0.5, -1.0),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)bivariate_meijer_g(t1_spec(), 1e9, 0.5),
                    std::invalid_argument);

    // Every block must carry parameters; a bare kernel is malformed.
    BivariateGSpec empty_outer = t1_spec();
    empty_outer.outer = {0, 0, {}, {}};
    CHECK_THROWS_AS((void)bivariate_meijer_g(empty_outer, 0.4, 0.7),
                    std::invalid_argument);

    // Colliding pole families inside one block are rejected up front.
    BivariateGSpec colliding = t1_spec();
    colliding.block_x = {1, 1, {2.0}, {1.0}};
    CHECK_THROWS_AS((void)bivariate_meijer_g(colliding, 0.4, 0.7),
                    std::invalid_argument);
}

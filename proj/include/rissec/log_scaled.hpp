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

#include <cmath>
#include <limits>

namespace rissec {

// Signed value carried in log space: value = sign * exp(log_abs).
// sign == 0 encodes exact zero. Keeps gamma-heavy expressions finite where
// the plain double value would overflow (e.g. Gamma(200)-scale factors).
struct LogScaled {
    double log_abs = -std::numeric_limits<double>::infinity();
    int sign = 0;

    static LogScaled zero() { return {}; }

    static LogScaled from_value(double v) {
        if (v == 0.0 || std::isnan(v))
            return {};
        return {std::log(std::fabs(v)), v > 0.0 ? 1 : -1};
    }

    static LogScaled from_log(double log_abs_in, int sign_in = 1) {
        if (sign_in == 0 || log_abs_in == -std::numeric_limits<double>::infinity())
            return {};
        return {log_abs_in, sign_in > 0 ? 1 : -1};
    }

    bool is_zero() const { return sign == 0; }

    // May round to 0 or +-inf outside double range.
    double value() const {
        if (sign == 0)
            return 0.0;
        return static_cast<double>(sign) * std::exp(log_abs);
    }

    LogScaled operator-() const { return {log_abs, -sign}; }

    LogScaled operator*(const LogScaled& o) const {
        if (sign == 0 || o.sign == 0)
            return {};
        return {log_abs + o.log_abs, sign * o.sign};
    }

    LogScaled operator/(const LogScaled& o) const {
        if (sign == 0)
            return {};
        return {log_abs - o.log_abs, sign * o.sign};
    }

    // Multiply by exp(log_factor) without leaving log space.
    LogScaled scaled(double log_factor) const {
        if (sign == 0)
            return {};
        return {log_abs + log_factor, sign};
    }

    LogScaled& operator+=(const LogScaled& o) {
        if (o.sign == 0)
            return *this;
        if (sign == 0) {
            *this = o;
            return *this;
        }
        double hi = log_abs, lo = o.log_abs;
        int hi_sign = sign, lo_sign = o.sign;
        if (lo > hi) {
            std::swap(hi, lo);
            std::swap(hi_sign, lo_sign);
        }
        const double r = std::exp(lo - hi); // in [0, 1]
        if (hi_sign == lo_sign) {
            log_abs = hi + std::log1p(r);
            sign = hi_sign;
        } else {
            const double d = 1.0 - r;
            if (d <= 0.0) {
                *this = {};
            } else {
                log_abs = hi + std::log(d);
                sign = hi_sign;
            }
        }
        return *this;
    }

    LogScaled operator+(const LogScaled& o) const {
        LogScaled r = *this;
        r += o;
        return r;
    }

    LogScaled operator-(const LogScaled& o) const { return *this + (-o); }
};

} // namespace rissec

// SPDX-License-Identifier: Apache-2.0
//
// csac - cyclic shift spectral-amplitude-coding OCDMA toolkit
// Copyright (C) 2026 The csac Authors
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

#include "csac/erfc.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace csac {

namespace {

constexpr double kSeriesCutoff = 2.0;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// erf(x) = 2/sqrt(pi) * exp(-x^2) * sum_n (2x^2)^n x / (1*3*...*(2n+1))
double erf_series(double x) {
    const double x2 = x * x;
    double term = x;
    double sum = x;
    for (int n = 1; n < 200; ++n) {
        term *= 2.0 * x2 / (2.0 * n + 1.0);
        sum += term;
        if (term < sum * kEps * 0.5) break;
    }
    return 2.0 * std::numbers::inv_sqrtpi * std::exp(-x2) * sum;
}

// 1 / (x + (1/2) / (x + 1 / (x + (3/2) / (x + ...)))), so that
// erfc(x) = exp(-x^2) / sqrt(pi) * cf(x) for x > 0.
double laplace_cf(double x) {
    constexpr double tiny = 1e-300;
    double f = x;
    double c = x;
    double d = 0.0;
    for (int n = 1; n < 5000; ++n) {
        const double a = 0.5 * n;
        d = x + a * d;
        if (std::fabs(d) < tiny) d = tiny;
        c = x + a / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = c * d;
        f *= delta;
        if (std::fabs(delta - 1.0) < kEps) break;
    }
    return 1.0 / f;
}

}  // namespace

double erfc(double x) {
    if (std::isnan(x)) return x;
    if (x < 0.0) return 2.0 - erfc(-x);
    if (x < kSeriesCutoff) return 1.0 - erf_series(x);
    if (x > 27.3) return 0.0;  // below the smallest subnormal
    return std::exp(-x * x) * std::numbers::inv_sqrtpi * laplace_cf(x);
}

double log_erfc(double x) {
    if (std::isnan(x)) return x;
    if (x < kSeriesCutoff) return std::log(erfc(x));
    return -x * x + std::log(std::numbers::inv_sqrtpi * laplace_cf(x));
}

}  // namespace csac

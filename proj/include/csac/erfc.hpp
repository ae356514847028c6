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

#ifndef CSAC_ERFC_HPP
#define CSAC_ERFC_HPP

namespace csac {

/// Complementary error function.
///
/// |x| < 2 uses the positive-term Maclaurin series of erf (no cancellation
/// inside the sum), larger |x| the Laplace continued fraction evaluated with
/// the modified Lentz method. Relative error stays below 1e-13 on [0, 6];
/// negative arguments go through erfc(-x) = 2 - erfc(x).
double erfc(double x);

/// Natural log of erfc(x). Finite for every finite x: in the tail it is
/// assembled as -x^2 + log(continued fraction) so it does not underflow.
double log_erfc(double x);

}  // namespace csac

#endif  // CSAC_ERFC_HPP

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

#ifndef CSAC_FORMATS_HPP
#define CSAC_FORMATS_HPP

#include <span>
#include <string>

#include "csac/codebook.hpp"
#include "csac/linkmodel.hpp"
#include "csac/spectrum.hpp"

namespace csac {

/// 17 significant digits, scientific. Round-trips every double.
std::string format_sci(double v);

/// Leading `# key = value` lines carry the resolved parameter set, then the
/// column header, then one row per sweep point.
std::string sweep_to_csv(const SweepResult& sweep, const PhysicalParams& params);
/// {"kind":..., "params":{...}, "rows":[{...}, ...]}
std::string sweep_to_json(const SweepResult& sweep, const PhysicalParams& params);

std::string performance_to_json(const PerformancePoint& pt, const OperatingPoint& op, const PhysicalParams& params);

std::string ber_estimate_to_json(const BerEstimate& est, const MonteCarloConfig& cfg, const OperatingPoint& op,
                                 const PhysicalParams& params, const std::string& family);

/// frequency_hz,psd_w_per_hz with one row per sample (left edge).
std::string psd_to_csv(const SpectrumGrid& grid);

std::string compare_to_csv(std::span<const CompareRow> rows);
std::string compare_to_json(std::span<const CompareRow> rows);

}  // namespace csac

#endif  // CSAC_FORMATS_HPP

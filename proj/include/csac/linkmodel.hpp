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

#ifndef CSAC_LINKMODEL_HPP
#define CSAC_LINKMODEL_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "csac/error.hpp"

namespace csac {

/// Source, receiver and physical constants of the link. Defaults are the
/// reference 1550 nm broadband-source setup.
struct PhysicalParams {
    double linewidth_hz = 3.75e12;
    double wavelength_m = 1550e-9;
    double noise_bandwidth_hz = 311e6;
    double receiver_temp_k = 300.0;
    double quantum_efficiency = 0.6;
    double electron_charge_c = 1.602e-19;
    double planck_js = 6.626e-34;
    double boltzmann_jk = 1.381e-23;
    double load_resistance_ohm = 1030.0;
    double light_speed_ms = 2.998e8;
    /// Optional dark current; adds 2*e*B*I_dark to the noise when nonzero.
    double dark_current_a = 0.0;

    friend bool operator==(const PhysicalParams&, const PhysicalParams&) = default;
};

/// Throws DomainError unless every field is finite and positive
/// (dark current may be zero) and the quantum efficiency is <= 1.
void validate(const PhysicalParams& params);

/// Config-file key names, in declaration order.
std::span<const std::string_view> param_keys();
double get_param(const PhysicalParams& params, std::string_view key);
void set_param(PhysicalParams& params, std::string_view key, double value);

/// Line based `key = value`; '#' starts a comment. Unknown or repeated keys
/// and unparseable values throw ParseError. Missing keys keep defaults.
PhysicalParams parse_params(std::string_view text);
std::string params_to_text(const PhysicalParams& params);

struct OperatingPoint {
    std::size_t users = 1;
    std::size_t weight = 1;
    /// Power per user at the receiver, or launch power when a fiber length is set.
    double received_power_w = 1e-4;
    std::optional<double> fiber_length_km;
    double attenuation_db_per_km = 0.25;
};

void validate(const OperatingPoint& op);

/// Power reaching the photodiode after `attenuation_db_per_km * fiber_length_km`.
double effective_power_w(const OperatingPoint& op);

struct PerformancePoint {
    double photocurrent_a = 0.0;
    double noise_variance_a2 = 0.0;
    double snr = 0.0;
    double ber = 0.5;
    /// Stays finite after `ber` underflows to 0.
    double log10_ber = -0.30102999566398120;
};

double dbm_to_watts(double p_dbm);
double watts_to_dbm(double p_w);
/// Accepts "<number>dBm" or "<number>W" (suffix case-insensitive, optional
/// whitespace before it). Returns watts.
double parse_power(std::string_view text);

/// R = eta * e * lambda / (h * c)
double responsivity(const PhysicalParams& params);

/// Signal current of a user sending '1': R * P_sr * w / L with L = K * w.
double photocurrent(const OperatingPoint& op, const PhysicalParams& params);
double thermal_noise_variance(const PhysicalParams& params);
/// Receiver noise with the shot term e*B*I used when every user sends '1'
/// with probability 1/2, plus thermal and optional dark-current noise.
double noise_variance(const OperatingPoint& op, const PhysicalParams& params);
/// Same receiver with the full 2*e*B*I shot term (diagnostic).
double noise_variance_full_shot(const OperatingPoint& op, const PhysicalParams& params);
double snr(const OperatingPoint& op, const PhysicalParams& params);

/// 0.5 * erfc(sqrt(snr / 8))
double ber_from_snr(double snr);
double log10_ber_from_snr(double snr);

PerformancePoint evaluate(const OperatingPoint& op, const PhysicalParams& params);

// ---- sweeps -----------------------------------------------------------------

enum class SweepKind { Users, Power, Distance };

struct SweepRow {
    std::size_t users = 0;
    std::size_t weight = 0;
    std::size_t length = 0;
    double distance_km = 0.0;
    double power_dbm = 0.0;
    double power_w = 0.0;
    PerformancePoint perf;
};

struct SweepResult {
    SweepKind kind = SweepKind::Users;
    std::vector<SweepRow> rows;

    /// Independent variable of row i (users, received dBm, or km).
    double x(std::size_t i) const;
};

/// Rows in input order. Ranges must be non-empty and strictly ascending.
SweepResult sweep_users(std::span<const std::size_t> users, std::size_t weight, double p_sr_w,
                        const PhysicalParams& params);
SweepResult sweep_power(std::span<const double> p_dbm, std::size_t users, std::size_t weight,
                        const PhysicalParams& params);
SweepResult sweep_distance(std::span<const double> distance_km, double launch_power_dbm, std::size_t users,
                           std::size_t weight, const PhysicalParams& params, double attenuation_db_per_km = 0.25);

/// x where the BER curve first crosses `ber_threshold`, interpolating
/// log10(BER) linearly between the bracketing rows.
std::optional<double> find_crossing(const SweepResult& sweep, double ber_threshold);

/// Inclusive ranges `first, first+step, ... <= last`.
std::vector<std::size_t> count_range(std::size_t first, std::size_t last, std::size_t step = 1);
std::vector<double> real_range(double first, double last, double step);

std::string_view sweep_kind_label(SweepKind kind);

}  // namespace csac

#endif  // CSAC_LINKMODEL_HPP

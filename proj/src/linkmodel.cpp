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

#include "csac/linkmodel.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <utility>

#include "csac/erfc.hpp"

namespace csac {

namespace {

using Field = double PhysicalParams::*;

constexpr std::array<std::pair<std::string_view, Field>, 11> kParamFields = {{
    {"linewidth_hz", &PhysicalParams::linewidth_hz},
    {"wavelength_m", &PhysicalParams::wavelength_m},
    {"noise_bandwidth_hz", &PhysicalParams::noise_bandwidth_hz},
    {"receiver_temp_k", &PhysicalParams::receiver_temp_k},
    {"quantum_efficiency", &PhysicalParams::quantum_efficiency},
    {"electron_charge_c", &PhysicalParams::electron_charge_c},
    {"planck_js", &PhysicalParams::planck_js},
    {"boltzmann_jk", &PhysicalParams::boltzmann_jk},
    {"load_resistance_ohm", &PhysicalParams::load_resistance_ohm},
    {"light_speed_ms", &PhysicalParams::light_speed_ms},
    {"dark_current_a", &PhysicalParams::dark_current_a},
}};

constexpr std::array<std::string_view, kParamFields.size()> kParamKeys = [] {
    std::array<std::string_view, kParamFields.size()> keys{};
    for (std::size_t i = 0; i < kParamFields.size(); ++i) keys[i] = kParamFields[i].first;
    return keys;
}();

Field field_for(std::string_view key) {
    for (const auto& [name, field] : kParamFields)
        if (name == key) return field;
    throw DomainError("unknown parameter key '" + std::string(key) + "'");
}

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

bool parse_double(std::string_view s, double& out) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size() && std::isfinite(out);
}

std::string format_double(double v) {
    std::array<char, 64> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), ptr);
}

bool iequals_suffix(std::string_view s, std::string_view suffix) {
    if (s.size() < suffix.size()) return false;
    s = s.substr(s.size() - suffix.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        if (std::tolower(static_cast<unsigned char>(s[i])) != std::tolower(static_cast<unsigned char>(suffix[i])))
            return false;
    return true;
}

template <typename T>
void require_ascending(std::span<const T> values, const char* what) {
    if (values.empty()) throw DomainError(std::string(what) + " range is empty");
    for (std::size_t i = 1; i < values.size(); ++i)
        if (!(values[i - 1] < values[i])) throw DomainError(std::string(what) + " range must be strictly ascending");
}

SweepRow make_row(const OperatingPoint& op, const PhysicalParams& params) {
    SweepRow row;
    row.users = op.users;
    row.weight = op.weight;
    row.length = op.users * op.weight;
    row.distance_km = op.fiber_length_km.value_or(0.0);
    row.power_w = effective_power_w(op);
    row.power_dbm = watts_to_dbm(row.power_w);
    row.perf = evaluate(op, params);
    return row;
}

}  // namespace

// ---- parameters -------------------------------------------------------------

void validate(const PhysicalParams& params) {
    for (const auto& [name, field] : kParamFields) {
        const double v = params.*field;
        if (!std::isfinite(v)) throw DomainError("parameter " + std::string(name) + " must be finite");
        if (field == &PhysicalParams::dark_current_a) {
            if (v < 0.0) throw DomainError("parameter dark_current_a must be >= 0");
        } else if (v <= 0.0) {
            throw DomainError("parameter " + std::string(name) + " must be > 0");
        }
    }
    if (params.quantum_efficiency > 1.0) throw DomainError("parameter quantum_efficiency must be <= 1");
}

std::span<const std::string_view> param_keys() { return kParamKeys; }

double get_param(const PhysicalParams& params, std::string_view key) { return params.*field_for(key); }

void set_param(PhysicalParams& params, std::string_view key, double value) { params.*field_for(key) = value; }

PhysicalParams parse_params(std::string_view text) {
    PhysicalParams params;
    std::array<bool, kParamFields.size()> seen{};
    std::size_t lineno = 0;
    while (!text.empty()) {
        ++lineno;
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ParseError(lineno, "expected 'key = value'");
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));

        const auto it = std::find(kParamKeys.begin(), kParamKeys.end(), key);
        if (it == kParamKeys.end()) throw ParseError(lineno, "unknown parameter key '" + std::string(key) + "'");
        const auto idx = static_cast<std::size_t>(it - kParamKeys.begin());
        if (seen[idx]) throw ParseError(lineno, "duplicate parameter key '" + std::string(key) + "'");
        seen[idx] = true;

        double v = 0.0;
        if (!parse_double(value, v))
            throw ParseError(lineno, "value for '" + std::string(key) + "' is not a finite number");
        params.*kParamFields[idx].second = v;
    }
    try {
        validate(params);
    } catch (const DomainError& e) {
        throw ParseError(0, e.what());
    }
    return params;
}

std::string params_to_text(const PhysicalParams& params) {
    std::string out;
    for (const auto& [name, field] : kParamFields) {
        out += name;
        out += " = ";
        out += format_double(params.*field);
        out += '\n';
    }
    return out;
}

void validate(const OperatingPoint& op) {
    if (op.users == 0) throw DomainError("operating point needs K >= 1");
    if (op.weight == 0) throw DomainError("operating point needs w >= 1");
    if (!(op.received_power_w > 0.0) || !std::isfinite(op.received_power_w))
        throw DomainError("received power must be finite and > 0");
    if (op.fiber_length_km && (!(*op.fiber_length_km >= 0.0) || !std::isfinite(*op.fiber_length_km)))
        throw DomainError("fiber length must be finite and >= 0");
    if (!(op.attenuation_db_per_km >= 0.0) || !std::isfinite(op.attenuation_db_per_km))
        throw DomainError("attenuation must be finite and >= 0");
}

double effective_power_w(const OperatingPoint& op) {
    if (!op.fiber_length_km) return op.received_power_w;
    const double loss_db = op.attenuation_db_per_km * *op.fiber_length_km;
    return op.received_power_w * std::pow(10.0, -loss_db / 10.0);
}

// ---- power units --------------------------------------------------------

double dbm_to_watts(double p_dbm) { return 1e-3 * std::pow(10.0, p_dbm / 10.0); }

double watts_to_dbm(double p_w) { return 10.0 * std::log10(p_w / 1e-3); }

double parse_power(std::string_view text) {
    const auto t = trim(text);
    double v = 0.0;
    if (iequals_suffix(t, "dbm")) {
        if (!parse_double(trim(t.substr(0, t.size() - 3)), v))
            throw DomainError("cannot parse power '" + std::string(text) + "'");
        return dbm_to_watts(v);
    }
    if (iequals_suffix(t, "w")) {
        if (!parse_double(trim(t.substr(0, t.size() - 1)), v))
            throw DomainError("cannot parse power '" + std::string(text) + "'");
        if (v <= 0.0) throw DomainError("power in watts must be > 0");
        return v;
    }
    throw DomainError("power '" + std::string(text) + "' needs a unit suffix (dBm or W)");
}

// ---- receiver model -----------------------------------------------------

double responsivity(const PhysicalParams& p) {
    return p.quantum_efficiency * p.electron_charge_c * p.wavelength_m / (p.planck_js * p.light_speed_ms);
}

double photocurrent(const OperatingPoint& op, const PhysicalParams& params) {
    const double length = static_cast<double>(op.users) * static_cast<double>(op.weight);
    return responsivity(params) * effective_power_w(op) * static_cast<double>(op.weight) / length;
}

double thermal_noise_variance(const PhysicalParams& p) {
    return 4.0 * p.boltzmann_jk * p.receiver_temp_k * p.noise_bandwidth_hz / p.load_resistance_ohm;
}

namespace {

double dark_noise_variance(const PhysicalParams& p) {
    return 2.0 * p.electron_charge_c * p.noise_bandwidth_hz * p.dark_current_a;
}

}  // namespace

double noise_variance(const OperatingPoint& op, const PhysicalParams& params) {
    const double shot = params.electron_charge_c * params.noise_bandwidth_hz * photocurrent(op, params);
    return shot + thermal_noise_variance(params) + dark_noise_variance(params);
}

double noise_variance_full_shot(const OperatingPoint& op, const PhysicalParams& params) {
    const double shot = 2.0 * params.electron_charge_c * params.noise_bandwidth_hz * photocurrent(op, params);
    return shot + thermal_noise_variance(params) + dark_noise_variance(params);
}

double snr(const OperatingPoint& op, const PhysicalParams& params) {
    const double i = photocurrent(op, params);
    return i * i / noise_variance(op, params);
}

double ber_from_snr(double s) {
    if (!(s >= 0.0)) throw DomainError("SNR must be >= 0");
    return 0.5 * erfc(std::sqrt(s / 8.0));
}

double log10_ber_from_snr(double s) {
    if (!(s >= 0.0)) throw DomainError("SNR must be >= 0");
    return log_erfc(std::sqrt(s / 8.0)) / std::numbers::ln10 - std::numbers::log10e * std::numbers::ln2;
}

PerformancePoint evaluate(const OperatingPoint& op, const PhysicalParams& params) {
    PerformancePoint pt;
    pt.photocurrent_a = photocurrent(op, params);
    pt.noise_variance_a2 = noise_variance(op, params);
    pt.snr = pt.photocurrent_a * pt.photocurrent_a / pt.noise_variance_a2;
    pt.ber = ber_from_snr(pt.snr);
    pt.log10_ber = log10_ber_from_snr(pt.snr);
    return pt;
}

// ---- sweeps -----------------------------------------------------------------

double SweepResult::x(std::size_t i) const {
    const auto& r = rows.at(i);
    switch (kind) {
        case SweepKind::Users: return static_cast<double>(r.users);
        case SweepKind::Power: return r.power_dbm;
        case SweepKind::Distance: return r.distance_km;
    }
    return 0.0;
}

std::string_view sweep_kind_label(SweepKind kind) {
    switch (kind) {
        case SweepKind::Users: return "users";
        case SweepKind::Power: return "power";
        case SweepKind::Distance: return "distance";
    }
    return "?";
}

SweepResult sweep_users(std::span<const std::size_t> users, std::size_t weight, double p_sr_w,
                        const PhysicalParams& params) {
    validate(params);
    require_ascending(users, "users");
    SweepResult out{SweepKind::Users, {}};
    out.rows.reserve(users.size());
    for (const std::size_t k : users) {
        OperatingPoint op{k, weight, p_sr_w, std::nullopt, 0.25};
        validate(op);
        out.rows.push_back(make_row(op, params));
    }
    return out;
}

SweepResult sweep_power(std::span<const double> p_dbm, std::size_t users, std::size_t weight,
                        const PhysicalParams& params) {
    validate(params);
    require_ascending(p_dbm, "power");
    SweepResult out{SweepKind::Power, {}};
    out.rows.reserve(p_dbm.size());
    for (const double p : p_dbm) {
        OperatingPoint op{users, weight, dbm_to_watts(p), std::nullopt, 0.25};
        validate(op);
        auto row = make_row(op, params);
        row.power_dbm = p;  // keep the requested grid value exactly
        out.rows.push_back(row);
    }
    return out;
}

SweepResult sweep_distance(std::span<const double> distance_km, double launch_power_dbm, std::size_t users,
                           std::size_t weight, const PhysicalParams& params, double attenuation_db_per_km) {
    validate(params);
    require_ascending(distance_km, "distance");
    SweepResult out{SweepKind::Distance, {}};
    out.rows.reserve(distance_km.size());
    for (const double d : distance_km) {
        OperatingPoint op{users, weight, dbm_to_watts(launch_power_dbm), d, attenuation_db_per_km};
        validate(op);
        auto row = make_row(op, params);
        row.power_dbm = launch_power_dbm - attenuation_db_per_km * d;
        out.rows.push_back(row);
    }
    return out;
}

std::optional<double> find_crossing(const SweepResult& sweep, double ber_threshold) {
    if (!(ber_threshold > 0.0 && ber_threshold < 0.5)) throw DomainError("BER threshold must lie in (0, 0.5)");
    const double t = std::log10(ber_threshold);
    const auto& rows = sweep.rows;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const double yi = rows[i].perf.log10_ber;
        if (yi == t) return sweep.x(i);
        if (i + 1 == rows.size()) break;
        const double yj = rows[i + 1].perf.log10_ber;
        if ((yi - t) * (yj - t) < 0.0) {
            const double xi = sweep.x(i);
            const double xj = sweep.x(i + 1);
            return xi + (t - yi) * (xj - xi) / (yj - yi);
        }
    }
    return std::nullopt;
}

std::vector<std::size_t> count_range(std::size_t first, std::size_t last, std::size_t step) {
    if (step == 0) throw DomainError("range step must be > 0");
    if (first > last) throw DomainError("range start exceeds end");
    std::vector<std::size_t> out;
    for (std::size_t v = first; v <= last; v += step) out.push_back(v);
    return out;
}

std::vector<double> real_range(double first, double last, double step) {
    if (!(step > 0.0) || !std::isfinite(step)) throw DomainError("range step must be > 0");
    if (!(first <= last)) throw DomainError("range start exceeds end");
    const auto n = static_cast<std::size_t>(std::floor((last - first) / step + 1e-9)) + 1;
    std::vector<double> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(first + static_cast<double>(i) * step);
    return out;
}

}  // namespace csac

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

#include "csac/formats.hpp"

#include <array>
#include <charconv>

#include "json.hpp"

namespace csac {

namespace {

using nlohmann::ordered_json;

ordered_json params_json(const PhysicalParams& params) {
    ordered_json j = ordered_json::object();
    for (auto key : param_keys()) j[std::string(key)] = get_param(params, key);
    return j;
}

ordered_json op_json(const OperatingPoint& op) {
    ordered_json j;
    j["users"] = op.users;
    j["weight"] = op.weight;
    j["received_power_w"] = op.received_power_w;
    if (op.fiber_length_km) j["fiber_length_km"] = *op.fiber_length_km;
    else j["fiber_length_km"] = nullptr;
    j["attenuation_db_per_km"] = op.attenuation_db_per_km;
    return j;
}

ordered_json perf_json(const PerformancePoint& pt) {
    ordered_json j;
    j["photocurrent_a"] = pt.photocurrent_a;
    j["noise_variance_a2"] = pt.noise_variance_a2;
    j["snr"] = pt.snr;
    j["ber"] = pt.ber;
    j["log10_ber"] = pt.log10_ber;
    return j;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

std::string_view interferer_label(InterfererBits b) {
    switch (b) {
        case InterfererBits::Random: return "random";
        case InterfererBits::AllOnes: return "all-ones";
        case InterfererBits::AllZeros: return "all-zeros";
    }
    return "?";
}

}  // namespace

std::string format_sci(double v) {
    std::array<char, 64> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::scientific, 16);
    return std::string(buf.data(), ptr);
}

std::string sweep_to_csv(const SweepResult& sweep, const PhysicalParams& params) {
    std::string out = "# sweep = " + std::string(sweep_kind_label(sweep.kind)) + '\n';
    for (auto key : param_keys()) out += "# " + std::string(key) + " = " + format_sci(get_param(params, key)) + '\n';
    out += "users,weight,length,distance_km,power_dbm,power_w,photocurrent_a,noise_variance_a2,snr,ber,log10_ber\n";
    for (const auto& r : sweep.rows) {
        out += std::to_string(r.users) + ',' + std::to_string(r.weight) + ',' + std::to_string(r.length) + ',' +
               format_sci(r.distance_km) + ',' + format_sci(r.power_dbm) + ',' + format_sci(r.power_w) + ',' +
               format_sci(r.perf.photocurrent_a) + ',' + format_sci(r.perf.noise_variance_a2) + ',' +
               format_sci(r.perf.snr) + ',' + format_sci(r.perf.ber) + ',' + format_sci(r.perf.log10_ber) + '\n';
    }
    return out;
}

std::string sweep_to_json(const SweepResult& sweep, const PhysicalParams& params) {
    ordered_json j;
    j["kind"] = sweep_kind_label(sweep.kind);
    j["params"] = params_json(params);
    ordered_json rows = ordered_json::array();
    for (const auto& r : sweep.rows) {
        ordered_json row;
        row["users"] = r.users;
        row["weight"] = r.weight;
        row["length"] = r.length;
        row["distance_km"] = r.distance_km;
        row["power_dbm"] = r.power_dbm;
        row["power_w"] = r.power_w;
        row.update(perf_json(r.perf));
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j.dump(2) + '\n';
}

std::string performance_to_json(const PerformancePoint& pt, const OperatingPoint& op, const PhysicalParams& params) {
    ordered_json j = perf_json(pt);
    j["operating_point"] = op_json(op);
    j["effective_power_w"] = effective_power_w(op);
    j["responsivity_a_per_w"] = responsivity(params);
    j["params"] = params_json(params);
    return j.dump(2) + '\n';
}

std::string ber_estimate_to_json(const BerEstimate& est, const MonteCarloConfig& cfg, const OperatingPoint& op,
                                 const PhysicalParams& params, const std::string& family) {
    ordered_json j;
    j["errors"] = est.errors;
    j["bits"] = est.bits;
    j["ber"] = est.ber_point;
    j["ci95"] = {est.ci95_low, est.ci95_high};
    j["seed"] = cfg.rng_seed;
    ordered_json config;
    config["family"] = family;
    config["bits_per_user"] = cfg.bits_per_user;
    config["target_user"] = cfg.target_user;
    config["threshold_fraction"] = cfg.threshold_fraction;
    config["interferers"] = interferer_label(cfg.interferers);
    if (cfg.noise_variance_override) config["noise_variance_override"] = *cfg.noise_variance_override;
    config["operating_point"] = op_json(op);
    config["params"] = params_json(params);
    j["config"] = std::move(config);
    j["analytic_ber"] = evaluate(op, params).ber;
    return j.dump(2) + '\n';
}

std::string psd_to_csv(const SpectrumGrid& grid) {
    std::string out = "frequency_hz,psd_w_per_hz\n";
    for (std::size_t s = 0; s < grid.psd.size(); ++s)
        out += format_sci(grid.sample_start_hz(s)) + ',' + format_sci(grid.psd[s]) + '\n';
    return out;
}

std::string compare_to_csv(std::span<const CompareRow> rows) {
    std::string out =
        "family,structural_param,requested_users,users,weight,length,cross_correlation,measured_cross,discrepancy,note\n";
    for (const auto& r : rows) {
        out += csv_field(std::string(family_label(r.family))) + ',';
        if (!r.params) {
            out += ",,,,,,,," + csv_field(r.error) + '\n';
            continue;
        }
        const auto& p = *r.params;
        if (p.structural_value) out += p.structural_name + '=' + std::to_string(*p.structural_value);
        out += ',' + std::to_string(p.requested_users) + ',' + std::to_string(p.users) + ',' + std::to_string(p.weight) +
               ',' + std::to_string(p.length) + ',' + csv_field(p.cross_correlation.to_string()) + ',';
        if (r.measured_cross) out += std::to_string(*r.measured_cross);
        out += ',' + std::string(p.discrepancy ? "1" : "0") + ',' + csv_field(p.note) + '\n';
    }
    return out;
}

std::string compare_to_json(std::span<const CompareRow> rows) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows) {
        ordered_json j;
        j["family"] = family_label(r.family);
        if (!r.params) {
            j["error"] = r.error;
            arr.push_back(std::move(j));
            continue;
        }
        const auto& p = *r.params;
        if (p.structural_value) j[p.structural_name] = *p.structural_value;
        j["requested_users"] = p.requested_users;
        j["users"] = p.users;
        j["weight"] = p.weight;
        j["length"] = p.length;
        j["cross_correlation"] = p.cross_correlation.to_string();
        if (r.measured_cross) j["measured_cross"] = *r.measured_cross;
        else j["measured_cross"] = nullptr;
        j["discrepancy"] = p.discrepancy;
        j["note"] = p.note;
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + '\n';
}

}  // namespace csac

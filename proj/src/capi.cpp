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

#include "csac/csac.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "csac/codebook.hpp"
#include "csac/erfc.hpp"
#include "csac/formats.hpp"
#include "csac/linkmodel.hpp"
#include "csac/spectrum.hpp"

struct csac_code {
    csac::CodeMatrix rep;
};

struct csac_params {
    csac::PhysicalParams rep;
};

struct csac_sweep {
    csac::SweepResult rep;
    csac::PhysicalParams params;
};

namespace {

thread_local std::string g_last_error;

csac_status fail(csac_status status, const char* what) {
    g_last_error = what;
    return status;
}

template <typename F>
csac_status guarded(F&& body) noexcept {
    try {
        body();
        return CSAC_OK;
    } catch (const csac::ParseError& e) {
        return fail(CSAC_ERR_PARSE, e.what());
    } catch (const csac::DomainError& e) {
        return fail(CSAC_ERR_DOMAIN, e.what());
    } catch (const std::bad_alloc&) {
        return fail(CSAC_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(CSAC_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(CSAC_ERR_INTERNAL, "unknown error");
    }
}

template <typename F>
csac_status guarded_nonnull(bool ok, F&& body) noexcept {
    if (!ok) return fail(CSAC_ERR_NULL, "required argument is NULL");
    return guarded(std::forward<F>(body));
}

char* dup_string(const std::string& s) {
    auto* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void copy_fixed(char* dst, std::size_t cap, std::string_view src) {
    const std::size_t n = std::min(cap - 1, src.size());
    std::memcpy(dst, src.data(), n);
    dst[n] = '\0';
}

csac::OperatingPoint to_core(const csac_operating_point& op) {
    csac::OperatingPoint out;
    out.users = op.users;
    out.weight = op.weight;
    out.received_power_w = op.received_power_w;
    if (op.has_fiber_length) out.fiber_length_km = op.fiber_length_km;
    out.attenuation_db_per_km = op.attenuation_db_per_km;
    return out;
}

csac_performance to_c(const csac::PerformancePoint& p) {
    return csac_performance{p.photocurrent_a, p.noise_variance_a2, p.snr, p.ber, p.log10_ber};
}

csac::FamilyExtras to_core(const csac_family_extras* extras) {
    csac::FamilyExtras out;
    if (extras) {
        if (extras->has_dsc_d) out.dsc_d = extras->dsc_d;
        if (extras->has_ms_kb) out.ms_kb = extras->ms_kb;
    }
    return out;
}

csac::MonteCarloConfig to_core(const csac_mc_config& c) {
    csac::MonteCarloConfig out;
    out.bits_per_user = c.bits_per_user;
    out.rng_seed = c.seed;
    out.target_user = c.target_user;
    out.threshold_fraction = c.threshold_fraction;
    switch (c.interferers) {
        case CSAC_INTERFERERS_RANDOM: out.interferers = csac::InterfererBits::Random; break;
        case CSAC_INTERFERERS_ALL_ONES: out.interferers = csac::InterfererBits::AllOnes; break;
        case CSAC_INTERFERERS_ALL_ZEROS: out.interferers = csac::InterfererBits::AllZeros; break;
        default: throw csac::DomainError("unknown interferer mode");
    }
    if (c.has_noise_variance) out.noise_variance_override = c.noise_variance_a2;
    out.threads = c.threads;
    return out;
}

std::span<const std::uint8_t> bit_span(const uint8_t* bits, size_t n) {
    return n == 0 ? std::span<const std::uint8_t>{} : std::span<const std::uint8_t>(bits, n);
}

}  // namespace

extern "C" {

const char* csac_version(void) { return "1.0.0"; }

const char* csac_last_error(void) { return g_last_error.c_str(); }

const char* csac_status_name(csac_status status) {
    switch (status) {
        case CSAC_OK: return "ok";
        case CSAC_ERR_DOMAIN: return "domain error";
        case CSAC_ERR_PARSE: return "parse error";
        case CSAC_ERR_NULL: return "null argument";
        case CSAC_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

void csac_string_free(char* s) { std::free(s); }

// ---- codebook ---------------------------------------------------------------

csac_status csac_code_build_cs(uint32_t users, uint32_t weight, csac_code** out) {
    return guarded_nonnull(out != nullptr, [&] { *out = new csac_code{csac::build_cs(users, weight)}; });
}

csac_status csac_code_build_hadamard(uint32_t order_exponent, csac_code** out) {
    return guarded_nonnull(out != nullptr, [&] { *out = new csac_code{csac::build_hadamard(order_exponent)}; });
}

csac_status csac_code_parse(const char* text, csac_code** out) {
    return guarded_nonnull(text && out, [&] { *out = new csac_code{csac::parse_text(text)}; });
}

void csac_code_free(csac_code* code) { delete code; }

csac_status csac_code_dims(const csac_code* code, uint32_t* users, uint32_t* length, uint32_t* weight) {
    return guarded_nonnull(code != nullptr, [&] {
        if (users) *users = static_cast<uint32_t>(code->rep.rows());
        if (length) *length = static_cast<uint32_t>(code->rep.cols());
        if (weight) *weight = static_cast<uint32_t>(code->rep.weight());
    });
}

csac_status csac_code_family(const csac_code* code, const char** name) {
    return guarded_nonnull(code && name, [&] { *name = code->rep.family_name().c_str(); });
}

csac_status csac_code_bit(const csac_code* code, uint32_t row, uint32_t col, int* bit) {
    return guarded_nonnull(code && bit, [&] { *bit = code->rep.at(row, col); });
}

csac_status csac_code_to_text(const csac_code* code, char** out) {
    return guarded_nonnull(code && out, [&] { *out = dup_string(csac::to_text(code->rep)); });
}

csac_status csac_cross_correlation(const uint8_t* a, const uint8_t* b, size_t length, uint32_t* out) {
    return guarded_nonnull(out && (length == 0 || (a && b)), [&] {
        *out = static_cast<uint32_t>(csac::cross_correlation(bit_span(a, length), bit_span(b, length)));
    });
}

csac_status csac_code_correlation(const csac_code* code, csac_correlation* out) {
    return guarded_nonnull(code && out, [&] {
        const auto r = csac::correlation_check(code->rep);
        const auto [lo, hi] = std::minmax_element(r.autocorrelation.begin(), r.autocorrelation.end());
        *out = csac_correlation{static_cast<uint32_t>(*lo), static_cast<uint32_t>(*hi), r.max_cross.has_value(),
                                static_cast<uint32_t>(r.min_cross.value_or(0)),
                                static_cast<uint32_t>(r.max_cross.value_or(0))};
    });
}

csac_status csac_code_autocorrelation(const csac_code* code, uint32_t* values, size_t n) {
    return guarded_nonnull(code && (n == 0 || values), [&] {
        const auto& m = code->rep;
        for (size_t k = 0; k < std::min(n, m.rows()); ++k)
            values[k] = static_cast<uint32_t>(csac::cross_correlation(m.row(k), m.row(k)));
    });
}

csac_status csac_code_verify(const csac_code* code, int* holds, char** report) {
    return guarded_nonnull(code && holds, [&] {
        const auto v = csac::verify_family(code->rep);
        *holds = v.holds ? 1 : 0;
        if (!report) return;
        const auto& m = code->rep;
        const auto& autos = v.report.autocorrelation;
        const auto [lo, hi] = std::minmax_element(autos.begin(), autos.end());
        std::string text = "family " + m.family_name() + ", K=" + std::to_string(m.rows()) + ", L=" +
                           std::to_string(m.cols()) + ", w=" + std::to_string(m.weight()) + '\n';
        text += "autocorrelation " + std::to_string(*lo);
        if (*lo != *hi) text += ".." + std::to_string(*hi);
        text += '\n';
        if (v.report.max_cross) {
            text += "max cross-correlation " + std::to_string(*v.report.max_cross) + '\n';
            text += "min cross-correlation " + std::to_string(*v.report.min_cross) + '\n';
        } else {
            text += "max cross-correlation n/a (single row)\n";
        }
        text += v.holds ? "property holds\n" : "property violated: " + v.failure + '\n';
        *report = dup_string(text);
    });
}

csac_status csac_family_parameters(const char* family, uint32_t users, uint32_t weight,
                                   const csac_family_extras* extras, csac_family_params* out) {
    return guarded_nonnull(family && out, [&] {
        const auto p = csac::family_parameters(csac::parse_family(family), users, weight, to_core(extras));
        csac_family_params r{};
        copy_fixed(r.family, sizeof r.family, csac::family_label(p.family));
        copy_fixed(r.structural_name, sizeof r.structural_name, p.structural_name);
        r.structural_value = static_cast<uint32_t>(p.structural_value.value_or(0));
        r.requested_users = static_cast<uint32_t>(p.requested_users);
        r.users = static_cast<uint32_t>(p.users);
        r.weight = static_cast<uint32_t>(p.weight);
        r.length = static_cast<uint32_t>(p.length);
        copy_fixed(r.cross_correlation, sizeof r.cross_correlation, p.cross_correlation.to_string());
        r.discrepancy = p.discrepancy ? 1 : 0;
        *out = r;
    });
}

csac_status csac_compare(uint32_t users, uint32_t weight, const csac_family_extras* extras, csac_format format,
                         char** out) {
    return guarded_nonnull(out != nullptr, [&] {
        const auto rows = csac::compare_families(users, weight, to_core(extras));
        *out = dup_string(format == CSAC_FORMAT_JSON ? csac::compare_to_json(rows) : csac::compare_to_csv(rows));
    });
}

// ---- parameters -------------------------------------------------------------

csac_status csac_params_create(csac_params** out) {
    return guarded_nonnull(out != nullptr, [&] { *out = new csac_params{}; });
}

csac_status csac_params_parse(const char* text, csac_params** out) {
    return guarded_nonnull(text && out, [&] { *out = new csac_params{csac::parse_params(text)}; });
}

void csac_params_free(csac_params* params) { delete params; }

csac_status csac_params_set(csac_params* params, const char* key, double value) {
    return guarded_nonnull(params && key, [&] { csac::set_param(params->rep, key, value); });
}

csac_status csac_params_get(const csac_params* params, const char* key, double* value) {
    return guarded_nonnull(params && key && value, [&] { *value = csac::get_param(params->rep, key); });
}

csac_status csac_params_validate(const csac_params* params) {
    return guarded_nonnull(params != nullptr, [&] { csac::validate(params->rep); });
}

csac_status csac_params_to_text(const csac_params* params, char** out) {
    return guarded_nonnull(params && out, [&] { *out = dup_string(csac::params_to_text(params->rep)); });
}

// ---- link model -------------------------------------------------------------

double csac_erfc(double x) { return csac::erfc(x); }

double csac_ber_from_snr(double snr) {
    return snr >= 0.0 ? csac::ber_from_snr(snr) : 0.5;
}

double csac_dbm_to_watts(double dbm) { return csac::dbm_to_watts(dbm); }

double csac_watts_to_dbm(double watts) { return csac::watts_to_dbm(watts); }

csac_status csac_parse_power(const char* text, double* watts) {
    return guarded_nonnull(text && watts, [&] { *watts = csac::parse_power(text); });
}

csac_status csac_responsivity(const csac_params* params, double* out) {
    return guarded_nonnull(params && out, [&] {
        csac::validate(params->rep);
        *out = csac::responsivity(params->rep);
    });
}

csac_status csac_analyze(const csac_params* params, const csac_operating_point* op, csac_performance* out) {
    return guarded_nonnull(params && op && out, [&] {
        const auto core_op = to_core(*op);
        csac::validate(params->rep);
        csac::validate(core_op);
        *out = to_c(csac::evaluate(core_op, params->rep));
    });
}

csac_status csac_analyze_json(const csac_params* params, const csac_operating_point* op, char** out) {
    return guarded_nonnull(params && op && out, [&] {
        const auto core_op = to_core(*op);
        csac::validate(params->rep);
        csac::validate(core_op);
        *out = dup_string(csac::performance_to_json(csac::evaluate(core_op, params->rep), core_op, params->rep));
    });
}

csac_status csac_sweep_users(const csac_params* params, const uint32_t* users, size_t n, uint32_t weight,
                             double power_w, csac_sweep** out) {
    return guarded_nonnull(params && out && (n == 0 || users), [&] {
        std::vector<std::size_t> ks(users, users + n);
        *out = new csac_sweep{csac::sweep_users(ks, weight, power_w, params->rep), params->rep};
    });
}

csac_status csac_sweep_power(const csac_params* params, const double* power_dbm, size_t n, uint32_t users,
                             uint32_t weight, csac_sweep** out) {
    return guarded_nonnull(params && out && (n == 0 || power_dbm), [&] {
        std::span<const double> p = n == 0 ? std::span<const double>{} : std::span<const double>(power_dbm, n);
        *out = new csac_sweep{csac::sweep_power(p, users, weight, params->rep), params->rep};
    });
}

csac_status csac_sweep_distance(const csac_params* params, const double* distance_km, size_t n,
                                double launch_power_dbm, double attenuation_db_per_km, uint32_t users,
                                uint32_t weight, csac_sweep** out) {
    return guarded_nonnull(params && out && (n == 0 || distance_km), [&] {
        std::span<const double> d = n == 0 ? std::span<const double>{} : std::span<const double>(distance_km, n);
        *out = new csac_sweep{
            csac::sweep_distance(d, launch_power_dbm, users, weight, params->rep, attenuation_db_per_km), params->rep};
    });
}

void csac_sweep_free(csac_sweep* sweep) { delete sweep; }

size_t csac_sweep_size(const csac_sweep* sweep) { return sweep ? sweep->rep.rows.size() : 0; }

csac_status csac_sweep_row_at(const csac_sweep* sweep, size_t index, csac_sweep_row* out) {
    return guarded_nonnull(sweep && out, [&] {
        if (index >= sweep->rep.rows.size()) throw csac::DomainError("sweep row index out of range");
        const auto& r = sweep->rep.rows[index];
        *out = csac_sweep_row{static_cast<uint32_t>(r.users), static_cast<uint32_t>(r.weight),
                              static_cast<uint32_t>(r.length), r.distance_km, r.power_dbm, r.power_w, to_c(r.perf)};
    });
}

csac_status csac_sweep_crossing(const csac_sweep* sweep, double ber_threshold, int* found, double* x) {
    return guarded_nonnull(sweep && found && x, [&] {
        const auto c = csac::find_crossing(sweep->rep, ber_threshold);
        *found = c.has_value() ? 1 : 0;
        *x = c.value_or(0.0);
    });
}

csac_status csac_sweep_render(const csac_sweep* sweep, csac_format format, char** out) {
    return guarded_nonnull(sweep && out, [&] {
        *out = dup_string(format == CSAC_FORMAT_JSON ? csac::sweep_to_json(sweep->rep, sweep->params)
                                                     : csac::sweep_to_csv(sweep->rep, sweep->params));
    });
}

// ---- spectral model ---------------------------------------------------------

csac_status csac_psd_csv(const csac_code* code, const uint8_t* bits, size_t n_bits, double power_w,
                         const csac_params* params, uint32_t samples_per_chip, char** out) {
    return guarded_nonnull(code && params && out && (n_bits == 0 || bits), [&] {
        csac::validate(params->rep);
        const auto grid = csac::build_combined_psd(code->rep, bit_span(bits, n_bits), power_w,
                                                   csac::grid_spec(params->rep, samples_per_chip));
        *out = dup_string(csac::psd_to_csv(grid));
    });
}

csac_status csac_decode_numeric(const csac_code* code, const uint8_t* bits, size_t n_bits, uint32_t decoder,
                                double power_w, const csac_params* params, uint32_t samples_per_chip,
                                double* current_a) {
    return guarded_nonnull(code && params && current_a && (n_bits == 0 || bits), [&] {
        csac::validate(params->rep);
        const auto grid = csac::build_combined_psd(code->rep, bit_span(bits, n_bits), power_w,
                                                   csac::grid_spec(params->rep, samples_per_chip));
        *current_a = csac::decode_photocurrent_numeric(grid, code->rep.row(decoder), csac::responsivity(params->rep));
    });
}

csac_status csac_crosstalk(const csac_code* code, double power_w, const csac_params* params, double* out, size_t n) {
    return guarded_nonnull(code && params && out, [&] {
        const std::size_t k = code->rep.rows();
        if (n < k * k) throw csac::DomainError("crosstalk output buffer needs K*K entries");
        csac::validate(params->rep);
        const auto xt = csac::crosstalk_audit(code->rep, power_w, params->rep);
        std::copy(xt.current.begin(), xt.current.end(), out);
    });
}

void csac_mc_config_init(csac_mc_config* cfg) {
    if (!cfg) return;
    const csac::MonteCarloConfig d;
    *cfg = csac_mc_config{d.bits_per_user, d.rng_seed, 0, d.threshold_fraction, CSAC_INTERFERERS_RANDOM, 0, 0.0, 0};
}

csac_status csac_simulate(const csac_code* code, const csac_operating_point* op, const csac_params* params,
                          const csac_mc_config* cfg, csac_ber_estimate* out) {
    return guarded_nonnull(code && op && params && cfg && out, [&] {
        const auto est = csac::run_monte_carlo(code->rep, to_core(*op), params->rep, to_core(*cfg));
        *out = csac_ber_estimate{est.errors, est.bits, est.ber_point, est.ci95_low, est.ci95_high};
    });
}

csac_status csac_simulate_json(const csac_code* code, const csac_operating_point* op, const csac_params* params,
                               const csac_mc_config* cfg, char** out) {
    return guarded_nonnull(code && op && params && cfg && out, [&] {
        const auto core_op = to_core(*op);
        const auto core_cfg = to_core(*cfg);
        const auto est = csac::run_monte_carlo(code->rep, core_op, params->rep, core_cfg);
        *out = dup_string(csac::ber_estimate_to_json(est, core_cfg, core_op, params->rep, code->rep.family_name()));
    });
}

}  // extern "C"

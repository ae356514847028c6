/* SPDX-License-Identifier: Apache-2.0
 *
 * csac - cyclic shift spectral-amplitude-coding OCDMA toolkit
 * Copyright (C) 2026 The csac Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface of libcsac.
 *
 * Objects are opaque handles created by csac_*_create/build/parse and
 * released with the matching *_free. Every fallible call returns a
 * csac_status; on failure csac_last_error() describes the problem (the text
 * is thread-local and valid until the next failing call on the same thread).
 * Strings handed out through `char** out` are heap allocated and must be
 * released with csac_string_free.
 */

#ifndef CSAC_CSAC_H
#define CSAC_CSAC_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define CSAC_API __declspec(dllexport)
#elif defined(__GNUC__)
#  define CSAC_API __attribute__((visibility("default")))
#else
#  define CSAC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum csac_status {
  CSAC_OK = 0,
  CSAC_ERR_DOMAIN = 1,   /* argument outside the operation's domain */
  CSAC_ERR_PARSE = 2,    /* malformed text input */
  CSAC_ERR_NULL = 3,     /* required pointer argument was NULL */
  CSAC_ERR_INTERNAL = 4  /* unexpected failure (allocation, ...) */
} csac_status;

typedef enum csac_format { CSAC_FORMAT_CSV = 0, CSAC_FORMAT_JSON = 1 } csac_format;

typedef struct csac_code csac_code;
typedef struct csac_params csac_params;
typedef struct csac_sweep csac_sweep;

CSAC_API const char* csac_version(void);
CSAC_API const char* csac_last_error(void);
CSAC_API const char* csac_status_name(csac_status status);
CSAC_API void csac_string_free(char* s);

/* ---- codebook ------------------------------------------------------------ */

CSAC_API csac_status csac_code_build_cs(uint32_t users, uint32_t weight, csac_code** out);
CSAC_API csac_status csac_code_build_hadamard(uint32_t order_exponent, csac_code** out);
/* Parses the `K L w family` text format. */
CSAC_API csac_status csac_code_parse(const char* text, csac_code** out);
CSAC_API void csac_code_free(csac_code* code);

CSAC_API csac_status csac_code_dims(const csac_code* code, uint32_t* users, uint32_t* length, uint32_t* weight);
/* *name stays valid for the lifetime of `code`. */
CSAC_API csac_status csac_code_family(const csac_code* code, const char** name);
CSAC_API csac_status csac_code_bit(const csac_code* code, uint32_t row, uint32_t col, int* bit);
CSAC_API csac_status csac_code_to_text(const csac_code* code, char** out);

CSAC_API csac_status csac_cross_correlation(const uint8_t* a, const uint8_t* b, size_t length, uint32_t* out);

typedef struct csac_correlation {
  uint32_t min_auto;
  uint32_t max_auto;
  int has_pairs;      /* 0 for a single-row matrix */
  uint32_t min_cross; /* valid when has_pairs */
  uint32_t max_cross;
} csac_correlation;

CSAC_API csac_status csac_code_correlation(const csac_code* code, csac_correlation* out);
/* Writes min(n, K) per-row autocorrelations. */
CSAC_API csac_status csac_code_autocorrelation(const csac_code* code, uint32_t* values, size_t n);
/* *holds = 1 when the declared family's property holds. `report` (optional)
 * receives a multi-line human readable summary. */
CSAC_API csac_status csac_code_verify(const csac_code* code, int* holds, char** report);

typedef struct csac_family_extras {
  int has_dsc_d;
  uint32_t dsc_d;
  int has_ms_kb;
  uint32_t ms_kb;
} csac_family_extras;

typedef struct csac_family_params {
  char family[16];
  char structural_name[8]; /* empty when the family has none */
  uint32_t structural_value;
  uint32_t requested_users;
  uint32_t users;
  uint32_t weight;
  uint32_t length;
  char cross_correlation[24];
  int discrepancy;
} csac_family_params;

/* `extras` may be NULL. */
CSAC_API csac_status csac_family_parameters(const char* family, uint32_t users, uint32_t weight,
                                            const csac_family_extras* extras, csac_family_params* out);
CSAC_API csac_status csac_compare(uint32_t users, uint32_t weight, const csac_family_extras* extras,
                                  csac_format format, char** out);

/* ---- physical parameters ------------------------------------------------- */

CSAC_API csac_status csac_params_create(csac_params** out);
/* `key = value` config text; unknown keys are an error. */
CSAC_API csac_status csac_params_parse(const char* text, csac_params** out);
CSAC_API void csac_params_free(csac_params* params);
CSAC_API csac_status csac_params_set(csac_params* params, const char* key, double value);
CSAC_API csac_status csac_params_get(const csac_params* params, const char* key, double* value);
CSAC_API csac_status csac_params_validate(const csac_params* params);
CSAC_API csac_status csac_params_to_text(const csac_params* params, char** out);

/* ---- closed-form link model ---------------------------------------------- */

typedef struct csac_operating_point {
  uint32_t users;
  uint32_t weight;
  double received_power_w;
  int has_fiber_length;
  double fiber_length_km;
  double attenuation_db_per_km;
} csac_operating_point;

typedef struct csac_performance {
  double photocurrent_a;
  double noise_variance_a2;
  double snr;
  double ber;
  double log10_ber;
} csac_performance;

CSAC_API double csac_erfc(double x);
CSAC_API double csac_ber_from_snr(double snr);
CSAC_API double csac_dbm_to_watts(double dbm);
CSAC_API double csac_watts_to_dbm(double watts);
/* "-10dBm", "1e-4W", ... -> watts */
CSAC_API csac_status csac_parse_power(const char* text, double* watts);
CSAC_API csac_status csac_responsivity(const csac_params* params, double* out);

CSAC_API csac_status csac_analyze(const csac_params* params, const csac_operating_point* op, csac_performance* out);
CSAC_API csac_status csac_analyze_json(const csac_params* params, const csac_operating_point* op, char** out);

CSAC_API csac_status csac_sweep_users(const csac_params* params, const uint32_t* users, size_t n, uint32_t weight,
                                      double power_w, csac_sweep** out);
CSAC_API csac_status csac_sweep_power(const csac_params* params, const double* power_dbm, size_t n, uint32_t users,
                                      uint32_t weight, csac_sweep** out);
CSAC_API csac_status csac_sweep_distance(const csac_params* params, const double* distance_km, size_t n,
                                         double launch_power_dbm, double attenuation_db_per_km, uint32_t users,
                                         uint32_t weight, csac_sweep** out);
CSAC_API void csac_sweep_free(csac_sweep* sweep);

typedef struct csac_sweep_row {
  uint32_t users;
  uint32_t weight;
  uint32_t length;
  double distance_km;
  double power_dbm;
  double power_w;
  csac_performance perf;
} csac_sweep_row;

CSAC_API size_t csac_sweep_size(const csac_sweep* sweep);
CSAC_API csac_status csac_sweep_row_at(const csac_sweep* sweep, size_t index, csac_sweep_row* out);
/* *found = 0 when the curve never crosses the threshold. */
CSAC_API csac_status csac_sweep_crossing(const csac_sweep* sweep, double ber_threshold, int* found, double* x);
/* CSV carries the resolved parameter set as leading comment lines. */
CSAC_API csac_status csac_sweep_render(const csac_sweep* sweep, csac_format format, char** out);

/* ---- spectral model and Monte Carlo -------------------------------------- */

/* `bits` has K entries (0/1). CSV of (frequency_hz, psd_w_per_hz). */
CSAC_API csac_status csac_psd_csv(const csac_code* code, const uint8_t* bits, size_t n_bits, double power_w,
                                  const csac_params* params, uint32_t samples_per_chip, char** out);
/* Decodes the combined PSD of `bits` with decoder row `decoder`. */
CSAC_API csac_status csac_decode_numeric(const csac_code* code, const uint8_t* bits, size_t n_bits, uint32_t decoder,
                                         double power_w, const csac_params* params, uint32_t samples_per_chip,
                                         double* current_a);
/* Fills K*K row-major currents: out[j*K + k] = user j's current when only k sends. */
CSAC_API csac_status csac_crosstalk(const csac_code* code, double power_w, const csac_params* params, double* out,
                                    size_t n);

typedef enum csac_interferers {
  CSAC_INTERFERERS_RANDOM = 0,
  CSAC_INTERFERERS_ALL_ONES = 1,
  CSAC_INTERFERERS_ALL_ZEROS = 2
} csac_interferers;

typedef struct csac_mc_config {
  uint64_t bits_per_user;
  uint64_t seed;
  uint32_t target_user;
  double threshold_fraction;
  csac_interferers interferers;
  int has_noise_variance;
  double noise_variance_a2;
  uint32_t threads; /* 0 = hardware concurrency */
} csac_mc_config;

typedef struct csac_ber_estimate {
  uint64_t errors;
  uint64_t bits;
  double ber;
  double ci95_low;
  double ci95_high;
} csac_ber_estimate;

/* Fills the defaults: 1e6 bits, seed 1, user 0, threshold 0.5, random interferers. */
CSAC_API void csac_mc_config_init(csac_mc_config* cfg);
CSAC_API csac_status csac_simulate(const csac_code* code, const csac_operating_point* op, const csac_params* params,
                                   const csac_mc_config* cfg, csac_ber_estimate* out);
CSAC_API csac_status csac_simulate_json(const csac_code* code, const csac_operating_point* op,
                                        const csac_params* params, const csac_mc_config* cfg, char** out);

#ifdef __cplusplus
}
#endif

#endif /* CSAC_CSAC_H */

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

#include "csac/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>

#include <boost/math/distributions/binomial.hpp>

namespace csac {

GridSpec grid_spec(const PhysicalParams& params, std::size_t samples_per_chip) {
    return GridSpec{params.light_speed_ms / params.wavelength_m, params.linewidth_hz, samples_per_chip};
}

double SpectrumGrid::sample_width_hz() const {
    return span_hz / static_cast<double>(chips * samples_per_chip);
}

double SpectrumGrid::chip_start_hz(std::size_t chip) const {
    const double l = static_cast<double>(chips);
    return center_hz + span_hz * (-l + 2.0 * static_cast<double>(chip)) / (2.0 * l);
}

double SpectrumGrid::sample_start_hz(std::size_t sample) const {
    const std::size_t chip = sample / samples_per_chip;
    const std::size_t sub = sample % samples_per_chip;
    return chip_start_hz(chip) + static_cast<double>(sub) * sample_width_hz();
}

double SpectrumGrid::integrated_power_w() const {
    double sum = 0.0;
    for (double v : psd) sum += v;
    return sum * sample_width_hz();
}

SpectrumGrid build_combined_psd(const CodeMatrix& matrix, std::span<const std::uint8_t> data_bits, double p_sr_w,
                                const GridSpec& spec) {
    if (data_bits.size() != matrix.rows())
        throw DomainError("build_combined_psd: expected " + std::to_string(matrix.rows()) + " data bits, got " +
                          std::to_string(data_bits.size()));
    if (spec.samples_per_chip == 0) throw DomainError("build_combined_psd: samples_per_chip must be >= 1");
    if (!(spec.span_hz > 0.0)) throw DomainError("build_combined_psd: span must be > 0");
    if (!(p_sr_w >= 0.0)) throw DomainError("build_combined_psd: power must be >= 0");

    SpectrumGrid grid;
    grid.center_hz = spec.center_hz;
    grid.span_hz = spec.span_hz;
    grid.chips = matrix.cols();
    grid.samples_per_chip = spec.samples_per_chip;
    grid.psd.assign(grid.chips * grid.samples_per_chip, 0.0);

    std::vector<std::size_t> occupancy(grid.chips, 0);
    for (std::size_t k = 0; k < matrix.rows(); ++k) {
        if (data_bits[k] > 1) throw DomainError("build_combined_psd: data bits must be 0 or 1");
        if (!data_bits[k]) continue;
        const auto row = matrix.row(k);
        for (std::size_t i = 0; i < grid.chips; ++i) occupancy[i] += row[i];
    }
    const double level = p_sr_w / spec.span_hz;
    for (std::size_t i = 0; i < grid.chips; ++i) {
        const double v = level * static_cast<double>(occupancy[i]);
        std::fill_n(grid.psd.begin() + static_cast<std::ptrdiff_t>(i * grid.samples_per_chip), grid.samples_per_chip,
                    v);
    }
    return grid;
}

double decode_photocurrent_numeric(const SpectrumGrid& grid, std::span<const std::uint8_t> decoder_row,
                                   double responsivity_a_per_w) {
    if (decoder_row.size() != grid.chips)
        throw DomainError("decode_photocurrent_numeric: decoder has " + std::to_string(decoder_row.size()) +
                          " chips, grid has " + std::to_string(grid.chips));
    double sum = 0.0;
    for (std::size_t i = 0; i < grid.chips; ++i) {
        if (!decoder_row[i]) continue;
        for (std::size_t s = 0; s < grid.samples_per_chip; ++s) sum += grid.psd[i * grid.samples_per_chip + s];
    }
    return responsivity_a_per_w * sum * grid.sample_width_hz();
}

CrosstalkMatrix crosstalk_audit(const CodeMatrix& matrix, double p_sr_w, const PhysicalParams& params) {
    const std::size_t k_users = matrix.rows();
    const auto spec = grid_spec(params);
    const double r = responsivity(params);

    CrosstalkMatrix out{k_users, std::vector<double>(k_users * k_users, 0.0)};
    std::vector<std::uint8_t> bits(k_users, 0);
    for (std::size_t k = 0; k < k_users; ++k) {
        bits[k] = 1;
        const auto grid = build_combined_psd(matrix, bits, p_sr_w, spec);
        for (std::size_t j = 0; j < k_users; ++j)
            out.current[j * k_users + k] = decode_photocurrent_numeric(grid, matrix.row(j), r);
        bits[k] = 0;
    }
    return out;
}

// ---- Monte Carlo ------------------------------------------------------------

void validate(const MonteCarloConfig& cfg, std::size_t users) {
    if (cfg.bits_per_user == 0) throw DomainError("Monte Carlo needs at least one bit per user");
    if (cfg.target_user >= users)
        throw DomainError("target user " + std::to_string(cfg.target_user) + " out of range for K = " +
                          std::to_string(users));
    if (!(cfg.threshold_fraction >= 0.0 && cfg.threshold_fraction < 1.0))
        throw DomainError("threshold fraction must lie in [0, 1)");
    if (cfg.noise_variance_override && !(*cfg.noise_variance_override >= 0.0))
        throw DomainError("noise variance override must be >= 0");
}

std::pair<double, double> binomial_ci95(std::uint64_t errors, std::uint64_t trials) {
    if (trials == 0) throw DomainError("binomial interval needs at least one trial");
    if (errors > trials) throw DomainError("more errors than trials");
    using boost::math::binomial_distribution;
    const auto n = static_cast<double>(trials);
    const auto k = static_cast<double>(errors);
    if (errors == 0) return {0.0, 1.0 - std::pow(0.05, 1.0 / n)};
    const double lo = binomial_distribution<>::find_lower_bound_on_p(n, k, 0.025);
    const double hi = errors == trials ? 1.0 : binomial_distribution<>::find_upper_bound_on_p(n, k, 0.025);
    return {lo, hi};
}

namespace {

std::uint64_t slot_state(std::uint64_t seed, std::uint64_t slot) {
    SplitMix64 mix(seed);
    return mix() ^ SplitMix64(slot ^ 0x6a09e667f3bcc909ULL)();
}

}  // namespace

BerEstimate run_monte_carlo(const CodeMatrix& matrix, const OperatingPoint& op, const PhysicalParams& params,
                            const MonteCarloConfig& cfg) {
    validate(params);
    validate(op);
    const std::size_t k_users = matrix.rows();
    if (op.users != k_users || op.weight != matrix.weight())
        throw DomainError("operating point (K, w) does not match the code matrix");
    validate(cfg, k_users);

    const double p_sr = effective_power_w(op);
    const double sigma = std::sqrt(cfg.noise_variance_override.value_or(noise_variance(op, params)));

    // Decoded current is linear in the data bits; gains come from the spectral
    // decode of each single transmitter.
    const auto xt = crosstalk_audit(matrix, p_sr, params);
    const std::size_t target = cfg.target_user;
    const double one_level = xt.at(target, target);
    const double threshold = cfg.threshold_fraction * one_level;
    std::vector<std::pair<std::size_t, double>> interferers;
    for (std::size_t k = 0; k < k_users; ++k)
        if (k != target && xt.at(target, k) != 0.0) interferers.emplace_back(k, xt.at(target, k));

    const std::size_t words = (k_users + 63) / 64;
    const std::uint64_t slots = cfg.bits_per_user;

    auto count_errors = [&](std::uint64_t begin, std::uint64_t end) {
        std::uint64_t errors = 0;
        std::vector<std::uint64_t> draw(words);
        for (std::uint64_t s = begin; s < end; ++s) {
            SplitMix64 rng(slot_state(cfg.rng_seed, s));
            for (auto& w : draw) w = rng();
            auto bit = [&](std::size_t k) { return static_cast<bool>((draw[k / 64] >> (k % 64)) & 1U); };

            const bool sent = bit(target);
            double current = sent ? one_level : 0.0;
            for (const auto& [k, gain] : interferers) {
                bool on = false;
                switch (cfg.interferers) {
                    case InterfererBits::Random: on = bit(k); break;
                    case InterfererBits::AllOnes: on = true; break;
                    case InterfererBits::AllZeros: on = false; break;
                }
                if (on) current += gain;
            }
            std::normal_distribution<double> gauss(0.0, 1.0);
            current += sigma * gauss(rng);
            if ((current > threshold) != sent) ++errors;
        }
        return errors;
    };

    unsigned threads = cfg.threads ? cfg.threads : std::max(1U, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, slots));
    std::vector<std::uint64_t> partial(threads, 0);
    if (threads == 1) {
        partial[0] = count_errors(0, slots);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            const std::uint64_t b = slots * t / threads;
            const std::uint64_t e = slots * (t + 1) / threads;
            pool.emplace_back([&, t, b, e] { partial[t] = count_errors(b, e); });
        }
    }

    BerEstimate est;
    est.bits = slots;
    for (auto p : partial) est.errors += p;
    est.ber_point = static_cast<double>(est.errors) / static_cast<double>(est.bits);
    std::tie(est.ci95_low, est.ci95_high) = binomial_ci95(est.errors, est.bits);
    return est;
}

}  // namespace csac

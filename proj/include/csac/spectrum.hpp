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

#ifndef CSAC_SPECTRUM_HPP
#define CSAC_SPECTRUM_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "csac/codebook.hpp"
#include "csac/linkmodel.hpp"

namespace csac {

struct GridSpec {
    double center_hz = 0.0;
    double span_hz = 0.0;
    std::size_t samples_per_chip = 1;
};

/// Centre c/lambda, span = source linewidth.
GridSpec grid_spec(const PhysicalParams& params, std::size_t samples_per_chip = 1);

/// Piecewise-constant PSD over [center - span/2, center + span/2), split
/// into `chips` equal slices of `samples_per_chip` samples each.
struct SpectrumGrid {
    double center_hz = 0.0;
    double span_hz = 0.0;
    std::size_t chips = 0;
    std::size_t samples_per_chip = 1;
    std::vector<double> psd;  // W/Hz, chips * samples_per_chip entries

    double sample_width_hz() const;
    double chip_start_hz(std::size_t chip) const;
    double sample_start_hz(std::size_t sample) const;
    /// Sum of psd * sample width over the whole grid.
    double integrated_power_w() const;
};

/// Received PSD when user k sends data_bits[k]. Every active user puts
/// P_sr / span W/Hz on each of its chips, so a chip's level is that times
/// the number of active users occupying it.
SpectrumGrid build_combined_psd(const CodeMatrix& matrix, std::span<const std::uint8_t> data_bits, double p_sr_w,
                                const GridSpec& spec);

/// R times the PSD integrated over the chips the decoder passes.
double decode_photocurrent_numeric(const SpectrumGrid& grid, std::span<const std::uint8_t> decoder_row,
                                   double responsivity_a_per_w);

/// current(j, k): current decoded by user j when only user k transmits.
struct CrosstalkMatrix {
    std::size_t users = 0;
    std::vector<double> current;  // row-major users x users

    double at(std::size_t decoder, std::size_t transmitter) const { return current.at(decoder * users + transmitter); }
};

CrosstalkMatrix crosstalk_audit(const CodeMatrix& matrix, double p_sr_w, const PhysicalParams& params);

// ---- Monte Carlo ------------------------------------------------------------

enum class InterfererBits { Random, AllOnes, AllZeros };

struct MonteCarloConfig {
    std::uint64_t bits_per_user = 1'000'000;
    std::uint64_t rng_seed = 1;
    std::size_t target_user = 0;
    /// Decision threshold as a fraction of the noiseless '1' current. 0 is
    /// accepted as a degenerate threshold.
    double threshold_fraction = 0.5;
    /// Non-target users' bits. The random draws are consumed either way, so
    /// the target bit and noise of each slot do not depend on this choice.
    InterfererBits interferers = InterfererBits::Random;
    /// Replaces the analytic receiver noise variance when set.
    std::optional<double> noise_variance_override;
    /// 0 = std::thread::hardware_concurrency().
    unsigned threads = 0;
};

void validate(const MonteCarloConfig& cfg, std::size_t users);

struct BerEstimate {
    std::uint64_t errors = 0;
    std::uint64_t bits = 0;
    double ber_point = 0.0;
    double ci95_low = 0.0;
    double ci95_high = 1.0;
};

/// Exact (Clopper-Pearson) 95% interval; zero errors gives the one-sided
/// bound [0, 1 - 0.05^(1/n)].
std::pair<double, double> binomial_ci95(std::uint64_t errors, std::uint64_t trials);

/// Chip-synchronous OOK simulation of one target user. Each bit slot draws
/// every user's bit with probability 1/2, decodes the target through the
/// spectral model, adds one Gaussian sample with the analytic noise variance
/// and compares against threshold_fraction times the noiseless '1' level.
/// Slot s uses a splitmix64 stream keyed by (seed, s), so the result does not
/// depend on the thread count.
BerEstimate run_monte_carlo(const CodeMatrix& matrix, const OperatingPoint& op, const PhysicalParams& params,
                            const MonteCarloConfig& cfg);

/// splitmix64 (Steele, Lea, Flood 2014). Satisfies UniformRandomBitGenerator.
class SplitMix64 {
public:
    using result_type = std::uint64_t;

    explicit SplitMix64(std::uint64_t state) noexcept : state_(state) {}
    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return ~result_type{0}; }

    result_type operator()() noexcept {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

}  // namespace csac

#endif  // CSAC_SPECTRUM_HPP

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

#ifndef CSAC_CODEBOOK_HPP
#define CSAC_CODEBOOK_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "csac/error.hpp"

namespace csac {

/// One code sequence: L chips, each 0 or 1.
using BitVector = std::vector<std::uint8_t>;

enum class CodeFamily { CS, Hadamard, Other };

/// K x L binary spreading-code matrix. Rows are users, columns are spectral
/// chips, both 0-based. Immutable once constructed.
class CodeMatrix {
public:
    /// Takes ownership of a row-major bit array. Checks shape and that every
    /// entry is 0/1; family-specific structure is left to `verify_family`.
    CodeMatrix(std::size_t rows, std::size_t cols, std::size_t weight, CodeFamily family, std::vector<std::uint8_t> bits,
               std::string family_name = {});

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t weight() const noexcept { return weight_; }
    CodeFamily family() const noexcept { return family_; }
    /// "CS", "Hadamard", or the free-form tag of an Other matrix.
    const std::string& family_name() const noexcept { return family_name_; }

    std::uint8_t at(std::size_t row, std::size_t col) const;
    std::span<const std::uint8_t> row(std::size_t k) const;
    BitVector row_vector(std::size_t k) const;

    friend bool operator==(const CodeMatrix&, const CodeMatrix&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::size_t weight_;
    CodeFamily family_;
    std::string family_name_;
    std::vector<std::uint8_t> bits_;
};

/// Cyclic shift code: row 0 has ones at chips 0..w-1, each following row is
/// the previous one rotated right by w. L = K*w.
CodeMatrix build_cs(std::size_t users, std::size_t weight);

/// Binary Hadamard code of order 2^M: Sylvester matrix with the all-ones row
/// dropped, +1 -> 1 and -1 -> 0. Gives (2^M - 1) rows of weight 2^(M-1).
CodeMatrix build_hadamard(unsigned order_exponent);

/// out[i] = in[(i - shift) mod L]
BitVector cyclic_shift_right(std::span<const std::uint8_t> sequence, std::size_t shift);

/// Number of chips where both sequences are 1.
std::size_t cross_correlation(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b);

struct CorrelationReport {
    std::vector<std::size_t> autocorrelation;
    /// Empty for a single-row matrix (no pairs exist).
    std::optional<std::size_t> max_cross;
    std::optional<std::size_t> min_cross;
};

CorrelationReport correlation_check(const CodeMatrix& matrix);

struct VerifyResult {
    bool holds = false;
    CorrelationReport report;
    /// Human readable reason for the first violated property; empty when `holds`.
    std::string failure;
};

/// Checks the property the matrix's declared family promises: for CS the
/// exact cyclic-shift structure (hence L = K*w and zero cross-correlation),
/// for Hadamard constant row weight and a single pairwise cross-correlation
/// value, for any other family constant row weight.
VerifyResult verify_family(const CodeMatrix& matrix);

// ---- text format --------------------------------------------------------

/// `K L w family` header followed by K lines of L '0'/'1' characters.
std::string to_text(const CodeMatrix& matrix);
/// Throws ParseError naming the first offending line.
CodeMatrix parse_text(std::string_view text);

// ---- family parameter formulas --------------------------------------------

enum class Family { Hadamard, MFH, MQC, KS, DSC, RD, MS, SWZCC, ZCC, MD, CS };

std::string_view family_label(Family f);
/// Case-insensitive; accepts "sw-zcc" and "swzcc". Throws DomainError.
Family parse_family(std::string_view name);
std::span<const Family> all_families();

struct CrossCorrelation {
    enum class Kind { Zero, One, AtMostOne, Value, Variable };
    Kind kind = Kind::Zero;
    double value = 0.0;  // meaningful for Kind::Value

    std::string to_string() const;
};

/// Parameters some formulas need but never define. Supplied by the caller.
struct FamilyExtras {
    std::optional<std::size_t> dsc_d;   // DSC: additive length term D
    std::optional<std::size_t> ms_kb;   // MS: k_B
};

struct FamilyParams {
    Family family;
    std::string structural_name;        // "M", "q", "p", ... or empty
    std::optional<std::size_t> structural_value;
    std::size_t requested_users = 0;
    std::size_t users = 0;               // achieved
    std::size_t weight = 0;
    std::size_t length = 0;
    CrossCorrelation cross_correlation;
    /// Set when the published 30-user comparison row disagrees with the formula.
    bool discrepancy = false;
    std::string note;
};

FamilyParams family_parameters(Family family, std::size_t target_users, std::size_t weight_hint,
                               const FamilyExtras& extras = {});

struct CompareRow {
    Family family;
    std::optional<FamilyParams> params;
    /// Maximum pairwise cross-correlation of a constructed code (CS and
    /// Hadamard only, skipped when the matrix would be too large).
    std::optional<std::size_t> measured_cross;
    /// Why `params` is missing, e.g. a formula parameter was not supplied.
    std::string error;
};

/// One row per family in `all_families()` order.
std::vector<CompareRow> compare_families(std::size_t users, std::size_t weight, const FamilyExtras& extras = {});

/// Smallest prime >= n (n >= 2).
std::size_t next_prime(std::size_t n);

}  // namespace csac

#endif  // CSAC_CODEBOOK_HPP

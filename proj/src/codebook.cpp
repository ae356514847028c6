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

#include "csac/codebook.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>

namespace csac {

namespace {

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

std::string_view family_tag(CodeFamily f) {
    switch (f) {
        case CodeFamily::CS: return "CS";
        case CodeFamily::Hadamard: return "Hadamard";
        case CodeFamily::Other: break;
    }
    return "Other";
}

std::size_t triangular(std::size_t n) { return n * (n + 1) / 2; }

}  // namespace

// ---- CodeMatrix -----------------------------------------------------------

CodeMatrix::CodeMatrix(std::size_t rows, std::size_t cols, std::size_t weight, CodeFamily family,
                       std::vector<std::uint8_t> bits, std::string family_name)
    : rows_(rows), cols_(cols), weight_(weight), family_(family), bits_(std::move(bits)) {
    if (rows == 0 || cols == 0 || weight == 0) throw DomainError("code matrix needs K >= 1, L >= 1, w >= 1");
    if (bits_.size() != rows * cols) throw DomainError("code matrix bit array does not match K x L");
    if (std::any_of(bits_.begin(), bits_.end(), [](std::uint8_t b) { return b > 1; }))
        throw DomainError("code matrix entries must be 0 or 1");
    if (family == CodeFamily::Other) {
        if (family_name.empty()) throw DomainError("family name required for non-CS/Hadamard matrices");
        family_name_ = std::move(family_name);
    } else {
        family_name_ = std::string(family_tag(family));
    }
}

std::uint8_t CodeMatrix::at(std::size_t row, std::size_t col) const {
    if (row >= rows_ || col >= cols_) throw DomainError("code matrix index out of range");
    return bits_[row * cols_ + col];
}

std::span<const std::uint8_t> CodeMatrix::row(std::size_t k) const {
    if (k >= rows_) throw DomainError("code matrix row out of range");
    return std::span<const std::uint8_t>(bits_).subspan(k * cols_, cols_);
}

BitVector CodeMatrix::row_vector(std::size_t k) const {
    auto r = row(k);
    return BitVector(r.begin(), r.end());
}

// ---- construction ---------------------------------------------------------

BitVector cyclic_shift_right(std::span<const std::uint8_t> sequence, std::size_t shift) {
    const std::size_t n = sequence.size();
    BitVector out(n);
    if (n == 0) return out;
    shift %= n;
    for (std::size_t i = 0; i < n; ++i) out[(i + shift) % n] = sequence[i];
    return out;
}

CodeMatrix build_cs(std::size_t users, std::size_t weight) {
    if (users == 0) throw DomainError("build_cs: number of users K must be >= 1");
    if (weight == 0) throw DomainError("build_cs: code weight w must be >= 1");
    const std::size_t length = users * weight;

    std::vector<std::uint8_t> bits(users * length, 0);
    BitVector seq(length, 0);
    std::fill_n(seq.begin(), weight, std::uint8_t{1});
    for (std::size_t k = 0; k < users; ++k) {
        std::copy(seq.begin(), seq.end(), bits.begin() + static_cast<std::ptrdiff_t>(k * length));
        seq = cyclic_shift_right(seq, weight);
    }
    return CodeMatrix(users, length, weight, CodeFamily::CS, std::move(bits));
}

CodeMatrix build_hadamard(unsigned order_exponent) {
    if (order_exponent < 2) throw DomainError("build_hadamard: order exponent M must be >= 2");
    if (order_exponent > 14) throw DomainError("build_hadamard: order exponent M must be <= 14");
    const std::size_t n = std::size_t{1} << order_exponent;

    // Sylvester: H[i][j] = (-1)^popcount(i & j), so +1 <=> even parity.
    std::vector<std::uint8_t> bits;
    bits.reserve((n - 1) * n);
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            bits.push_back(static_cast<std::uint8_t>((__builtin_popcountll(i & j) & 1) == 0));
    return CodeMatrix(n - 1, n, n / 2, CodeFamily::Hadamard, std::move(bits));
}

// ---- correlation ----------------------------------------------------------

std::size_t cross_correlation(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
    if (a.size() != b.size())
        throw DomainError("cross_correlation: length mismatch (" + std::to_string(a.size()) + " vs " +
                          std::to_string(b.size()) + ")");
    std::size_t sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i) sum += static_cast<std::size_t>(a[i] & b[i]);
    return sum;
}

CorrelationReport correlation_check(const CodeMatrix& matrix) {
    CorrelationReport report;
    const std::size_t k = matrix.rows();
    report.autocorrelation.reserve(k);
    for (std::size_t i = 0; i < k; ++i) report.autocorrelation.push_back(cross_correlation(matrix.row(i), matrix.row(i)));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            const std::size_t c = cross_correlation(matrix.row(i), matrix.row(j));
            report.max_cross = std::max(report.max_cross.value_or(0), c);
            report.min_cross = std::min(report.min_cross.value_or(c), c);
        }
    }
    return report;
}

VerifyResult verify_family(const CodeMatrix& matrix) {
    VerifyResult result;
    result.report = correlation_check(matrix);
    const auto& autos = result.report.autocorrelation;
    const std::size_t w = matrix.weight();

    for (std::size_t k = 0; k < autos.size(); ++k) {
        if (autos[k] != w) {
            result.failure = "row " + std::to_string(k) + " has weight " + std::to_string(autos[k]) + ", expected " +
                             std::to_string(w);
            return result;
        }
    }

    switch (matrix.family()) {
        case CodeFamily::CS: {
            if (matrix.cols() != matrix.rows() * w) {
                result.failure = "CS length " + std::to_string(matrix.cols()) + " != K*w = " +
                                 std::to_string(matrix.rows() * w);
                return result;
            }
            if (result.report.max_cross.value_or(0) != 0) {
                result.failure = "CS cross-correlation " + std::to_string(*result.report.max_cross) + " != 0";
                return result;
            }
            for (std::size_t k = 0; k < matrix.rows(); ++k) {
                for (std::size_t c = 0; c < matrix.cols(); ++c) {
                    const bool expected = c >= k * w && c < (k + 1) * w;
                    if (static_cast<bool>(matrix.at(k, c)) != expected) {
                        result.failure = "row " + std::to_string(k) + " is not the cyclic shift of row 0 by " +
                                         std::to_string(k * w);
                        return result;
                    }
                }
            }
            break;
        }
        case CodeFamily::Hadamard:
            if (result.report.max_cross != result.report.min_cross) {
                result.failure = "Hadamard pairwise cross-correlation is not constant (" +
                                 std::to_string(*result.report.min_cross) + ".." +
                                 std::to_string(*result.report.max_cross) + ")";
                return result;
            }
            break;
        case CodeFamily::Other:
            break;
    }
    result.holds = true;
    return result;
}

// ---- text format ----------------------------------------------------------

std::string to_text(const CodeMatrix& matrix) {
    std::string out = std::to_string(matrix.rows()) + ' ' + std::to_string(matrix.cols()) + ' ' +
                      std::to_string(matrix.weight()) + ' ' + matrix.family_name() + '\n';
    out.reserve(out.size() + matrix.rows() * (matrix.cols() + 1));
    for (std::size_t k = 0; k < matrix.rows(); ++k) {
        for (auto b : matrix.row(k)) out.push_back(b ? '1' : '0');
        out.push_back('\n');
    }
    return out;
}

CodeMatrix parse_text(std::string_view text) {
    std::vector<std::string_view> lines;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        if (nl == std::string_view::npos) break;
        text.remove_prefix(nl + 1);
    }
    if (lines.empty()) throw ParseError(1, "empty input, expected header 'K L w family'");

    auto parse_count = [](std::string_view tok, const char* what) {
        std::size_t v = 0;
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc{} || ptr != tok.data() + tok.size() || v == 0)
            throw ParseError(1, std::string("header field ") + what + " must be a positive integer, got '" +
                                    std::string(tok) + "'");
        return v;
    };

    std::vector<std::string_view> tokens;
    {
        std::string_view h = lines[0];
        while (!h.empty()) {
            const auto start = h.find_first_not_of(" \t");
            if (start == std::string_view::npos) break;
            h.remove_prefix(start);
            const auto end = h.find_first_of(" \t");
            tokens.push_back(h.substr(0, end));
            if (end == std::string_view::npos) break;
            h.remove_prefix(end);
        }
    }
    if (tokens.size() != 4) throw ParseError(1, "header must be 'K L w family'");
    const std::size_t k = parse_count(tokens[0], "K");
    const std::size_t l = parse_count(tokens[1], "L");
    const std::size_t w = parse_count(tokens[2], "w");
    const std::string fam = lower(tokens[3]);
    CodeFamily family = CodeFamily::Other;
    if (fam == "cs") family = CodeFamily::CS;
    else if (fam == "hadamard") family = CodeFamily::Hadamard;

    std::vector<std::uint8_t> bits;
    bits.reserve(k * l);
    for (std::size_t r = 0; r < k; ++r) {
        const std::size_t lineno = r + 2;
        if (r + 1 >= lines.size()) throw ParseError(lineno, "missing code row " + std::to_string(r));
        const auto row = lines[r + 1];
        if (row.size() != l)
            throw ParseError(lineno, "row has " + std::to_string(row.size()) + " chips, expected " + std::to_string(l));
        for (char c : row) {
            if (c != '0' && c != '1') throw ParseError(lineno, std::string("invalid chip character '") + c + "'");
            bits.push_back(static_cast<std::uint8_t>(c - '0'));
        }
    }
    for (std::size_t i = k + 1; i < lines.size(); ++i) {
        // a single trailing newline leaves one empty element behind
        if (!lines[i].empty() || i + 1 != lines.size())
            throw ParseError(i + 1, "unexpected content after " + std::to_string(k) + " code rows");
    }
    return CodeMatrix(k, l, w, family, std::move(bits), std::string(tokens[3]));
}

// ---- family parameters ----------------------------------------------------

namespace {

constexpr std::array kFamilies = {Family::Hadamard, Family::MFH, Family::MQC, Family::KS, Family::DSC, Family::RD,
                                  Family::MS,       Family::SWZCC, Family::ZCC, Family::MD, Family::CS};

bool is_prime(std::size_t n) {
    if (n < 2) return false;
    for (std::size_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

std::size_t next_prime(std::size_t n) {
    if (n < 2) n = 2;
    while (!is_prime(n)) ++n;
    return n;
}

std::string_view family_label(Family f) {
    switch (f) {
        case Family::Hadamard: return "Hadamard";
        case Family::MFH: return "MFH";
        case Family::MQC: return "MQC";
        case Family::KS: return "KS";
        case Family::DSC: return "DSC";
        case Family::RD: return "RD";
        case Family::MS: return "MS";
        case Family::SWZCC: return "SW-ZCC";
        case Family::ZCC: return "ZCC";
        case Family::MD: return "MD";
        case Family::CS: return "CS";
    }
    return "?";
}

Family parse_family(std::string_view name) {
    const std::string n = lower(name);
    for (Family f : kFamilies)
        if (n == lower(family_label(f))) return f;
    if (n == "swzcc" || n == "sw_zcc") return Family::SWZCC;
    throw DomainError("unknown code family '" + std::string(name) + "'");
}

std::span<const Family> all_families() { return kFamilies; }

std::string CrossCorrelation::to_string() const {
    switch (kind) {
        case Kind::Zero: return "0";
        case Kind::One: return "1";
        case Kind::AtMostOne: return "<=1";
        case Kind::Variable: return "variable";
        case Kind::Value: {
            std::ostringstream os;
            os << value;
            return os.str();
        }
    }
    return "?";
}

FamilyParams family_parameters(Family family, std::size_t target_users, std::size_t weight_hint,
                               const FamilyExtras& extras) {
    if (target_users == 0) throw DomainError("family_parameters: target users must be >= 1");
    using CC = CrossCorrelation::Kind;

    FamilyParams p;
    p.family = family;
    p.requested_users = target_users;
    const std::size_t K = target_users;
    const std::size_t w = weight_hint;
    auto need_weight = [&](std::size_t min) {
        if (w < min)
            throw DomainError(std::string(family_label(family)) + ": weight must be >= " + std::to_string(min));
    };

    switch (family) {
        case Family::Hadamard: {
            std::size_t m = 2;
            while ((std::size_t{1} << m) - 1 < K) ++m;
            p.structural_name = "M";
            p.structural_value = m;
            p.users = (std::size_t{1} << m) - 1;
            p.weight = std::size_t{1} << (m - 1);
            p.length = std::size_t{1} << m;
            p.cross_correlation = {CC::Value, std::ldexp(1.0, static_cast<int>(m) - 1)};
            p.discrepancy = true;
            p.note = "printed lambda_c = 2^(M-1); the binary Sylvester code measures 2^(M-2), the value listed in the "
                     "30-user comparison";
            break;
        }
        case Family::MFH: {
            std::size_t q = 2;
            while (q * q < K) ++q;
            p.structural_name = "q";
            p.structural_value = q;
            p.users = q * q;
            p.weight = q + 1;
            p.length = q * q + q;
            p.cross_correlation = {CC::One, 1.0};
            break;
        }
        case Family::MQC: {
            std::size_t prime = 3;
            while (prime * prime < K) prime = next_prime(prime + 1);
            p.structural_name = "p";
            p.structural_value = prime;
            p.users = prime * prime;
            p.weight = prime + 1;
            p.length = prime * prime + prime;
            p.cross_correlation = {CC::One, 1.0};
            p.discrepancy = true;
            p.note = "30-user comparison lists w=7, L=49, which the formula L = p^2 + p does not produce";
            break;
        }
        case Family::KS: {
            need_weight(2);
            if (w % 2 != 0) throw DomainError("KS: weight must be even");
            const std::size_t per_m = w / 2 + 1;
            const std::size_t m = (K + per_m - 1) / per_m;
            p.structural_name = "M";
            p.structural_value = m;
            p.users = m * per_m;
            p.weight = w;
            p.length = 3 * m * triangular(w / 2);
            p.cross_correlation = {CC::One, 1.0};
            p.discrepancy = true;
            p.note = "30-user comparison lists L=81, the formula L = 3M*sum(i, i=1..w/2) gives 90 at w=4";
            break;
        }
        case Family::DSC: {
            need_weight(1);
            if (!extras.dsc_d) throw DomainError("DSC: missing parameter D");
            p.structural_name = "D";
            p.structural_value = *extras.dsc_d;
            p.weight = w;
            p.length = ((std::size_t{1} << w) - 2) + *extras.dsc_d;
            p.users = p.length;
            p.cross_correlation = {CC::AtMostOne, 1.0};
            break;
        }
        case Family::RD: {
            need_weight(1);
            if (K + 2 * w <= 3) throw DomainError("RD: K + 2w - 3 must be positive");
            p.users = K;
            p.weight = w;
            p.length = K + 2 * w - 3;
            p.cross_correlation = {CC::Variable, 0.0};
            break;
        }
        case Family::MS: {
            need_weight(1);
            if (!extras.ms_kb) throw DomainError("MS: missing parameter k_B");
            if (*extras.ms_kb > w) throw DomainError("MS: k_B must not exceed w");
            const std::size_t m = (K + w - 1) / w;
            p.structural_name = "M";
            p.structural_value = m;
            p.users = m * w;
            p.weight = w;
            p.length = m * (triangular(w) - triangular(w - *extras.ms_kb));
            p.cross_correlation = {CC::AtMostOne, 1.0};
            p.discrepancy = true;
            p.note = "30-user comparison lists L=75 at w=4; with M = ceil(30/4) = 8 the formula only yields multiples of 8";
            break;
        }
        case Family::SWZCC: {
            std::size_t m = 1;
            while (m * m < K) ++m;
            p.structural_name = "M";
            p.structural_value = m;
            p.users = K;
            p.weight = 1;
            p.length = K;
            p.cross_correlation = {CC::Zero, 0.0};
            if (m * m != K) p.note = "K = M^2 requires a square user count; L = K evaluated at the requested K";
            break;
        }
        case Family::ZCC: {
            std::size_t m = 1;
            while ((std::size_t{1} << m) < K) ++m;
            p.structural_name = "M";
            p.structural_value = m;
            p.users = std::size_t{1} << m;
            p.weight = std::size_t{1} << (m - 1);
            p.length = std::size_t{1} << m;
            p.cross_correlation = {CC::Zero, 0.0};
            p.discrepancy = true;
            p.note = "30-user comparison lists w=4, L=120, which is the L = K*w formula of MD/CS, not L = 2^M";
            break;
        }
        case Family::MD:
        case Family::CS: {
            need_weight(1);
            p.users = K;
            p.weight = w;
            p.length = K * w;
            p.cross_correlation = {CC::Zero, 0.0};
            break;
        }
    }
    p.requested_users = K;
    return p;
}

std::vector<CompareRow> compare_families(std::size_t users, std::size_t weight, const FamilyExtras& extras) {
    if (users == 0) throw DomainError("compare: users must be >= 1");
    constexpr double kMaxPairWork = 5e7;  // K^2 * L bit operations

    std::vector<CompareRow> rows;
    for (Family f : all_families()) {
        CompareRow row{f, std::nullopt, std::nullopt, {}};
        try {
            row.params = family_parameters(f, users, weight, extras);
        } catch (const DomainError& e) {
            row.error = e.what();
            rows.push_back(std::move(row));
            continue;
        }
        const auto& p = *row.params;
        const double work = static_cast<double>(p.users) * static_cast<double>(p.users) * static_cast<double>(p.length);
        if (work <= kMaxPairWork && p.users > 1) {
            if (f == Family::CS) row.measured_cross = correlation_check(build_cs(p.users, p.weight)).max_cross;
            if (f == Family::Hadamard)
                row.measured_cross = correlation_check(build_hadamard(static_cast<unsigned>(*p.structural_value))).max_cross;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace csac

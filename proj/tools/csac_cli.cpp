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

// Command-line front end. Talks to the library exclusively through csac.h.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/parse error.

#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "csac/csac.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void check(csac_status st) {
    if (st != CSAC_OK) throw UsageError(std::string(csac_status_name(st)) + ": " + csac_last_error());
}

struct CString {
    char* p = nullptr;
    ~CString() { csac_string_free(p); }
    std::string str() const { return p ? std::string(p) : std::string(); }
};

struct CodeDeleter {
    void operator()(csac_code* c) const { csac_code_free(c); }
};
struct ParamsDeleter {
    void operator()(csac_params* p) const { csac_params_free(p); }
};
struct SweepDeleter {
    void operator()(csac_sweep* s) const { csac_sweep_free(s); }
};
using CodePtr = std::unique_ptr<csac_code, CodeDeleter>;
using ParamsPtr = std::unique_ptr<csac_params, ParamsDeleter>;
using SweepPtr = std::unique_ptr<csac_sweep, SweepDeleter>;

std::string read_input(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content << std::flush;
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out || !(out << content)) throw UsageError("cannot write '" + path + "'");
}

double parse_real(const std::string& s, const char* what) {
    double v = 0.0;
    const char* b = s.data();
    if (!s.empty() && s.front() == '+') ++b;
    const auto [ptr, ec] = std::from_chars(b, s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) throw UsageError(std::string("bad ") + what + " '" + s + "'");
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

// "first:last[:step]" or a single value
std::vector<double> parse_real_range(const std::string& spec, double default_step) {
    const auto parts = split(spec, ':');
    if (parts.size() == 1) return {parse_real(parts[0], "range")};
    if (parts.size() > 3) throw UsageError("range must be first:last[:step], got '" + spec + "'");
    const double first = parse_real(parts[0], "range start");
    const double last = parse_real(parts[1], "range end");
    const double step = parts.size() == 3 ? parse_real(parts[2], "range step") : default_step;
    if (!(step > 0.0)) throw UsageError("range step must be > 0");
    if (first > last) throw UsageError("range start exceeds end in '" + spec + "'");
    std::vector<double> out;
    const auto n = static_cast<std::size_t>((last - first) / step + 1e-9) + 1;
    for (std::size_t i = 0; i < n; ++i) out.push_back(first + static_cast<double>(i) * step);
    return out;
}

std::vector<std::uint32_t> parse_count_range(const std::string& spec) {
    std::vector<std::uint32_t> out;
    for (double v : parse_real_range(spec, 1.0)) {
        if (v < 1.0 || v != static_cast<double>(static_cast<std::uint32_t>(v)))
            throw UsageError("user range must contain positive integers, got '" + spec + "'");
        out.push_back(static_cast<std::uint32_t>(v));
    }
    return out;
}

double parse_power_w(const std::string& text) {
    double w = 0.0;
    check(csac_parse_power(text.c_str(), &w));
    return w;
}

double power_dbm(const std::string& text) { return csac_watts_to_dbm(parse_power_w(text)); }

csac_format parse_format(const std::string& f) {
    if (f == "csv") return CSAC_FORMAT_CSV;
    if (f == "json") return CSAC_FORMAT_JSON;
    throw UsageError("format must be csv or json, got '" + f + "'");
}

// ---- shared options ---------------------------------------------------------

struct ParamOptions {
    std::string file;
    std::vector<std::string> overrides;

    void attach(CLI::App* cmd) {
        cmd->add_option("--params", file, "Physical-parameter config file (key = value)");
        cmd->add_option("--param", overrides, "Override one parameter, key=value (repeatable)");
    }

    ParamsPtr resolve() const {
        csac_params* raw = nullptr;
        if (file.empty()) check(csac_params_create(&raw));
        else check(csac_params_parse(read_input(file).c_str(), &raw));
        ParamsPtr params(raw);
        for (const auto& kv : overrides) {
            const auto eq = kv.find('=');
            if (eq == std::string::npos) throw UsageError("--param expects key=value, got '" + kv + "'");
            check(csac_params_set(params.get(), kv.substr(0, eq).c_str(), parse_real(kv.substr(eq + 1), "value")));
        }
        check(csac_params_validate(params.get()));
        return params;
    }
};

struct CodeOptions {
    std::string family = "cs";
    std::uint32_t users = 0;
    std::uint32_t weight = 4;
    std::uint32_t order = 0;

    CodePtr build() const {
        csac_code* raw = nullptr;
        if (family == "cs" || family == "CS") {
            if (users == 0) throw UsageError("--users is required for the CS family");
            check(csac_code_build_cs(users, weight, &raw));
        } else if (family == "hadamard" || family == "Hadamard") {
            if (order == 0) throw UsageError("--order is required for the Hadamard family");
            check(csac_code_build_hadamard(order, &raw));
        } else {
            throw UsageError("unsupported family '" + family + "' (generate supports cs and hadamard)");
        }
        return CodePtr(raw);
    }
};

// ---- commands -----------------------------------------------------------------

int cmd_generate(const CodeOptions& code_opts, const std::string& out) {
    const auto code = code_opts.build();
    CString text;
    check(csac_code_to_text(code.get(), &text.p));
    write_output(out, text.str());

    std::uint32_t k = 0, l = 0, w = 0;
    check(csac_code_dims(code.get(), &k, &l, &w));
    csac_correlation corr{};
    check(csac_code_correlation(code.get(), &corr));
    std::cerr << "K=" << k << " L=" << l << " w=" << w << " lambda_c=" << (corr.has_pairs ? corr.max_cross : 0)
              << '\n';
    return kExitOk;
}

int cmd_verify(const std::string& path) {
    const std::string text = read_input(path);
    csac_code* raw = nullptr;
    const auto st = csac_code_parse(text.c_str(), &raw);
    if (st != CSAC_OK) {
        std::cerr << "csac verify: " << path << ": " << csac_last_error() << '\n';
        return kExitUsage;
    }
    CodePtr code(raw);
    int holds = 0;
    CString report;
    check(csac_code_verify(code.get(), &holds, &report.p));
    std::cout << report.str();
    return holds ? kExitOk : kExitVerifyFailed;
}

csac_operating_point make_op(std::uint32_t users, std::uint32_t weight, double power_w,
                             const std::optional<double>& length_km, double alpha) {
    csac_operating_point op{};
    op.users = users;
    op.weight = weight;
    op.received_power_w = power_w;
    op.has_fiber_length = length_km.has_value();
    op.fiber_length_km = length_km.value_or(0.0);
    op.attenuation_db_per_km = alpha;
    return op;
}

void report_crossing(const csac_sweep* sweep, const char* unit) {
    int found = 0;
    double x = 0.0;
    check(csac_sweep_crossing(sweep, 1e-9, &found, &x));
    if (found) std::cerr << "BER 1e-9 crossing at " << x << ' ' << unit << '\n';
    else std::cerr << "BER 1e-9 not crossed in the swept range\n";
}

int emit_sweep(csac_sweep* raw, const std::string& format, const std::string& out, const char* unit) {
    SweepPtr sweep(raw);
    CString text;
    check(csac_sweep_render(sweep.get(), parse_format(format), &text.p));
    write_output(out, text.str());
    report_crossing(sweep.get(), unit);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cyclic shift SAC-OCDMA code construction and link analysis"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(csac_version()));

    std::string out = "-";
    std::string format = "csv";
    ParamOptions param_opts;
    CodeOptions code_opts;

    // generate
    auto* gen = app.add_subcommand("generate", "Build a code matrix and write it in text form");
    gen->add_option("--family", code_opts.family, "cs or hadamard")->capture_default_str();
    gen->add_option("--users", code_opts.users, "Number of users K (CS)");
    gen->add_option("--weight", code_opts.weight, "Code weight w (CS)")->capture_default_str();
    gen->add_option("--order", code_opts.order, "Hadamard order exponent M");
    gen->add_option("--out", out, "Output path, - for stdout")->capture_default_str();

    // verify
    std::string matrix_file;
    auto* ver = app.add_subcommand("verify", "Check a code-matrix file against its family's correlation property");
    ver->add_option("matrix", matrix_file, "Matrix text file, - for stdin")->required();

    // analyze
    std::uint32_t users = 60;
    std::uint32_t weight = 4;
    std::string power = "-10dBm";
    std::optional<double> length_km;
    double alpha = 0.25;
    auto* ana = app.add_subcommand("analyze", "Closed-form photocurrent, noise, SNR and BER at one operating point");
    ana->add_option("--users", users, "Number of users K")->capture_default_str();
    ana->add_option("--weight", weight, "Code weight w")->capture_default_str();
    ana->add_option("--power", power, "Received power per user (dBm or W suffix)")->capture_default_str();
    ana->add_option("--length", length_km, "Fiber length in km (power becomes launch power)");
    ana->add_option("--alpha", alpha, "Attenuation in dB/km")->capture_default_str();
    ana->add_option("--out", out, "Output path, - for stdout")->capture_default_str();
    param_opts.attach(ana);

    // sweep-users
    std::string k_range = "10:120";
    auto* swu = app.add_subcommand("sweep-users", "BER versus number of users");
    swu->add_option("--weight", weight, "Code weight w")->capture_default_str();
    swu->add_option("--power", power, "Received power per user (dBm or W suffix)")->capture_default_str();
    swu->add_option("--k", k_range, "User range first:last[:step]")->capture_default_str();
    swu->add_option("--format", format, "csv or json")->capture_default_str();
    swu->add_option("--out", out, "Output path, - for stdout")->capture_default_str();
    param_opts.attach(swu);

    // sweep-power
    std::string p_range = "-20:-5:0.25";
    auto* swp = app.add_subcommand("sweep-power", "BER versus received power");
    swp->add_option("--users", users, "Number of users K")->capture_default_str();
    swp->add_option("--weight", weight, "Code weight w")->capture_default_str();
    swp->add_option("--p", p_range, "Power range in dBm first:last[:step]")->capture_default_str();
    swp->add_option("--format", format, "csv or json")->capture_default_str();
    swp->add_option("--out", out, "Output path, - for stdout")->capture_default_str();
    param_opts.attach(swp);

    // sweep-distance
    std::string d_range = "0:40";
    std::uint32_t distance_users = 4;
    auto* swd = app.add_subcommand("sweep-distance", "BER versus fiber length (attenuation only)");
    swd->add_option("--users", distance_users, "Number of users K")->capture_default_str();
    swd->add_option("--weight", weight, "Code weight w")->capture_default_str();
    swd->add_option("--power", power, "Launch power per user (dBm or W suffix)")->capture_default_str();
    swd->add_option("--length", d_range, "Distance range in km first:last[:step]")->capture_default_str();
    swd->add_option("--alpha", alpha, "Attenuation in dB/km")->capture_default_str();
    swd->add_option("--format", format, "csv or json")->capture_default_str();
    swd->add_option("--out", out, "Output path, - for stdout")->capture_default_str();
    param_opts.attach(swd);

    // simulate
    csac_mc_config mc{};
    csac_mc_config_init(&mc);
    std::string interferers = "random";
    std::optional<double> noise_variance;
    std::string psd_out;
    auto* sim = app.add_subcommand("simulate", "Monte Carlo BER of one user through the spectral model");
    sim->add_option("--family", code_opts.family, "cs or hadamard")->capture_default_str();
    sim->add_option("--users", code_opts.users, "Number of users K (CS)");
    sim->add_option("--weight", code_opts.weight, "Code weight w (CS)")->capture_default_str();
    sim->add_option("--order", code_opts.order, "Hadamard order exponent M");
    sim->add_option("--power", power, "Received power per user (dBm or W suffix)")->capture_default_str();
    sim->add_option("--length", length_km, "Fiber length in km (power becomes launch power)");
    sim->add_option("--alpha", alpha, "Attenuation in dB/km")->capture_default_str();
    sim->add_option("--bits", mc.bits_per_user, "Bit slots to simulate")->capture_default_str();
    sim->add_option("--seed", mc.seed, "RNG seed")->capture_default_str();
    sim->add_option("--target", mc.target_user, "Target user index")->capture_default_str();
    sim->add_option("--threshold", mc.threshold_fraction, "Threshold as a fraction of the '1' level")
        ->capture_default_str();
    sim->add_option("--interferers", interferers, "random, ones or zeros")->capture_default_str();
    sim->add_option("--noise-variance", noise_variance, "Override the receiver noise variance (A^2)");
    sim->add_option("--threads", mc.threads, "Worker threads, 0 = all cores")->capture_default_str();
    sim->add_option("--psd", psd_out, "Also write the all-active PSD as CSV to this path");
    sim->add_option("--out", out, "Output path, - for stdout")->capture_default_str();
    param_opts.attach(sim);

    // compare
    std::uint32_t cmp_users = 30;
    std::optional<std::uint32_t> dsc_d;
    std::optional<std::uint32_t> ms_kb;
    auto* cmp = app.add_subcommand("compare", "Family comparison table from the code-length formulas");
    cmp->add_option("--users", cmp_users, "Target number of users")->capture_default_str();
    cmp->add_option("--weight", weight, "Code weight hint")->capture_default_str();
    cmp->add_option("--dsc-d", dsc_d, "DSC length term D");
    cmp->add_option("--ms-kb", ms_kb, "MS parameter k_B");
    cmp->add_option("--format", format, "csv or json")->capture_default_str();
    cmp->add_option("--out", out, "Output path, - for stdout")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*gen) return cmd_generate(code_opts, out);
        if (*ver) return cmd_verify(matrix_file);

        if (*ana) {
            const auto params = param_opts.resolve();
            const auto op = make_op(users, weight, parse_power_w(power), length_km, alpha);
            CString text;
            check(csac_analyze_json(params.get(), &op, &text.p));
            write_output(out, text.str());
            return kExitOk;
        }
        if (*swu) {
            const auto params = param_opts.resolve();
            const auto ks = parse_count_range(k_range);
            csac_sweep* raw = nullptr;
            check(csac_sweep_users(params.get(), ks.data(), ks.size(), weight, parse_power_w(power), &raw));
            return emit_sweep(raw, format, out, "users");
        }
        if (*swp) {
            const auto params = param_opts.resolve();
            const auto ps = parse_real_range(p_range, 0.25);
            csac_sweep* raw = nullptr;
            check(csac_sweep_power(params.get(), ps.data(), ps.size(), users, weight, &raw));
            return emit_sweep(raw, format, out, "dBm");
        }
        if (*swd) {
            const auto params = param_opts.resolve();
            const auto ds = parse_real_range(d_range, 1.0);
            csac_sweep* raw = nullptr;
            check(csac_sweep_distance(params.get(), ds.data(), ds.size(), power_dbm(power), alpha, distance_users,
                                      weight, &raw));
            return emit_sweep(raw, format, out, "km");
        }
        if (*sim) {
            const auto params = param_opts.resolve();
            const auto code = code_opts.build();
            std::uint32_t k = 0, l = 0, w = 0;
            check(csac_code_dims(code.get(), &k, &l, &w));
            const double p_w = parse_power_w(power);
            const auto op = make_op(k, w, p_w, length_km, alpha);

            if (interferers == "random") mc.interferers = CSAC_INTERFERERS_RANDOM;
            else if (interferers == "ones") mc.interferers = CSAC_INTERFERERS_ALL_ONES;
            else if (interferers == "zeros") mc.interferers = CSAC_INTERFERERS_ALL_ZEROS;
            else throw UsageError("--interferers must be random, ones or zeros");
            mc.has_noise_variance = noise_variance.has_value();
            mc.noise_variance_a2 = noise_variance.value_or(0.0);

            if (!psd_out.empty()) {
                const std::vector<std::uint8_t> all(k, 1);
                CString psd;
                csac_performance perf{};
                check(csac_analyze(params.get(), &op, &perf));  // validates op before the dump
                const double rx_w = length_km ? csac_dbm_to_watts(csac_watts_to_dbm(p_w) - alpha * *length_km) : p_w;
                check(csac_psd_csv(code.get(), all.data(), all.size(), rx_w, params.get(), 1, &psd.p));
                write_output(psd_out, psd.str());
            }
            CString text;
            check(csac_simulate_json(code.get(), &op, params.get(), &mc, &text.p));
            write_output(out, text.str());
            return kExitOk;
        }
        if (*cmp) {
            csac_family_extras extras{};
            extras.has_dsc_d = dsc_d.has_value();
            extras.dsc_d = dsc_d.value_or(0);
            extras.has_ms_kb = ms_kb.has_value();
            extras.ms_kb = ms_kb.value_or(0);
            CString text;
            check(csac_compare(cmp_users, weight, &extras, parse_format(format), &text.p));
            write_output(out, text.str());
            return kExitOk;
        }
    } catch (const UsageError& e) {
        std::cerr << "csac: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

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

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "csac/formats.hpp"
#include "csac/linkmodel.hpp"
#include "erfc_oracle.hpp"

using namespace csac;

namespace {

OperatingPoint point(std::size_t k, std::size_t w, double p_w) {
    OperatingPoint op;
    op.users = k;
    op.weight = w;
    op.received_power_w = p_w;
    return op;
}

// Receiver model written out with literal default constants, independent of
// the library's parameter plumbing.
struct Reference {
    static constexpr double eta = 0.6, e = 1.602e-19, lambda = 1550e-9, h = 6.626e-34, c = 2.998e8;
    static constexpr double kb = 1.381e-23, t = 300.0, b = 311e6, rl = 1030.0;
    static double r() { return eta * e * lambda / (h * c); }
    static double current(double k, double w, double p) { return r() * p * w / (k * w); }
    static double sigma2(double k, double w, double p) { return e * b * current(k, w, p) + 4.0 * kb * t * b / rl; }
    static double snr(double k, double w, double p) { return std::pow(current(k, w, p), 2) / sigma2(k, w, p); }
};

}  // namespace

TEST_CASE("responsivity") {
    PhysicalParams p;
    CHECK(responsivity(p) == doctest::Approx(0.750).epsilon(0.005));
    CHECK(responsivity(p) == doctest::Approx(Reference::r()).epsilon(1e-14));

    PhysicalParams unit;
    unit.quantum_efficiency = 1.0;
    unit.electron_charge_c = 1.0;
    unit.planck_js = 1.0;
    unit.light_speed_ms = 1.0;
    unit.wavelength_m = 1.0;  // h * f_c = 1 = e
    CHECK(responsivity(unit) == doctest::Approx(1.0).epsilon(1e-15));

    PhysicalParams half = p;
    half.quantum_efficiency /= 2;
    CHECK(responsivity(half) == doctest::Approx(responsivity(p) / 2).epsilon(1e-15));
}

TEST_CASE("dBm conversion") {
    CHECK(dbm_to_watts(-10) == doctest::Approx(1e-4).epsilon(1e-15));
    CHECK(dbm_to_watts(0) == doctest::Approx(1e-3).epsilon(1e-15));
    CHECK(dbm_to_watts(-12) == doctest::Approx(6.31e-5).epsilon(1e-3));
    for (double d = -60; d <= 30; d += 0.37) CHECK(watts_to_dbm(dbm_to_watts(d)) == doctest::Approx(d).epsilon(1e-12));

    CHECK(parse_power("-10dBm") == doctest::Approx(1e-4));
    CHECK(parse_power("-10 dbm") == doctest::Approx(1e-4));
    CHECK(parse_power("2.5e-4W") == 2.5e-4);
    CHECK(parse_power("1e-3 w") == 1e-3);
    CHECK_THROWS_AS(parse_power("-10"), DomainError);
    CHECK_THROWS_AS(parse_power("abcdBm"), DomainError);
    CHECK_THROWS_AS(parse_power("-1W"), DomainError);
    CHECK_THROWS_AS(parse_power("0W"), DomainError);
}

TEST_CASE("photocurrent") {
    PhysicalParams p;
    CHECK(photocurrent(point(90, 4, 1e-4), p) == doctest::Approx(0.750 * 1e-4 * 4 / 360).epsilon(0.005));
    CHECK(photocurrent(point(90, 4, 1e-4), p) == doctest::Approx(Reference::current(90, 4, 1e-4)).epsilon(1e-14));
    CHECK(photocurrent(point(90, 4, 0.0), p) == 0.0);

    PhysicalParams unit;
    unit.quantum_efficiency = 1.0;
    unit.electron_charge_c = unit.planck_js = unit.light_speed_ms = unit.wavelength_m = 1.0;
    CHECK(photocurrent(point(1, 1, 1e-3), unit) == doctest::Approx(1e-3).epsilon(1e-15));

    SUBCASE("depends on the weight only through w/L = 1/K") {
        for (std::size_t k : {1, 7, 60, 200})
            for (std::size_t w = 1; w <= 16; ++w)
                CHECK(photocurrent(point(k, w, 1e-4), p) == doctest::Approx(photocurrent(point(k, 1, 1e-4), p)).epsilon(1e-15));
    }
}

TEST_CASE("noise variance") {
    PhysicalParams p;
    const double thermal = 4 * 1.381e-23 * 300 * 311e6 / 1030;
    CHECK(noise_variance(point(90, 4, 0.0), p) == doctest::Approx(5.00e-15).epsilon(0.01));
    CHECK(noise_variance(point(90, 4, 0.0), p) == doctest::Approx(thermal).epsilon(1e-14));
    CHECK(noise_variance(point(90, 4, 1e-4), p) == doctest::Approx(5.05e-15).epsilon(0.01));
    CHECK(noise_variance(point(90, 4, 1e-4), p) == doctest::Approx(Reference::sigma2(90, 4, 1e-4)).epsilon(1e-14));

    PhysicalParams zero_b = p;
    zero_b.noise_bandwidth_hz = 0.0;
    CHECK(noise_variance(point(90, 4, 1e-4), zero_b) == 0.0);

    SUBCASE("full shot form differs by one more shot term") {
        const auto op = point(30, 4, 1e-4);
        const double shot = p.electron_charge_c * p.noise_bandwidth_hz * photocurrent(op, p);
        CHECK(noise_variance_full_shot(op, p) - noise_variance(op, p) == doctest::Approx(shot).epsilon(1e-9));
    }
    SUBCASE("dark current adds 2 e B I_dark") {
        PhysicalParams dark = p;
        dark.dark_current_a = 5e-9;
        const auto op = point(30, 4, 1e-4);
        CHECK(noise_variance(op, dark) - noise_variance(op, p) ==
              doctest::Approx(2 * 1.602e-19 * 311e6 * 5e-9).epsilon(1e-6));
    }
}

TEST_CASE("snr") {
    PhysicalParams p;
    CHECK(snr(point(90, 4, 1e-4), p) == doctest::Approx(1.38e2).epsilon(0.03));
    CHECK(snr(point(90, 4, 1e-4), p) == doctest::Approx(Reference::snr(90, 4, 1e-4)).epsilon(1e-13));

    SUBCASE("thermal-dominated scaling") {
        const double base = snr(point(90, 4, 1e-5), p);
        CHECK(snr(point(90, 4, 2e-5), p) / base == doctest::Approx(4.0).epsilon(0.01));
        CHECK(base / snr(point(180, 4, 1e-5), p) == doctest::Approx(4.0).epsilon(0.01));
    }
    SUBCASE("quadratic in power when the shot term is zero") {
        PhysicalParams no_shot = p;
        no_shot.electron_charge_c = 1e-250;  // shot term vanishes; scale R back up through eta*e/h
        no_shot.planck_js = p.planck_js * 1e-250 / p.electron_charge_c;
        const double s1 = snr(point(60, 4, 1e-4), no_shot);
        for (double f : {2.0, 3.5, 10.0, 0.1}) CHECK(snr(point(60, 4, f * 1e-4), no_shot) / s1 == doctest::Approx(f * f).epsilon(1e-10));
    }
    SUBCASE("strictly increasing in power, strictly decreasing in users") {
        for (std::size_t k = 1; k < 200; k += 3) CHECK(snr(point(k + 1, 4, 1e-4), p) < snr(point(k, 4, 1e-4), p));
        for (double d = -40; d < 10; d += 0.5)
            CHECK(snr(point(60, 4, dbm_to_watts(d)), p) < snr(point(60, 4, dbm_to_watts(d + 0.5)), p));
    }
}

TEST_CASE("ber_from_snr") {
    CHECK(ber_from_snr(0.0) == 0.5);
    CHECK(ber_from_snr(144.0) == doctest::Approx(9.9e-10).epsilon(0.05));
    CHECK(ber_from_snr(144.0) == doctest::Approx(0.5 * csac_test::erfc_oracle(std::sqrt(18.0))).epsilon(1e-11));
    CHECK(ber_from_snr(8.0) == doctest::Approx(7.86e-2).epsilon(1e-3));
    CHECK(ber_from_snr(8.0) == doctest::Approx(0.5 * csac_test::erfc_oracle(1.0)).epsilon(1e-13));
    CHECK_THROWS_AS(ber_from_snr(-1.0), DomainError);

    double prev = 0.5;
    for (int i = 1; i < 2000; ++i) {
        const double b = ber_from_snr(i * 0.5);
        CHECK(b < prev);
        CHECK(b > 0.0);
        prev = b;
    }
    CHECK(log10_ber_from_snr(144.0) == doctest::Approx(std::log10(ber_from_snr(144.0))).epsilon(1e-12));
    CHECK(log10_ber_from_snr(1e5) < -5000);
    CHECK(std::isfinite(log10_ber_from_snr(1e5)));
}

TEST_CASE("evaluate at K=60, -10 dBm") {
    const auto pt = evaluate(point(60, 4, dbm_to_watts(-10)), PhysicalParams{});
    CHECK(pt.snr == doctest::Approx(3.1e2).epsilon(0.03));
    CHECK(pt.ber <= 1e-15);
    CHECK(pt.log10_ber == doctest::Approx(std::log10(pt.ber)).epsilon(1e-12));
}

TEST_CASE("parameter validation") {
    PhysicalParams p;
    CHECK_NOTHROW(validate(p));
    for (auto key : param_keys()) {
        PhysicalParams bad = p;
        set_param(bad, key, -1.0);
        CHECK_THROWS_AS(validate(bad), DomainError);
    }
    PhysicalParams eta = p;
    eta.quantum_efficiency = 1.2;
    CHECK_THROWS_AS(validate(eta), DomainError);
    CHECK_THROWS_AS(set_param(p, "colour", 1.0), DomainError);

    CHECK_THROWS_AS(validate(point(0, 4, 1e-4)), DomainError);
    CHECK_THROWS_AS(validate(point(4, 0, 1e-4)), DomainError);
    CHECK_THROWS_AS(validate(point(4, 4, 0.0)), DomainError);
    auto op = point(4, 4, 1e-4);
    op.fiber_length_km = -1.0;
    CHECK_THROWS_AS(validate(op), DomainError);
}

TEST_CASE("parameter file") {
    const auto p = parse_params("# link\nload_resistance_ohm = 500\n\nreceiver_temp_k=290 # cold\r\n");
    CHECK(p.load_resistance_ohm == 500.0);
    CHECK(p.receiver_temp_k == 290.0);
    CHECK(p.linewidth_hz == 3.75e12);

    CHECK(parse_params(params_to_text(p)) == p);
    PhysicalParams odd;
    odd.wavelength_m = 1.3e-6 / 3.0;
    CHECK(parse_params(params_to_text(odd)) == odd);

    auto line_of = [](const std::string& text) {
        try {
            parse_params(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return std::size_t{999};
    };
    CHECK(line_of("wavelength_m = 1e-6\nfoo = 1\n") == 2);
    CHECK(line_of("wavelength_m = 1e-6\nwavelength_m = 2e-6\n") == 2);
    CHECK(line_of("wavelength_m 1e-6\n") == 1);
    CHECK(line_of("wavelength_m = abc\n") == 1);
    CHECK(line_of("wavelength_m = 1e-6 2\n") == 1);
    CHECK(line_of("quantum_efficiency = 2\n") == 0);
}

TEST_CASE("sweeps") {
    PhysicalParams p;
    SUBCASE("users") {
        const auto ks = count_range(10, 120);
        const auto s = sweep_users(ks, 4, dbm_to_watts(-10), p);
        REQUIRE(s.rows.size() == 111);
        for (std::size_t i = 0; i < s.rows.size(); ++i) {
            CHECK(s.rows[i].users == ks[i]);
            CHECK(s.rows[i].length == 4 * ks[i]);
            if (i) CHECK(s.rows[i].perf.ber >= s.rows[i - 1].perf.ber);
        }
        const auto x = find_crossing(s, 1e-9);
        REQUIRE(x);
        CHECK(*x >= 80);
        CHECK(*x <= 100);

        const std::vector<std::size_t> one{1};
        CHECK(sweep_users(one, 4, 1e-4, p).rows.size() == 1);
        const std::vector<std::size_t> pair{30, 60};
        const auto two = sweep_users(pair, 4, 1e-4, p);
        CHECK(two.rows[1].perf.ber > two.rows[0].perf.ber);

        const std::vector<std::size_t> unsorted{60, 30};
        CHECK_THROWS_AS(sweep_users(unsorted, 4, 1e-4, p), DomainError);
        CHECK_THROWS_AS(sweep_users(std::vector<std::size_t>{}, 4, 1e-4, p), DomainError);
    }
    SUBCASE("power") {
        const auto ps = real_range(-20, -5, 0.25);
        REQUIRE(ps.size() == 61);
        CHECK(ps.back() == -5.0);
        const auto s = sweep_power(ps, 60, 4, p);
        for (std::size_t i = 1; i < s.rows.size(); ++i) CHECK(s.rows[i].perf.ber <= s.rows[i - 1].perf.ber);
        const auto x = find_crossing(s, 1e-9);
        REQUIRE(x);
        CHECK(std::abs(*x + 12.0) <= 1.5);
        const std::vector<double> two{-20, -10};
        const auto t = sweep_power(two, 60, 4, p);
        CHECK(t.rows[1].perf.ber < t.rows[0].perf.ber);
    }
    SUBCASE("distance") {
        const auto ds = real_range(0, 40, 1);
        const auto s = sweep_distance(ds, -10, 60, 4, p, 0.25);
        CHECK(s.rows.front().power_dbm == -10.0);
        CHECK(s.rows.back().power_dbm == -20.0);
        CHECK(s.rows.front().power_w == doctest::Approx(1e-4).epsilon(1e-14));
        for (std::size_t i = 1; i < s.rows.size(); ++i) CHECK(s.rows[i].perf.ber >= s.rows[i - 1].perf.ber);
        const std::vector<double> three{0, 20, 40};
        const auto t = sweep_distance(three, -10, 60, 4, p, 0.25);
        CHECK(t.rows[0].perf.ber < t.rows[1].perf.ber);
        CHECK(t.rows[1].perf.ber < t.rows[2].perf.ber);
    }
}

TEST_CASE("find_crossing interpolates log10 BER linearly") {
    SweepResult s;
    s.kind = SweepKind::Users;
    for (std::size_t k : {1, 2, 3}) {
        SweepRow r;
        r.users = k;
        r.perf.log10_ber = k == 1 ? -12.0 : k == 2 ? -10.0 : -6.0;
        r.perf.ber = std::pow(10.0, r.perf.log10_ber);
        s.rows.push_back(r);
    }
    CHECK(*find_crossing(s, 1e-9) == doctest::Approx(2.25));
    CHECK(*find_crossing(s, 1e-11) == doctest::Approx(1.5));
    CHECK_FALSE(find_crossing(s, 1e-3).has_value());
    CHECK_THROWS_AS(find_crossing(s, 0.0), DomainError);
}

TEST_CASE("CSV and JSON renderings carry identical numbers") {
    PhysicalParams p;
    p.load_resistance_ohm = 777.0;
    const auto s = sweep_users(count_range(10, 40, 5), 4, 1e-4, p);
    const auto csv = sweep_to_csv(s, p);
    const auto json = nlohmann::json::parse(sweep_to_json(s, p));
    CHECK(csv.find("# load_resistance_ohm = 7.77") != std::string::npos);
    CHECK(json["params"]["load_resistance_ohm"] == 777.0);

    std::istringstream in(csv);
    std::string line;
    std::vector<std::vector<double>> rows;
    std::vector<std::string> header;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> cells;
        std::stringstream ls(line);
        for (std::string c; std::getline(ls, c, ',');) cells.push_back(c);
        if (header.empty()) {
            header = cells;
            continue;
        }
        std::vector<double> v;
        for (auto& c : cells) v.push_back(std::stod(c));
        rows.push_back(v);
    }
    REQUIRE(rows.size() == json["rows"].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t c = 0; c < header.size(); ++c) CHECK(rows[i][c] == json["rows"][i][header[c]].get<double>());
}

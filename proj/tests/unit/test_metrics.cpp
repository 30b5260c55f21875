// SPDX-License-Identifier: Apache-2.0
//
// relayarea: relay efficiency area model for relay-aided cellular planning
// Copyright (C) 2026 The relayarea authors
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

#include "relayarea/errors.hpp"
#include "relayarea/metrics.hpp"
#include "support.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <doctest.h>

#include <cmath>
#include <vector>

using namespace relayarea;
using test_support::default_model;
using test_support::gk;
using test_support::rel_diff;

namespace
{
    CharacteristicDistances make_cd(double d_min, double r_dtx, double r_cov)
    {
        CharacteristicDistances cd;
        cd.d_min = d_min;
        cd.r_dtx = r_dtx;
        cd.r_cov = r_cov;
        cd.x_max = 0.0;
        cd.r_max = 10.0 * r_cov; // disk covering the whole sector
        return cd;
    }

    // Radial extent of the direct-transmission region along direction theta
    double dtx_extent(const CharacteristicDistances &cd, double theta)
    {
        return std::min({cd.d_min / std::cos(theta), cd.r_dtx, sector_edge(theta, cd.r_cov)});
    }

    double p_rtx_oracle(const CharacteristicDistances &cd)
    {
        const double half = gk([&](double t) { return 0.5 * std::pow(dtx_extent(cd, t), 2); }, 0.0, kHalfSector);
        return 1.0 - 2.0 * half / sector_area(cd.r_cov);
    }

    // One configuration per angle case: {D_min, R_DTx, R_cov}
    const std::vector<std::array<double, 3>> kCases = {
        {300.0, 800.0, 1200.0}, // 1
        {750.0, 800.0, 1200.0}, // 2
        {900.0, 1000.0, 1100.0}, // 3
        {980.0, 1000.0, 1100.0}, // 4
    };
}

TEST_CASE("angle cases")
{
    for (std::size_t i = 0; i < kCases.size(); ++i)
    {
        const auto &c = kCases[i];
        const AngleSolution a = angles(make_cd(c[0], c[1], c[2]));
        CHECK(a.case_id == static_cast<int>(i + 1));
        CHECK(a.phi_small <= a.phi_big + 1e-15);
        CHECK(a.phi_big <= kHalfSector + 1e-15);
    }
    const AngleSolution one = angles(make_cd(300.0, 800.0, 1200.0));
    CHECK(one.phi_small == doctest::Approx(kHalfSector));
    CHECK(one.phi_big == doctest::Approx(kHalfSector));

    // X is where the DTx circle meets the hexagon edge
    const AngleSolution three = angles(make_cd(900.0, 1000.0, 1100.0));
    const double y = kSqrt3 * (1100.0 - three.x);
    CHECK(std::hypot(three.x, y) == doctest::Approx(1000.0).epsilon(1e-12));

    CHECK_THROWS_AS(angles(make_cd(100.0, 1200.0, 1000.0)), ConfigError);
}

TEST_CASE("P_RTx is continuous in D_min across the angle cases")
{
    for (const auto &[rd, rc] : {std::pair{800.0, 1200.0}, std::pair{1000.0, 1100.0}})
    {
        double prev = p_rtx(make_cd(1.0, rd, rc));
        for (double d = 2.0; d <= rd; d += 1.0)
        {
            const double p = p_rtx(make_cd(d, rd, rc));
            CHECK(p <= prev + 1e-12);
            CHECK(prev - p < 2e-3);
            prev = p;
        }
    }
}

TEST_CASE("P_RTx against quadrature of the REA indicator")
{
    for (const auto &c : kCases)
    {
        const auto cd = make_cd(c[0], c[1], c[2]);
        CHECK(std::abs(p_rtx(cd) - p_rtx_oracle(cd)) <= 1e-6);
    }
    // Accepted model configurations
    for (double dr : {450.0, 600.0, 900.0, 1150.0})
    {
        CellConfig cfg;
        cfg.relay_distance = dr;
        const auto m = default_model(cfg);
        for (SchemeChoice s : {SchemeChoice{SchemeKind::FullDF, 0}, SchemeChoice{SchemeKind::EOPDF, 0}})
        {
            const ReaResult r = characteristic_distances(m, Direction::Uplink, s);
            if (!r.accepted)
                continue;
            CHECK(std::abs(p_rtx(r.cd) - p_rtx_oracle(r.cd)) <= 1e-6);
        }
    }
}

TEST_CASE("P_RTx against uniform user drops")
{
    const auto m = default_model();
    const ReaResult r = characteristic_distances(m, Direction::Uplink, {SchemeKind::FullDF, 0});
    REQUIRE(r.accepted);
    SectorSampler s(r.cd.r_cov, 99);
    const int n = 1000000;
    int hits = 0;
    for (int i = 0; i < n; ++i)
        hits += rea_contains(r.cd, s.next());
    const double p = p_rtx(r.cd), se = std::sqrt(p * (1.0 - p) / n);
    CHECK(std::abs(static_cast<double>(hits) / n - p) < 4.0 * se);
}

TEST_CASE("DTx averages against 2-D quadrature")
{
    const auto m = default_model();
    const double c = std::expm1(m.config.rate * std::numbers::ln2) * m.config.noise * m.links.direct.k;
    const double a = m.links.direct.exponent;
    for (const auto &cs : kCases)
    {
        const auto cd = make_cd(cs[0], cs[1], cs[2]);
        const double num = gk([&](double t) { return std::pow(dtx_extent(cd, t), a + 2.0) / (a + 2.0); }, 0.0,
                              kHalfSector);
        const double den = gk([&](double t) { return std::pow(dtx_extent(cd, t), 2.0) / 2.0; }, 0.0, kHalfSector);
        CHECK(rel_diff(avg_energy_dtx(cd, m, Direction::Uplink), c * num / den) < 1e-9);
    }
    const double rc = 900.0;
    const double num = gk([&](double t) { return std::pow(sector_edge(t, rc), a + 2.0) / (a + 2.0); }, 0.0, kHalfSector);
    CHECK(rel_diff(avg_energy_dtx_all(m, Direction::Uplink, rc), c * num / (0.5 * sector_area(rc))) < 1e-9);
}

TEST_CASE("Full-DF position integral: polynomial and quadrature forms")
{
    const auto m = default_model();
    REQUIRE(m.links.user_relay.exponent == 4.0);
    const double dr = m.config.relay_distance;
    for (const auto &cs : kCases)
    {
        const auto cd = make_cd(cs[0], cs[1], cs[2]);
        const double poly = fulldf_position_integral(cd, m, InnerIntegral::Polynomial);
        const double quad = fulldf_position_integral(cd, m, InnerIntegral::Quadrature);
        CHECK(rel_diff(poly, quad) <= 1e-9);
        // Independent nested integral over the relayed part of each ray
        auto ray = [&](double t)
        {
            const double lo = dtx_extent(cd, t), hi = sector_edge(t, cd.r_cov), ct = std::cos(t);
            if (hi <= lo)
                return 0.0;
            // Degree-5 polynomial in r: a 6-point Gauss-Legendre rule is exact
            return boost::math::quadrature::gauss<double, 6>::integrate(
                [&](double r) { return std::pow(dr * dr + r * r - 2.0 * dr * r * ct, 2.0) * r; }, lo, hi);
        };
        CHECK(rel_diff(poly, gk(ray, 0.0, kHalfSector, 1e-12)) < 1e-9);
    }

    CellConfig nlos;
    nlos.direct_los = nlos.user_relay_los = false;
    const auto mn = default_model(nlos);
    CHECK_THROWS_AS(fulldf_position_integral(make_cd(300.0, 500.0, 900.0), mn, InnerIntegral::Polynomial),
                    ConfigError);
    CHECK(fulldf_position_integral(make_cd(300.0, 500.0, 900.0), mn) > 0.0);
}

TEST_CASE("Full-DF REA averages against user drops")
{
    const auto m = default_model();
    for (Direction dir : {Direction::Uplink, Direction::Downlink})
    {
        const ReaResult r = characteristic_distances(m, dir, {SchemeKind::FullDF, 0});
        REQUIRE(r.accepted);
        const RelayAverages avg = avg_energy_fulldf(r.cd, m, dir);
        SectorSampler s(r.cd.r_cov, 7);
        double sum = 0.0, sq = 0.0;
        int n = 0;
        while (n < 200000)
        {
            const UserPosition u = s.next();
            if (!rea_contains(r.cd, u))
                continue;
            const SchemeEnergy e = fulldf_energy(m.gains(u), m.config, dir, 0);
            sum += e.total();
            sq += e.total() * e.total();
            ++n;
        }
        const double mean = sum / n, se = std::sqrt((sq / n - mean * mean) / n);
        CHECK(std::abs(mean - (avg.e_source + avg.e_relay)) < 4.0 * se);
    }
}

TEST_CASE("energy report identities")
{
    const auto m = default_model();
    for (SchemeChoice s : {SchemeChoice{SchemeKind::FullDF, 0}, SchemeChoice{SchemeKind::EOPDF, 0}})
        for (Direction dir : {Direction::Uplink, Direction::Downlink})
        {
            const ReaResult r = characteristic_distances(m, dir, s);
            REQUIRE(r.accepted);
            const EnergyReport rep = energy_report(r.cd, m, dir, s);
            CHECK(rep.e_total_avg ==
                  (1.0 - rep.p_rtx) * rep.e_dtx_avg + rep.p_rtx * (rep.e_source_avg + rep.e_relay_avg));
            CHECK(rep.e_per_area == rep.e_total_avg / rep.sector_area);
            CHECK(rep.cost_ratio == doctest::Approx(std::pow(r.cd.r_dtx / r.cd.r_cov, 2)));

            // No coverage extension
            CharacteristicDistances cd0 = r.cd;
            cd0.r_cov = cd0.r_dtx;
            CHECK(energy_report(cd0, m, dir, s).cost_ratio == 1.0);
        }
    CHECK_THROWS_AS(energy_report({}, m, Direction::Uplink, {SchemeKind::DTx, 0}), ConfigError);
}

TEST_CASE("EO-PDF report is reproducible per seed")
{
    const auto m = default_model();
    const SchemeChoice eo{SchemeKind::EOPDF, 0};
    const ReaResult r = characteristic_distances(m, Direction::Uplink, eo);
    REQUIRE(r.accepted);
    const EnergyReport a = energy_report(r.cd, m, Direction::Uplink, eo, {.seed = 5});
    const EnergyReport b = energy_report(r.cd, m, Direction::Uplink, eo, {.seed = 5});
    CHECK(a.e_total_avg == b.e_total_avg);
    CHECK(a.relay_rel_se <= 0.005);
    CHECK(a.relay_samples >= 2000);
}

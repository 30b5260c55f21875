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
#include "relayarea/rea.hpp"
#include "support.hpp"

#include <boost/math/tools/roots.hpp>
#include <doctest.h>

#include <cmath>
#include <random>

using namespace relayarea;
using test_support::default_model;
using test_support::rel_diff;

namespace
{
    template <class F>
    double bisect(F f, double lo, double hi)
    {
        auto tol = [](double a, double b) { return std::abs(b - a) < 1e-11; };
        const auto r = boost::math::tools::bisect(f, lo, hi, tol);
        return 0.5 * (r.first + r.second);
    }

    const SchemeChoice kDf{SchemeKind::FullDF, 0};
    const SchemeChoice kDfRep{SchemeKind::FullDF, 1};
    const SchemeChoice kEo{SchemeKind::EOPDF, 0};
}

TEST_CASE("R_DTx is where direct transmission exhausts the budget")
{
    for (double rate : {2.0, 3.0, 5.0})
        for (Direction dir : {Direction::Uplink, Direction::Downlink})
        {
            CellConfig c;
            c.rate = rate;
            c.bs_power_max = 0.8;
            const auto m = default_model(c);
            const double r = r_dtx(m, dir);
            const SchemeEnergy e = dtx_energy(m.gains({r, 0.3}), c, dir);
            CHECK(rel_diff(e.total(), dir == Direction::Uplink ? c.user_power_max : c.bs_power_max) < 1e-12);
        }
}

TEST_CASE("relaying-condition line: closed form against root of gd = gs")
{
    for (double dr : {300.0, 600.0, 1100.0})
    {
        CellConfig c;
        c.relay_distance = dr;
        const auto m = default_model(c);
        REQUIRE(d_rtx_closed_form(m));
        const double root = bisect([&](double r) { const auto g = m.gains({r, 0.0}); return g.gd - g.gs; }, 1.0, dr);
        CHECK(std::abs(*d_rtx_closed_form(m) - root) <= 1e-6);
        CHECK(std::abs(d_rtx(m, Direction::Uplink) - root) <= 1e-6);
        CHECK(d_rtx(m, Direction::Downlink) == 0.0);
    }

    // Unequal exponents (NLOS links): scanned root
    CellConfig n;
    n.direct_los = false;
    n.user_relay_los = false;
    const auto m = default_model(n);
    CHECK_FALSE(d_rtx_closed_form(m));
    const double d = d_rtx(m, Direction::Uplink);
    const auto g = m.gains({d, 0.0});
    CHECK(rel_diff(g.gd, g.gs) < 1e-9);
}

TEST_CASE("energy boundary against an independent bisection")
{
    for (int alpha : {0, 1})
    {
        const auto m = default_model();
        const Boundary b = d_df_e(m, Direction::Uplink, alpha, 1300.0);
        REQUIRE(b.kind == BoundaryKind::Found);
        auto diff = [&](double r)
        {
            const auto g = m.gains({r, 0.0});
            return dtx_energy(g, m.config, Direction::Uplink).total() -
                   fulldf_energy(g, m.config, Direction::Uplink, alpha).total();
        };
        CHECK(std::abs(b.r - bisect(diff, 200.0, 600.0)) < 1e-6);
    }
    const auto m = default_model();
    CHECK(d_df_e(m, Direction::Uplink, 1, 1300.0).r <= d_df_e(m, Direction::Uplink, 0, 1300.0).r + 1e-9);

    const Boundary eo = d_eo_e(m, Direction::Downlink, 1300.0);
    REQUIRE(eo.kind == BoundaryKind::Found);
    const auto g = m.gains({eo.r, 0.0});
    CHECK(rel_diff(dtx_energy(g, m.config, Direction::Downlink).total(),
                   eopdf_energy(g, m.config, Direction::Downlink).total()) < 1e-7);
}

TEST_CASE("Full-DF outage radius")
{
    for (Direction dir : {Direction::Uplink, Direction::Downlink})
    {
        const auto m = default_model();
        const double ro = r_df_o(m, dir);
        // User at distance ro from the relay, on the far side
        const auto g = m.gains({m.config.relay_distance + ro, 0.0});
        const SchemeEnergy e = fulldf_energy(g, m.config, dir, 0);
        const double budget = dir == Direction::Uplink ? m.config.user_power_max : m.config.relay_power_max;
        CHECK(rel_diff(dir == Direction::Uplink ? e.e_user : e.e_relay, budget) < 1e-12);
    }
}

TEST_CASE("outer circle fit")
{
    const Circle c = outer_circle_fit(1200.0, 900.0);
    CHECK(std::abs(c.center - 1200.0) == doctest::Approx(c.radius));
    const double x1 = 900.0 * std::cos(kHalfSector), y1 = 900.0 * std::sin(kHalfSector);
    CHECK(std::hypot(x1 - c.center, y1) == doctest::Approx(c.radius).epsilon(1e-12));
    CHECK_THROWS_AS(outer_circle_fit(std::cos(kHalfSector), 1.0), std::domain_error);
}

TEST_CASE("coverage radius is the largest hexagon whose outer corners lie in the disk")
{
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> ux(0.0, 1500.0), ur(100.0, 1500.0);
    int tested = 0;
    while (tested < 2000)
    {
        const double x = ux(rng), r = ur(rng);
        const double rc = coverage_radius(x, r);
        if (4.0 * r * r < x * x)
        {
            CHECK(std::isnan(rc));
            continue;
        }
        ++tested;
        auto inside = [&](double px, double py) { return std::hypot(px - x, py) <= r * (1.0 + 1e-12); };
        auto corners_in = [&](double c) { return inside(c, 0.0) && inside(0.75 * c, 0.25 * kSqrt3 * c); };
        CHECK(corners_in(rc));
        CHECK_FALSE(corners_in(rc * (1.0 + 1e-8)));
        // The binding corner is on the circle
        const double d_vertex = std::abs(std::hypot(rc - x, 0.0) - r);
        const double d_mid = std::abs(std::hypot(0.75 * rc - x, 0.25 * kSqrt3 * rc) - r);
        CHECK(std::min(d_vertex, d_mid) < 1e-9 * r);
    }
}

TEST_CASE("characteristic distances at the default configuration")
{
    const auto m = default_model();
    const ReaResult df = characteristic_distances(m, Direction::Uplink, kDf);
    REQUIRE(df.accepted);
    CHECK(df.cd.x_max == m.config.relay_distance);
    CHECK(df.cd.r_cov == doctest::Approx(coverage_radius(df.cd.x_max, df.cd.r_max)));
    CHECK(df.cd.d_min <= m.config.relay_distance);
    CHECK(df.cd.d_min >= df.d_rtx);
    CHECK(df.cd.r_dtx <= df.cd.r_cov);

    const ReaResult eo = characteristic_distances(m, Direction::Uplink, kEo);
    REQUIRE(eo.accepted);
    CHECK(eo.cd.d_min == doctest::Approx(eo.d_rtx));
    // The outer circle passes through the far feasibility edge on the relay axis
    const double edge = eo.cd.r_max + eo.cd.x_max;
    CHECK(eopdf_energy(m.gains({edge * (1.0 - 1e-6), 0.0}), m.config, Direction::Uplink).feasible());
    CHECK_FALSE(eopdf_energy(m.gains({edge * (1.0 + 1e-6), 0.0}), m.config, Direction::Uplink).feasible());
    CHECK_THROWS_AS(characteristic_distances(m, Direction::Uplink, {SchemeKind::DTx, 0}), ConfigError);
}

TEST_CASE("configurations beyond the coverage are rejected")
{
    CellConfig c;
    c.relay_distance = 2500.0;
    const auto m = default_model(c);
    const ReaResult r = characteristic_distances(m, Direction::Uplink, kDf);
    CHECK_FALSE(r.accepted);
    CHECK((r.reason == Rejection::RelayOutsideCell || r.reason == Rejection::CoverageGap));

    CellConfig near;
    near.relay_distance = 100.0;
    const ReaResult n = characteristic_distances(default_model(near), Direction::Uplink, kDf);
    CHECK_FALSE(n.accepted);
    CHECK(n.reason == Rejection::CoverageBelowDirect);
}

TEST_CASE("REA membership")
{
    const auto m = default_model();
    const ReaResult df = characteristic_distances(m, Direction::Uplink, kDf);
    REQUIRE(df.accepted);
    CHECK(rea_contains(df.cd, {m.config.relay_distance, 0.0}));
    CHECK_FALSE(rea_contains(df.cd, {0.0, 0.0}));
    CHECK_FALSE(rea_contains(df.cd, {df.cd.r_cov * 1.01, 0.0}));
    // Just inside R_DTx off the relay axis: direct transmission region
    CHECK_FALSE(rea_contains(df.cd, {df.cd.d_min * 0.9, 0.1}));
    // Beyond R_DTx and inside the sector: relayed
    CHECK(rea_contains(df.cd, {df.cd.r_dtx * 1.01, kHalfSector * 0.99}));
}

TEST_CASE("accepted configurations keep D_min at or before the relay")
{
    int accepted = 0;
    for (double h : {10.0, 20.0, 30.0})
        for (double dr = 150.0; dr <= 1500.0; dr += 50.0)
            for (double rate : {3.0, 5.0})
                for (SchemeChoice s : {kDf, kDfRep, kEo})
                    for (Direction dir : {Direction::Uplink, Direction::Downlink})
                    {
                        CellConfig c;
                        c.relay_height = h;
                        c.relay_distance = dr;
                        c.rate = rate;
                        const ReaResult r = characteristic_distances(default_model(c), dir, s);
                        if (!r.accepted)
                            continue;
                        ++accepted;
                        CHECK(r.cd.d_min <= dr);
                        CHECK(r.cd.d_min >= 0.0);
                        CHECK(r.cd.x_max >= -1e-6 * r.cd.r_max); // fitted centre, rounding only
                        CHECK(r.cd.r_max >= 0.0);
                    }
    CHECK(accepted > 100);
}

TEST_CASE("uplink Full-DF REA lies inside the downlink REA")
{
    for (double dr : {400.0, 600.0, 900.0, 1100.0})
    {
        CellConfig c;
        c.relay_distance = dr;
        const auto m = default_model(c);
        REQUIRE(m.config.relay_power_max >= m.config.user_power_max);
        const ReaResult up = characteristic_distances(m, Direction::Uplink, kDf);
        const ReaResult down = characteristic_distances(m, Direction::Downlink, kDf);
        if (!up.accepted || !down.accepted)
            continue;
        CHECK(down.cd.r_max >= up.cd.r_max);
        SectorSampler s(std::max(up.cd.r_cov, down.cd.r_cov), 5);
        for (int i = 0; i < 20000; ++i)
        {
            const UserPosition u = s.next();
            if (rea_contains(up.cd, u) && u.r <= down.cd.r_cov)
                CHECK(rea_contains(down.cd, u));
        }
    }
}

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

#pragma once

#include "relayarea/geometry.hpp"
#include "relayarea/pathloss.hpp"
#include "relayarea/schemes.hpp"

#include <optional>
#include <string>

namespace relayarea
{
    // Relay efficiency area of one scheme and direction: users with x >= d_min or r > r_dtx, inside the disk
    // centred at (x_max, 0) of radius r_max, inside the sector of radius r_cov
    struct CharacteristicDistances
    {
        double d_min = 0.0;
        double r_dtx = 0.0;
        double x_max = 0.0;
        double r_max = 0.0;
        double r_cov = 0.0;
    };

    enum class BoundaryKind
    {
        Found,
        RelayEverywhere, // relaying cheaper already at the base station
        RelayNowhere     // no crossing up to the search limit
    };

    struct Boundary
    {
        double r = 0.0;
        BoundaryKind kind = BoundaryKind::Found;
    };

    struct Circle
    {
        double center = 0.0; // abscissa, the centre lies on the x-axis
        double radius = 0.0;
    };

    // Direct-transmission feasibility radius
    double r_dtx(const CellModel &model, Direction dir);

    // Relaying-condition line gd = gs on the relay axis; 0 for the downlink
    double d_rtx(const CellModel &model, Direction dir);

    // Closed form of d_rtx, available only when direct and user-relay exponents match
    std::optional<double> d_rtx_closed_form(const CellModel &model);

    // Energy boundary E_DTx = E_relay on the relay axis, searched on [1, r_upper]
    Boundary d_df_e(const CellModel &model, Direction dir, int alpha, double r_upper);
    Boundary d_eo_e(const CellModel &model, Direction dir, double r_upper);

    // Circle centred on the x-axis through (r0, 0) and (r1, pi/6) in polar coordinates
    Circle outer_circle_fit(double r0, double r1);

    // Full-DF outage radius around the relay
    double r_df_o(const CellModel &model, Direction dir);

    // Hexagon radius whose sector is covered by the disk (x_max, r_max); NaN if the disk cannot reach the edge
    double coverage_radius(double x_max, double r_max);

    enum class Rejection
    {
        None,
        RelayLinkOutage,     // relay-BS hop cannot carry the rate
        OuterBoundary,       // relay-aided outage boundary could not be located
        CoverageGap,         // outer disk does not reach the sector edge
        CoverageBelowDirect, // R_cov < R_DTx
        RelayOutsideCell,    // D_r > R_cov
        EnergyBeyondRelay,   // D_min > D_r
        CoverageHole         // part of the sector beyond R_DTx lies outside the outer disk
    };

    const char *to_string(Rejection reason);

    struct ReaResult
    {
        SchemeChoice scheme;
        Direction direction = Direction::Uplink;
        bool accepted = false;
        Rejection reason = Rejection::None;
        CharacteristicDistances cd;

        double d_rtx = 0.0;
        std::optional<Boundary> energy_boundary;
        std::optional<Circle> energy_circle; // Full-DF only, diagnostic
    };

    ReaResult characteristic_distances(const CellModel &model, Direction dir, SchemeChoice scheme);

    bool rea_contains(const CharacteristicDistances &cd, const UserPosition &user);
}

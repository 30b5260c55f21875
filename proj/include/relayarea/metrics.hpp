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

#include "relayarea/pathloss.hpp"
#include "relayarea/rea.hpp"
#include "relayarea/schemes.hpp"

#include <cstddef>
#include <cstdint>

namespace relayarea
{
    // Angles bounding the direct-transmission region on the half sector: the line x = D_min up to phi_small,
    // the DTx circle up to phi_big, the hexagon edge beyond
    struct AngleSolution
    {
        double phi_small = 0.0;
        double phi_big = 0.0;
        double x = 0.0; // abscissa where the DTx circle meets the hexagon edge (0 when it does not)
        int case_id = 0;
    };

    AngleSolution angles(const CharacteristicDistances &cd);

    // Sector fraction covered by relaying for the given inner distance and angles (unclamped)
    double p_rtx_formula(double d_min, double r_dtx, double r_cov, const AngleSolution &a);

    double p_rtx(const CharacteristicDistances &cd);

    // Mean DTx energy over the users outside the REA
    double avg_energy_dtx(const CharacteristicDistances &cd, const CellModel &model, Direction dir);

    // Mean DTx energy when every user of a sector of radius r_cov transmits directly
    double avg_energy_dtx_all(const CellModel &model, Direction dir, double r_cov);

    enum class InnerIntegral
    {
        Auto,      // polynomial antiderivative when the user-relay exponent is 40 dB/decade
        Polynomial,
        Quadrature
    };

    // Integral of r_s^(A_s/10) r dr dtheta over the REA part of the half sector
    double fulldf_position_integral(const CharacteristicDistances &cd, const CellModel &model,
                                    InnerIntegral method = InnerIntegral::Auto);

    struct RelayAverages
    {
        double e_source = 0.0; // user (uplink) or base station (downlink)
        double e_relay = 0.0;
    };

    // Two-hop Full-DF energies averaged over the REA
    RelayAverages avg_energy_fulldf(const CharacteristicDistances &cd, const CellModel &model, Direction dir);

    struct ReportOptions
    {
        std::uint64_t seed = 1;
        std::size_t min_samples = 2000;   // REA samples, EO-PDF only
        std::size_t max_samples = 400000;
        double target_rel_se = 0.005;
    };

    struct EnergyReport
    {
        double r_cov = 0.0;
        double sector_area = 0.0;
        AngleSolution angles;
        double p_rtx = 0.0;
        bool p_rtx_clamped = false;
        double e_dtx_avg = 0.0;
        double e_source_avg = 0.0; // user (uplink) or base station (downlink), REA users
        double e_relay_avg = 0.0;  // REA users
        double e_total_avg = 0.0;
        double e_per_area = 0.0;
        double cost_ratio = 0.0; // (R_DTx / R_cov)^2

        // EO-PDF Monte-Carlo diagnostics
        std::size_t relay_samples = 0;
        std::size_t relay_outage_samples = 0;
        double relay_rel_se = 0.0;
    };

    EnergyReport energy_report(const CharacteristicDistances &cd, const CellModel &model, Direction dir,
                               SchemeChoice scheme, const ReportOptions &opts = {});
}

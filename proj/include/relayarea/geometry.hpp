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

#include <cstdint>
#include <numbers>
#include <optional>
#include <random>

namespace relayarea
{
    inline constexpr double kPi = std::numbers::pi;
    inline constexpr double kSqrt3 = std::numbers::sqrt3;
    inline constexpr double kHalfSector = kPi / 6.0; // half opening angle of one sector

    // User location in polar coordinates around the base station; theta = 0 points at the relay
    struct UserPosition
    {
        double r = 0.0;
        double theta = 0.0;

        double x() const;
        double y() const;
        static UserPosition from_cartesian(double x, double y);
    };

    enum class RelayRegime
    {
        Vicinity, // relay below rooftop
        BsLike    // relay above rooftop
    };

    // Cell, node and link-budget parameters. Powers in W, heights and distances in m, carrier in GHz.
    struct CellConfig
    {
        double bs_height = 30.0;
        double relay_height = 20.0;
        double user_height = 1.5;
        double relay_distance = 600.0;
        double user_power_max = 0.5;
        double relay_power_max = 1.0;
        double bs_power_max = 0.5;
        double noise = 5e-13;
        double carrier_ghz = 2.6;
        double rate = 3.0; // bits/s/Hz

        bool direct_los = true;
        bool user_relay_los = true;
        bool relay_bs_los = true;

        double regime_threshold = 20.0;
        std::optional<RelayRegime> regime_override;

        RelayRegime regime() const;

        // Throws ConfigError on the first violated constraint
        void validate() const;
    };

    // Fold an arbitrary angle into the reference sector [-pi/6, pi/6]
    double fold_angle(double theta);

    double user_relay_distance(const UserPosition &user, double relay_distance);

    // Sector edge distance along direction theta for a hexagon of radius r_cov
    double sector_edge(double theta, double r_cov);

    bool sector_contains(const UserPosition &user, double r_cov);

    double sector_area(double r_cov);

    // Uniform user drops over one sector, by rejection from the circumscribing wedge
    class SectorSampler
    {
    public:
        SectorSampler(double r_cov, std::uint64_t seed);
        UserPosition next();

    private:
        double uniform();

        double r_cov_;
        std::mt19937_64 engine_;
    };

    UserPosition sample_uniform(double r_cov, std::uint64_t seed);
}

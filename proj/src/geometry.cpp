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

#include "relayarea/geometry.hpp"
#include "relayarea/errors.hpp"

#include <cmath>
#include <string>

namespace relayarea
{
    double UserPosition::x() const { return r * std::cos(theta); }
    double UserPosition::y() const { return r * std::sin(theta); }

    UserPosition UserPosition::from_cartesian(double x, double y)
    {
        return {std::hypot(x, y), std::atan2(y, x)};
    }

    RelayRegime CellConfig::regime() const
    {
        if (regime_override)
            return *regime_override;
        return relay_height <= regime_threshold ? RelayRegime::Vicinity : RelayRegime::BsLike;
    }

    void CellConfig::validate() const
    {
        auto require = [](bool ok, const std::string &msg)
        {
            if (!ok)
                throw ConfigError(msg);
        };
        require(bs_height > 1.0, "bs_height must exceed 1 m");
        require(relay_height > 1.0, "relay_height must exceed 1 m");
        require(user_height > 1.0, "user_height must exceed 1 m");
        require(relay_distance > 0.0, "relay_distance must be positive");
        require(user_power_max > 0.0, "user_power_max must be positive");
        require(relay_power_max > 0.0, "relay_power_max must be positive");
        require(bs_power_max > 0.0, "bs_power_max must be positive");
        require(noise > 0.0, "noise must be positive");
        require(carrier_ghz > 0.0, "carrier_ghz must be positive");
        require(rate > 0.0, "rate must be positive");
        require(regime_threshold > 0.0, "regime_threshold must be positive");
        require(!(direct_los && !user_relay_los), "direct link LOS with user-relay link NLOS is not supported");
        require(std::isfinite(bs_height + relay_height + user_height + relay_distance + user_power_max +
                              relay_power_max + bs_power_max + noise + carrier_ghz + rate),
                "non-finite configuration value");
    }

    double fold_angle(double theta)
    {
        const double period = kPi / 3.0;
        double t = std::fmod(theta + kHalfSector, period);
        if (t < 0.0)
            t += period;
        return t - kHalfSector;
    }

    double user_relay_distance(const UserPosition &user, double relay_distance)
    {
        const double d2 = relay_distance * relay_distance + user.r * user.r -
                          2.0 * relay_distance * user.r * std::cos(user.theta);
        return std::sqrt(std::max(0.0, d2));
    }

    double sector_edge(double theta, double r_cov)
    {
        const double t = std::abs(theta);
        return kSqrt3 * r_cov / (std::sin(t) + kSqrt3 * std::cos(t));
    }

    bool sector_contains(const UserPosition &user, double r_cov)
    {
        constexpr double rel = 1e-12;
        if (std::abs(user.theta) > kHalfSector * (1.0 + rel))
            return false;
        return user.r <= sector_edge(user.theta, r_cov) * (1.0 + rel);
    }

    double sector_area(double r_cov) { return kSqrt3 / 4.0 * r_cov * r_cov; }

    SectorSampler::SectorSampler(double r_cov, std::uint64_t seed) : r_cov_(r_cov), engine_(seed) {}

    double SectorSampler::uniform()
    {
        // 53 random mantissa bits, identical on every platform
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    UserPosition SectorSampler::next()
    {
        while (true)
        {
            const double r = r_cov_ * std::sqrt(uniform());
            const double theta = (2.0 * uniform() - 1.0) * kHalfSector;
            if (r <= sector_edge(theta, r_cov_))
                return {r, theta};
        }
    }

    UserPosition sample_uniform(double r_cov, std::uint64_t seed)
    {
        SectorSampler s(r_cov, seed);
        return s.next();
    }
}

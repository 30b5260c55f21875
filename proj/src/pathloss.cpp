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

#include "relayarea/pathloss.hpp"
#include "relayarea/errors.hpp"

#include <cmath>
#include <stdexcept>

namespace relayarea
{
    namespace
    {
        void check_domain(double distance, double h_tx, double h_rx, double fc_ghz)
        {
            if (!(distance > 0.0))
                throw std::domain_error("path loss: distance must be positive");
            if (!(h_tx > 1.0) || !(h_rx > 1.0))
                throw std::domain_error("path loss: antenna heights must exceed 1 m");
            if (!(fc_ghz > 0.0))
                throw std::domain_error("path loss: carrier frequency must be positive");
        }
    }

    double pathloss_db(const PathLossScenario &s, double distance, double h_tx, double h_rx, double fc_ghz)
    {
        check_domain(distance, h_tx, h_rx, fc_ghz);
        return s.A * std::log10(distance) + s.B + s.C * std::log10(fc_ghz / 5.0) +
               s.D * std::log10((h_tx - 1.0) * (h_rx - 1.0));
    }

    double gain_linear(const PathLossScenario &s, double distance, double h_tx, double h_rx, double fc_ghz)
    {
        return std::pow(10.0, -pathloss_db(s, distance, h_tx, h_rx, fc_ghz) / 10.0);
    }

    double k_factor(const PathLossScenario &s, double h_tx, double h_rx, double fc_ghz)
    {
        check_domain(1.0, h_tx, h_rx, fc_ghz);
        return std::pow(10.0, s.B / 10.0) * std::pow(fc_ghz / 5.0, s.C / 10.0) *
               std::pow((h_tx - 1.0) * (h_rx - 1.0), s.D / 10.0);
    }

    const char *to_string(LinkRole role)
    {
        switch (role)
        {
        case LinkRole::Direct:
            return "direct";
        case LinkRole::UserRelay:
            return "user-relay";
        case LinkRole::RelayBs:
            return "relay-bs";
        }
        return "?";
    }

    const char *to_string(RelayRegime regime)
    {
        return regime == RelayRegime::Vicinity ? "vicinity" : "bs-like";
    }

    void ScenarioTable::add(const PathLossScenario &scenario)
    {
        if (!(scenario.A > 0.0))
            throw ConfigError("scenario " + scenario.name + ": A must be positive");
        for (auto &s : scenarios_)
            if (s.name == scenario.name)
            {
                s = scenario;
                return;
            }
        scenarios_.push_back(scenario);
    }

    void ScenarioTable::assign(LinkRole role, RelayRegime regime, bool los, const std::string &scenario_name)
    {
        if (!find(scenario_name))
            throw ConfigError("unknown scenario '" + scenario_name + "'");
        assignments_[{role, regime, los}] = scenario_name;
    }

    const PathLossScenario *ScenarioTable::find(const std::string &name) const
    {
        for (const auto &s : scenarios_)
            if (s.name == name)
                return &s;
        return nullptr;
    }

    bool ScenarioTable::has(LinkRole role, RelayRegime regime, bool los) const
    {
        return assignments_.count({role, regime, los}) > 0;
    }

    const PathLossScenario &ScenarioTable::resolve(LinkRole role, RelayRegime regime, bool los) const
    {
        auto it = assignments_.find({role, regime, los});
        if (it == assignments_.end())
            throw ConfigError(std::string("no scenario assigned to ") + to_string(role) + " link, " +
                              to_string(regime) + " relay, " + (los ? "LOS" : "NLOS"));
        return *find(it->second);
    }

    ScenarioTable ScenarioTable::winner2_default()
    {
        ScenarioTable t;
        // Post-breakpoint LOS forms; C2 NLOS evaluated at a 30 m base station; B1 NLOS uses the hexagonal
        // street-grid approximation; B5c below its (very long) breakpoint.
        t.add({"B1-LOS", 40.0, 9.45, 2.7, -17.3, true});
        t.add({"B1-NLOS", 36.7, 40.8732, 26.0, 0.0, false});
        t.add({"C2-LOS", 40.0, 13.47, 6.0, -14.0, true});
        t.add({"C2-NLOS", 35.2249, 43.0716, 23.0, 0.0, false});
        t.add({"B5c-LOS", 19.2, 41.0, 20.0, 0.0, true});
        t.add({"FS", 20.0, 46.4, 20.0, 0.0, true});

        for (auto regime : {RelayRegime::Vicinity, RelayRegime::BsLike})
        {
            t.assign(LinkRole::Direct, regime, true, "C2-LOS");
            t.assign(LinkRole::Direct, regime, false, "C2-NLOS");
        }
        t.assign(LinkRole::UserRelay, RelayRegime::Vicinity, true, "B1-LOS");
        t.assign(LinkRole::UserRelay, RelayRegime::Vicinity, false, "B1-NLOS");
        t.assign(LinkRole::UserRelay, RelayRegime::BsLike, true, "C2-LOS");
        t.assign(LinkRole::UserRelay, RelayRegime::BsLike, false, "C2-NLOS");
        t.assign(LinkRole::RelayBs, RelayRegime::Vicinity, true, "B5c-LOS");
        t.assign(LinkRole::RelayBs, RelayRegime::BsLike, true, "FS");
        return t;
    }

    double LinkModel::gain(double distance) const
    {
        const double d = std::max(distance, kMinLinkDistance);
        return 1.0 / (k * std::pow(d, exponent));
    }

    namespace
    {
        LinkModel make_link(const PathLossScenario &s, double h_tx, double h_rx, double fc)
        {
            return {s, k_factor(s, h_tx, h_rx, fc), s.A / 10.0};
        }
    }

    CellLinks resolve_links(const CellConfig &cfg, const ScenarioTable &table)
    {
        const RelayRegime regime = cfg.regime();
        const auto &sd = table.resolve(LinkRole::Direct, regime, cfg.direct_los);
        const auto &ss = table.resolve(LinkRole::UserRelay, regime, cfg.user_relay_los);
        const auto &sr = table.resolve(LinkRole::RelayBs, regime, cfg.relay_bs_los);
        return {make_link(sd, cfg.bs_height, cfg.user_height, cfg.carrier_ghz),
                make_link(ss, cfg.relay_height, cfg.user_height, cfg.carrier_ghz),
                make_link(sr, cfg.bs_height, cfg.relay_height, cfg.carrier_ghz)};
    }

    LinkGains link_gains(const CellLinks &links, double relay_distance, const UserPosition &user)
    {
        return {links.direct.gain(user.r), links.user_relay.gain(user_relay_distance(user, relay_distance)),
                links.relay_bs.gain(relay_distance)};
    }

    LinkGains link_gains(const CellConfig &cfg, const UserPosition &user, const ScenarioTable &table)
    {
        return link_gains(resolve_links(cfg, table), cfg.relay_distance, user);
    }

    CellModel CellModel::build(const CellConfig &cfg, const ScenarioTable &table)
    {
        cfg.validate();
        return {cfg, resolve_links(cfg, table)};
    }
}

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

#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace relayarea
{
    // Single-slope path loss: A*log10(d) + B + C*log10(fc/5) + D*log10((h_tx-1)(h_rx-1)) [dB]
    struct PathLossScenario
    {
        std::string name;
        double A = 0.0;
        double B = 0.0;
        double C = 0.0;
        double D = 0.0;
        bool los = true;
    };

    double pathloss_db(const PathLossScenario &s, double distance, double h_tx, double h_rx, double fc_ghz);
    double gain_linear(const PathLossScenario &s, double distance, double h_tx, double h_rx, double fc_ghz);

    // K such that the linear gain equals 1 / (K * d^(A/10))
    double k_factor(const PathLossScenario &s, double h_tx, double h_rx, double fc_ghz);

    enum class LinkRole
    {
        Direct,    // user - base station
        UserRelay, // user - relay
        RelayBs    // relay - base station
    };

    const char *to_string(LinkRole role);
    const char *to_string(RelayRegime regime);

    class ScenarioTable
    {
    public:
        // Adds or replaces a scenario by name
        void add(const PathLossScenario &scenario);
        void assign(LinkRole role, RelayRegime regime, bool los, const std::string &scenario_name);

        // Throws ConfigError if no scenario is assigned
        const PathLossScenario &resolve(LinkRole role, RelayRegime regime, bool los) const;
        bool has(LinkRole role, RelayRegime regime, bool los) const;

        const std::vector<PathLossScenario> &scenarios() const { return scenarios_; }
        const std::map<std::tuple<LinkRole, RelayRegime, bool>, std::string> &assignments() const
        {
            return assignments_;
        }

        // WINNER II single-slope defaults for the direct, user-relay and relay-BS links
        static ScenarioTable winner2_default();

    private:
        const PathLossScenario *find(const std::string &name) const;

        std::vector<PathLossScenario> scenarios_;
        std::map<std::tuple<LinkRole, RelayRegime, bool>, std::string> assignments_;
    };

    struct LinkGains
    {
        double gd = 0.0; // user - base station
        double gs = 0.0; // user - relay
        double gr = 0.0; // relay - base station
    };

    // Distances below this are clamped before evaluating the model
    inline constexpr double kMinLinkDistance = 1.0;

    // One link with the height and frequency terms folded into K
    struct LinkModel
    {
        PathLossScenario scenario;
        double k = 1.0;
        double exponent = 0.0; // A / 10

        double gain(double distance) const;
    };

    struct CellLinks
    {
        LinkModel direct;
        LinkModel user_relay;
        LinkModel relay_bs;
    };

    CellLinks resolve_links(const CellConfig &cfg, const ScenarioTable &table);

    LinkGains link_gains(const CellConfig &cfg, const UserPosition &user, const ScenarioTable &table);
    LinkGains link_gains(const CellLinks &links, double relay_distance, const UserPosition &user);

    // Validated configuration together with its resolved links
    struct CellModel
    {
        CellConfig config;
        CellLinks links;

        static CellModel build(const CellConfig &cfg, const ScenarioTable &table);
        LinkGains gains(const UserPosition &user) const { return link_gains(links, config.relay_distance, user); }
    };
}

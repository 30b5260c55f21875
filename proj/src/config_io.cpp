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

#include "relayarea/config_io.hpp"
#include "relayarea/errors.hpp"

#include <fstream>
#include <set>

namespace relayarea
{
    json load_json_file(const std::string &path)
    {
        std::ifstream in(path);
        if (!in)
            throw ConfigError("cannot open '" + path + "'");
        try
        {
            return json::parse(in);
        }
        catch (const json::exception &e)
        {
            throw ConfigError("'" + path + "': " + e.what());
        }
    }

    namespace
    {
        const std::set<std::string> kCellKeys = {
            "bs_height_m", "relay_height_m", "user_height_m", "relay_distance_m", "user_power_max_w",
            "relay_power_max_w", "bs_power_max_w", "noise_w", "carrier_ghz", "rate_bps_hz", "direct_los",
            "user_relay_los", "relay_bs_los", "regime_threshold_m", "regime"};

        template <class T>
        void read(const json &j, const char *key, T &out)
        {
            if (!j.contains(key))
                return;
            try
            {
                out = j.at(key).get<T>();
            }
            catch (const json::exception &)
            {
                throw ConfigError(std::string("invalid value for '") + key + "'");
            }
        }

        LinkRole parse_role(const std::string &s)
        {
            if (s == "direct")
                return LinkRole::Direct;
            if (s == "user-relay")
                return LinkRole::UserRelay;
            if (s == "relay-bs")
                return LinkRole::RelayBs;
            throw ConfigError("unknown link role '" + s + "'");
        }
    }

    CellConfig cell_config_from_json(const json &j)
    {
        if (!j.is_object())
            throw ConfigError("cell configuration must be an object");
        for (const auto &item : j.items())
            if (!kCellKeys.count(item.key()))
                throw ConfigError("unknown cell configuration key '" + item.key() + "'");
        CellConfig c;
        read(j, "bs_height_m", c.bs_height);
        read(j, "relay_height_m", c.relay_height);
        read(j, "user_height_m", c.user_height);
        read(j, "relay_distance_m", c.relay_distance);
        read(j, "user_power_max_w", c.user_power_max);
        read(j, "relay_power_max_w", c.relay_power_max);
        read(j, "bs_power_max_w", c.bs_power_max);
        read(j, "noise_w", c.noise);
        read(j, "carrier_ghz", c.carrier_ghz);
        read(j, "rate_bps_hz", c.rate);
        read(j, "direct_los", c.direct_los);
        read(j, "user_relay_los", c.user_relay_los);
        read(j, "relay_bs_los", c.relay_bs_los);
        read(j, "regime_threshold_m", c.regime_threshold);
        std::string regime = "auto";
        read(j, "regime", regime);
        if (regime == "vicinity")
            c.regime_override = RelayRegime::Vicinity;
        else if (regime == "bs-like")
            c.regime_override = RelayRegime::BsLike;
        else if (regime != "auto")
            throw ConfigError("regime must be auto, vicinity or bs-like");
        c.validate();
        return c;
    }

    json to_json(const CellConfig &c)
    {
        json j;
        j["bs_height_m"] = c.bs_height;
        j["relay_height_m"] = c.relay_height;
        j["user_height_m"] = c.user_height;
        j["relay_distance_m"] = c.relay_distance;
        j["user_power_max_w"] = c.user_power_max;
        j["relay_power_max_w"] = c.relay_power_max;
        j["bs_power_max_w"] = c.bs_power_max;
        j["noise_w"] = c.noise;
        j["carrier_ghz"] = c.carrier_ghz;
        j["rate_bps_hz"] = c.rate;
        j["direct_los"] = c.direct_los;
        j["user_relay_los"] = c.user_relay_los;
        j["relay_bs_los"] = c.relay_bs_los;
        j["regime_threshold_m"] = c.regime_threshold;
        j["regime"] = c.regime_override ? to_string(*c.regime_override) : "auto";
        return j;
    }

    CellConfig load_cell_config(const std::string &path)
    {
        try
        {
            return cell_config_from_json(load_json_file(path));
        }
        catch (const ConfigError &e)
        {
            throw ConfigError("'" + path + "': " + e.what());
        }
    }

    ScenarioTable scenario_table_from_json(const json &j)
    {
        if (!j.is_object() || !j.contains("scenarios") || !j.contains("assignments"))
            throw ConfigError("scenario table needs 'scenarios' and 'assignments'");
        ScenarioTable t;
        std::set<std::string> names;
        try
        {
            for (const auto &s : j.at("scenarios"))
            {
                PathLossScenario sc{s.at("name").get<std::string>(), s.at("A").get<double>(), s.at("B").get<double>(),
                                    s.at("C").get<double>(), s.at("D").get<double>(), s.at("los").get<bool>()};
                if (!names.insert(sc.name).second)
                    throw ConfigError("duplicate scenario name '" + sc.name + "'");
                t.add(sc);
            }
            for (const auto &a : j.at("assignments"))
            {
                const LinkRole role = parse_role(a.at("link").get<std::string>());
                const std::string regime = a.at("regime").get<std::string>();
                const bool los = a.at("los").get<bool>();
                const std::string name = a.at("scenario").get<std::string>();
                if (regime == "vicinity" || regime == "any")
                    t.assign(role, RelayRegime::Vicinity, los, name);
                if (regime == "bs-like" || regime == "any")
                    t.assign(role, RelayRegime::BsLike, los, name);
                if (regime != "vicinity" && regime != "bs-like" && regime != "any")
                    throw ConfigError("unknown regime '" + regime + "'");
            }
        }
        catch (const json::exception &e)
        {
            throw ConfigError(std::string("malformed scenario table: ") + e.what());
        }
        return t;
    }

    json to_json(const ScenarioTable &table)
    {
        json j;
        j["scenarios"] = json::array();
        for (const auto &s : table.scenarios())
            j["scenarios"].push_back({{"name", s.name}, {"A", s.A}, {"B", s.B}, {"C", s.C}, {"D", s.D}, {"los", s.los}});
        j["assignments"] = json::array();
        for (const auto &[key, name] : table.assignments())
        {
            const auto &[role, regime, los] = key;
            j["assignments"].push_back(
                {{"link", to_string(role)}, {"regime", to_string(regime)}, {"los", los}, {"scenario", name}});
        }
        return j;
    }

    ScenarioTable load_scenario_table(const std::string &path)
    {
        try
        {
            return scenario_table_from_json(load_json_file(path));
        }
        catch (const ConfigError &e)
        {
            throw ConfigError("'" + path + "': " + e.what());
        }
    }
}

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

#include <json.hpp>

#include <string>

namespace relayarea
{
    using json = nlohmann::ordered_json;

    // Cell configuration. Keys (all optional, defaults as in CellConfig):
    //   bs_height_m, relay_height_m, user_height_m, relay_distance_m,
    //   user_power_max_w, relay_power_max_w, bs_power_max_w, noise_w, carrier_ghz, rate_bps_hz,
    //   direct_los, user_relay_los, relay_bs_los, regime_threshold_m, regime ("auto" | "vicinity" | "bs-like")
    CellConfig cell_config_from_json(const json &j);
    json to_json(const CellConfig &cfg);
    CellConfig load_cell_config(const std::string &path);

    // Scenario table:
    //   {"scenarios": [{"name", "A", "B", "C", "D", "los"}, ...],
    //    "assignments": [{"link": "direct"|"user-relay"|"relay-bs", "regime": "vicinity"|"bs-like"|"any",
    //                     "los": bool, "scenario": name}, ...]}
    ScenarioTable scenario_table_from_json(const json &j);
    json to_json(const ScenarioTable &table);
    ScenarioTable load_scenario_table(const std::string &path);

    json load_json_file(const std::string &path);
}

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

#include "relayarea/config_io.hpp"
#include "relayarea/metrics.hpp"
#include "relayarea/montecarlo.hpp"
#include "relayarea/rea.hpp"
#include "relayarea/table.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace relayarea
{
    enum class SweepParameter
    {
        RelayDistance,
        RelayHeight,
        Rate,
        Beta
    };

    std::string to_string(SweepParameter p);
    SweepParameter parse_sweep_parameter(const std::string &text);

    struct SweepSpec
    {
        CellConfig cell;
        SweepParameter parameter = SweepParameter::RelayDistance;
        std::vector<double> values;
        std::vector<SchemeChoice> schemes{{SchemeKind::FullDF, 0}};
        Direction direction = Direction::Uplink;
        double beta = 1.0; // coverage extension when beta is not the swept parameter
        std::uint64_t seed = 1;
        std::vector<std::string> columns; // empty: all
        bool trim_beyond_coverage = false; // drop trailing relay distances beyond the maximal coverage
        unsigned threads = 0;

        void validate() const;
    };

    // start, start + step, ... while <= stop (with a half-step tolerance against rounding)
    std::vector<double> sweep_grid(double start, double stop, double step);

    // Keys: "cell" (object) or "cell_file" (path), "parameter" (relay_distance_m | relay_height_m |
    // rate_bps_hz | beta), "values" or "start"/"stop"/"step" (stop "auto" for relay distance),
    // "schemes", "alpha", "direction", "beta", "seed", "columns"
    SweepSpec sweep_spec_from_json(const json &j, const std::string &base_dir = ".");

    Table run_sweep(const SweepSpec &spec, const ScenarioTable &table);

    // Single-configuration tables used by the CLI and the bindings
    Table rea_table(const std::vector<ReaResult> &results, const CellConfig &cfg);
    Table metrics_table(const std::vector<std::pair<ReaResult, EnergyReport>> &rows);
    Table simulation_table(const std::vector<std::pair<SchemeChoice, SimResult>> &rows, Direction dir);
}

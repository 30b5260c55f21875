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

#include <span>
#include <string>

namespace relayarea
{
    enum class Direction
    {
        Uplink,
        Downlink
    };

    enum class SchemeKind
    {
        DTx,
        FullDF,
        EOPDF
    };

    struct SchemeChoice
    {
        SchemeKind kind = SchemeKind::DTx;
        int alpha = 0; // Full-DF only: 0 two-hop, 1 repetition coded

        bool operator==(const SchemeChoice &) const = default;
    };

    std::string to_string(Direction dir);
    std::string to_string(SchemeChoice scheme);
    Direction parse_direction(const std::string &text);
    SchemeKind parse_scheme_kind(const std::string &text);

    enum class Outcome
    {
        Feasible,
        Outage,
        NumericalFailure
    };

    const char *to_string(Outcome outcome);

    struct FullDfAllocation
    {
        double p_source = 0.0; // first hop transmit power
        double p_relay = 0.0;  // second hop transmit power
        bool relay_clamped = false;
    };

    struct EoPdfAllocation
    {
        int subscheme = 0;
        double rate_relayed = 0.0; // decoded by the relay in phase 1
        double rate_direct = 0.0;  // sent on the direct link only
        double p1 = 0.0, p2 = 0.0, p3 = 0.0;
        double p_relay = 0.0;
    };

    // Transmit energies per channel use. For an outage they hold the energy the scheme would need, which is
    // what the boundary searches of the REA module operate on; feasible() tells whether budgets are met.
    struct SchemeEnergy
    {
        SchemeChoice scheme;
        Outcome outcome = Outcome::Outage;
        double e_user = 0.0;
        double e_relay = 0.0;
        double e_bs = 0.0;
        double p_direct = 0.0; // DTx power
        FullDfAllocation fulldf;
        EoPdfAllocation eopdf;

        bool feasible() const { return outcome == Outcome::Feasible; }
        double total() const { return e_user + e_relay + e_bs; }
    };

    // Source, relay and destination as seen by a relaying scheme in one direction
    struct RelayChannel
    {
        double g_sd = 0.0;
        double g_sr = 0.0;
        double g_rd = 0.0;
        double noise = 0.0;
        double rate = 0.0;
        double p_source_max = 0.0;
        double p_relay_max = 0.0;
    };

    RelayChannel relay_channel(const LinkGains &gains, const CellConfig &cfg, Direction dir);

    SchemeEnergy dtx_energy(const LinkGains &gains, const CellConfig &cfg, Direction dir);
    SchemeEnergy fulldf_energy(const LinkGains &gains, const CellConfig &cfg, Direction dir, int alpha);
    SchemeEnergy eopdf_energy(const LinkGains &gains, const CellConfig &cfg, Direction dir);
    SchemeEnergy evaluate_scheme(SchemeChoice scheme, const LinkGains &gains, const CellConfig &cfg, Direction dir);

    struct EoPdfSolution
    {
        Outcome outcome = Outcome::Outage;
        double e_source = 0.0;
        double e_relay = 0.0;
        double violation = 0.0; // budget excess in W at the returned allocation
        EoPdfAllocation allocation;
    };

    // Minimum-energy partial decode-forward over sub-schemes 1..3 (subscheme = 0) or one of them
    EoPdfSolution solve_eopdf(const RelayChannel &ch, int subscheme = 0);

    struct Decision
    {
        bool outage = true;
        bool numerical_failure = false; // some scheme of the set failed to solve and was skipped
        SchemeEnergy energy;
    };

    // Feasible scheme of least total energy; ties go to the earlier entry of the set
    Decision best_scheme(const LinkGains &gains, const CellConfig &cfg, Direction dir,
                         std::span<const SchemeChoice> schemes);
}

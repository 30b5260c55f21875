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

#include "relayarea/metrics.hpp"
#include "relayarea/pathloss.hpp"
#include "relayarea/rea.hpp"
#include "relayarea/schemes.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace relayarea
{
    struct Estimate
    {
        double value = 0.0;
        double std_error = 0.0;
    };

    struct SimOptions
    {
        std::size_t samples = 100000;
        std::uint64_t seed = 1;
        double band_fraction = 0.05;     // mismatch band half-width around x = D_min, fraction of R_cov
        std::optional<double> r_cov;     // defaults to the maximal coverage of the relaying scheme
        unsigned threads = 0;            // 0: hardware concurrency
        std::size_t chunk = 8192;        // samples per seeded sub-stream
    };

    struct SimResult
    {
        std::size_t n_samples = 0;
        double r_cov = 0.0;
        Estimate p_rtx_hat;
        Estimate e_total_hat; // over served users
        double outage_rate = 0.0;
        std::size_t numerical_failures = 0;

        // Comparison with the area model (present when the scheme set contains a relaying scheme)
        bool has_model = false;
        double p_rtx_model = 0.0;
        double e_total_model = 0.0;
        double decision_mismatch_rate = 0.0;
        double energy_model_error = 0.0; // |model - empirical| / empirical
        double mismatch_near_line = 0.0; // share of mismatches within the band around x = D_min
    };

    // Uniform user drops with a per-position best-scheme decision. Chunk k of the sample stream is drawn
    // from its own generator seeded by (seed, k), and chunks are reduced in index order, so the result does
    // not depend on the thread count.
    SimResult simulate(const CellModel &model, Direction dir, const std::vector<SchemeChoice> &schemes,
                       const SimOptions &opts = {});

    // Seed of sub-stream k
    std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t k);
}

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

#include "relayarea/montecarlo.hpp"
#include "relayarea/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

namespace relayarea
{
    std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t k)
    {
        // splitmix64 finaliser over (seed, k)
        std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (k + 1);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    namespace
    {
        struct Tally
        {
            std::size_t n = 0, rtx = 0, served = 0, outage = 0, failures = 0;
            std::size_t mismatch = 0, mismatch_near = 0;
            double e_sum = 0.0, e_sq = 0.0;
        };

        struct Context
        {
            const CellModel *model;
            Direction dir;
            const std::vector<SchemeChoice> *schemes;
            const CharacteristicDistances *cd; // null without a relaying scheme
            double r_cov;
            double band;
        };

        Tally run_chunk(const Context &ctx, std::uint64_t seed, std::size_t count)
        {
            Tally t;
            SectorSampler sampler(ctx.r_cov, seed);
            for (std::size_t i = 0; i < count; ++i)
            {
                const UserPosition u = sampler.next();
                const Decision d = best_scheme(ctx.model->gains(u), ctx.model->config, ctx.dir, *ctx.schemes);
                ++t.n;
                if (d.numerical_failure)
                    ++t.failures;
                const bool rtx = !d.outage && d.energy.scheme.kind != SchemeKind::DTx;
                if (d.outage)
                    ++t.outage;
                else
                {
                    ++t.served;
                    const double e = d.energy.total();
                    t.e_sum += e;
                    t.e_sq += e * e;
                }
                if (rtx)
                    ++t.rtx;
                if (ctx.cd && rea_contains(*ctx.cd, u) != rtx)
                {
                    ++t.mismatch;
                    if (std::abs(u.x() - ctx.cd->d_min) <= ctx.band)
                        ++t.mismatch_near;
                }
            }
            return t;
        }
    }

    SimResult simulate(const CellModel &model, Direction dir, const std::vector<SchemeChoice> &schemes,
                       const SimOptions &opts)
    {
        if (opts.samples == 0)
            throw ConfigError("simulate: at least one sample is required");
        if (schemes.empty())
            throw ConfigError("simulate: scheme set is empty");

        SimResult res;
        std::optional<CharacteristicDistances> cd;
        auto relay = std::find_if(schemes.begin(), schemes.end(),
                                  [](const SchemeChoice &s) { return s.kind != SchemeKind::DTx; });
        if (relay != schemes.end())
        {
            const ReaResult rea = characteristic_distances(model, dir, *relay);
            if (!rea.accepted)
                throw ConfigError(std::string("configuration rejected: ") + to_string(rea.reason));
            cd = rea.cd;
            if (opts.r_cov)
            {
                if (*opts.r_cov < cd->r_dtx || *opts.r_cov > cd->r_cov)
                    throw ConfigError("simulate: coverage radius outside [R_DTx, maximal coverage]");
                cd->r_cov = *opts.r_cov;
            }
            res.r_cov = cd->r_cov;
        }
        else
            res.r_cov = opts.r_cov.value_or(r_dtx(model, dir));

        const Context ctx{&model, dir, &schemes, cd ? &*cd : nullptr, res.r_cov, opts.band_fraction * res.r_cov};
        const std::size_t chunk = std::max<std::size_t>(opts.chunk, 1);
        const std::size_t n_chunks = (opts.samples + chunk - 1) / chunk;
        std::vector<Tally> tallies(n_chunks);
        std::atomic<std::size_t> next{0};
        auto worker = [&]
        {
            for (std::size_t k = next++; k < n_chunks; k = next++)
            {
                const std::size_t count = std::min(chunk, opts.samples - k * chunk);
                tallies[k] = run_chunk(ctx, substream_seed(opts.seed, k), count);
            }
        };
        unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
        threads = static_cast<unsigned>(std::min<std::size_t>(threads, n_chunks));
        if (threads <= 1)
            worker();
        else
        {
            std::vector<std::thread> pool;
            for (unsigned i = 0; i < threads; ++i)
                pool.emplace_back(worker);
            for (auto &th : pool)
                th.join();
        }

        Tally total;
        for (const Tally &t : tallies)
        {
            total.n += t.n;
            total.rtx += t.rtx;
            total.served += t.served;
            total.outage += t.outage;
            total.failures += t.failures;
            total.mismatch += t.mismatch;
            total.mismatch_near += t.mismatch_near;
            total.e_sum += t.e_sum;
            total.e_sq += t.e_sq;
        }

        const double n = static_cast<double>(total.n);
        res.n_samples = total.n;
        res.numerical_failures = total.failures;
        res.outage_rate = total.outage / n;
        const double p = total.rtx / n;
        res.p_rtx_hat = {p, std::sqrt(p * (1.0 - p) / n)};
        if (total.served > 0)
        {
            const double m = static_cast<double>(total.served);
            const double mean = total.e_sum / m;
            const double var = total.served > 1 ? std::max(0.0, total.e_sq / m - mean * mean) * m / (m - 1.0) : 0.0;
            res.e_total_hat = {mean, std::sqrt(var / m)};
        }

        if (cd)
        {
            res.has_model = true;
            const EnergyReport rep = energy_report(*cd, model, dir, *relay, {.seed = substream_seed(opts.seed, ~0ULL)});
            res.p_rtx_model = rep.p_rtx;
            res.e_total_model = rep.e_total_avg;
            res.decision_mismatch_rate = total.mismatch / n;
            res.mismatch_near_line = total.mismatch ? static_cast<double>(total.mismatch_near) / total.mismatch : 1.0;
            res.energy_model_error =
                res.e_total_hat.value > 0.0 ? std::abs(rep.e_total_avg - res.e_total_hat.value) / res.e_total_hat.value : 0.0;
        }
        return res;
    }
}

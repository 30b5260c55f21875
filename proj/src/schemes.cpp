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

#include "relayarea/schemes.hpp"
#include "relayarea/errors.hpp"
#include "relayarea/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace relayarea
{
    std::string to_string(Direction dir) { return dir == Direction::Uplink ? "uplink" : "downlink"; }

    std::string to_string(SchemeChoice scheme)
    {
        switch (scheme.kind)
        {
        case SchemeKind::DTx:
            return "dtx";
        case SchemeKind::FullDF:
            return scheme.alpha == 0 ? "fulldf" : "fulldf-rep";
        case SchemeKind::EOPDF:
            return "eopdf";
        }
        return "?";
    }

    Direction parse_direction(const std::string &text)
    {
        if (text == "up" || text == "uplink")
            return Direction::Uplink;
        if (text == "down" || text == "downlink")
            return Direction::Downlink;
        throw ConfigError("unknown direction '" + text + "'");
    }

    SchemeKind parse_scheme_kind(const std::string &text)
    {
        if (text == "dtx")
            return SchemeKind::DTx;
        if (text == "fulldf")
            return SchemeKind::FullDF;
        if (text == "eopdf")
            return SchemeKind::EOPDF;
        throw ConfigError("unknown scheme '" + text + "'");
    }

    const char *to_string(Outcome outcome)
    {
        switch (outcome)
        {
        case Outcome::Feasible:
            return "feasible";
        case Outcome::Outage:
            return "outage";
        case Outcome::NumericalFailure:
            return "numerical-failure";
        }
        return "?";
    }

    RelayChannel relay_channel(const LinkGains &g, const CellConfig &cfg, Direction dir)
    {
        if (dir == Direction::Uplink)
            return {g.gd, g.gs, g.gr, cfg.noise, cfg.rate, cfg.user_power_max, cfg.relay_power_max};
        return {g.gd, g.gr, g.gs, cfg.noise, cfg.rate, cfg.bs_power_max, cfg.relay_power_max};
    }

    namespace
    {
        // Feasibility slack relative to the budget
        constexpr double kBudgetTol = 1e-12;

        void assign_source(SchemeEnergy &out, Direction dir, double e_source)
        {
            (dir == Direction::Uplink ? out.e_user : out.e_bs) = e_source;
        }
    }

    SchemeEnergy dtx_energy(const LinkGains &g, const CellConfig &cfg, Direction dir)
    {
        SchemeEnergy out;
        out.scheme = {SchemeKind::DTx, 0};
        const double p_max = dir == Direction::Uplink ? cfg.user_power_max : cfg.bs_power_max;
        const double p = std::expm1(cfg.rate * std::numbers::ln2) * cfg.noise / g.gd;
        out.p_direct = p;
        assign_source(out, dir, p);
        out.outcome = (std::isfinite(p) && p <= p_max) ? Outcome::Feasible : Outcome::Outage;
        return out;
    }

    SchemeEnergy fulldf_energy(const LinkGains &g, const CellConfig &cfg, Direction dir, int alpha)
    {
        if (alpha != 0 && alpha != 1)
            throw ConfigError("alpha must be 0 or 1");
        const RelayChannel ch = relay_channel(g, cfg, dir);
        SchemeEnergy out;
        out.scheme = {SchemeKind::FullDF, alpha};
        const double q1 = std::expm1(2.0 * ch.rate * std::numbers::ln2); // 2^(2R) - 1
        const double p_src = q1 * ch.noise / ch.g_sr;
        double factor = 1.0 - alpha * ch.g_sd / ch.g_sr;
        if (factor < 0.0)
        {
            // The direct phase-1 signal alone already decodes at the destination
            factor = 0.0;
            out.fulldf.relay_clamped = true;
        }
        const double p_rel = q1 * factor * ch.noise / ch.g_rd;
        out.fulldf.p_source = p_src;
        out.fulldf.p_relay = p_rel;
        assign_source(out, dir, 0.5 * p_src);
        out.e_relay = 0.5 * p_rel;
        const bool ok = std::isfinite(p_src) && std::isfinite(p_rel) && 0.5 * p_src <= ch.p_source_max &&
                        0.5 * p_rel <= ch.p_relay_max;
        out.outcome = ok ? Outcome::Feasible : Outcome::Outage;
        return out;
    }

    // ------------------------------------------------------------------------
    // Partial decode-forward

    namespace
    {
        constexpr double kPenalty = 1e6;
        constexpr double kUserWeightSub3 = 1e-6;

        struct Phase2
        {
            double p2 = 0.0, pr = 0.0, cost = 0.0;
        };

        // Cheapest (P2, PR) with sqrt(P2 g_sd) + sqrt(PR g_rd) >= sqrt(s2) under soft caps P2 <= u_cap,
        // PR <= v_cap (each excess costs kPenalty per unit of energy). The cost is convex in t = sqrt(P2 g_sd),
        // so its minimum is a stationary point of one linear piece or a breakpoint.
        Phase2 split_phase2(double s2, double g_sd, double g_rd, double u_cap, double v_cap)
        {
            if (s2 <= 0.0)
            {
                Phase2 z;
                z.cost = kPenalty * std::max(0.0, -0.5 * u_cap);
                return z;
            }
            const double s = std::sqrt(s2);
            auto eval = [&](double t)
            {
                t = std::clamp(t, 0.0, s);
                Phase2 out;
                out.p2 = t * t / g_sd;
                out.pr = (s - t) * (s - t) / g_rd;
                out.cost = 0.5 * (out.p2 + out.pr) + kPenalty * std::max(0.0, 0.5 * (out.p2 - u_cap)) +
                           kPenalty * std::max(0.0, 0.5 * (out.pr - v_cap));
                return out;
            };
            std::array<double, 8> cand{};
            int n = 0;
            for (double wu : {1.0, 1.0 + kPenalty})
                for (double wr : {1.0, 1.0 + kPenalty})
                    cand[n++] = s * (wr / g_rd) / (wu / g_sd + wr / g_rd);
            cand[n++] = std::sqrt(std::max(0.0, u_cap) * g_sd);
            cand[n++] = s - std::sqrt(v_cap * g_rd);
            cand[n++] = 0.0;
            cand[n++] = s;
            Phase2 best = eval(cand[0]);
            for (int i = 1; i < n; ++i)
            {
                const Phase2 c = eval(cand[i]);
                if (c.cost < best.cost)
                    best = c;
            }
            return best;
        }

        struct Candidate
        {
            double cost = std::numeric_limits<double>::infinity();
            double e_source = 0.0, e_relay = 0.0, violation = 0.0;
            EoPdfAllocation alloc;
            bool converged = true;
        };

        double violation_of(const RelayChannel &ch, double e_source, double e_relay)
        {
            return std::max(0.0, e_source - ch.p_source_max) + std::max(0.0, e_relay - ch.p_relay_max);
        }

        bool within_budget(const RelayChannel &ch, double e_source, double e_relay)
        {
            return e_source <= ch.p_source_max * (1.0 + kBudgetTol) && e_relay <= ch.p_relay_max * (1.0 + kBudgetTol);
        }

        // Sub-schemes 2 and 3 share the parametrization by the phase-1 direct rate a in [0, R]. For a given a,
        // the relay decodes as much as phase 1 allows (more relayed rate never costs energy), the direct-only
        // part uses the least phase-3 power, and phase 2 carries the remainder coherently.
        Candidate eval_split(const RelayChannel &ch, double a, bool relay_objective)
        {
            const double N = ch.noise, q = std::exp2(2.0 * ch.rate);
            const double y = std::exp2(2.0 * a);
            const double p1 = (y - 1.0) * N / ch.g_sd;
            const double x = std::min(q, 1.0 + p1 * ch.g_sr / N);
            const double p3 = std::max(0.0, (q / x - 1.0) * N / ch.g_sd);
            const double s2 = N * std::max(0.0, q / y - q / x);
            const double u_cap = 2.0 * ch.p_source_max - p1 - p3;
            const double v_cap = 2.0 * ch.p_relay_max;

            Candidate c;
            double p2 = 0.0, pr = 0.0;
            if (!relay_objective)
            {
                const Phase2 ph = split_phase2(s2, ch.g_sd, ch.g_rd, u_cap, v_cap);
                p2 = ph.p2;
                pr = ph.pr;
                c.cost = 0.5 * (p1 + p3) + ph.cost;
            }
            else
            {
                // Relay energy only: the user fills phase 2 up to its budget first
                const double t_user = std::sqrt(std::max(0.0, u_cap) * ch.g_sd);
                const double s = std::sqrt(s2);
                pr = std::pow(std::max(0.0, s - t_user), 2) / ch.g_rd;
                p2 = std::pow(std::max(0.0, s - std::sqrt(pr * ch.g_rd)), 2) / ch.g_sd;
                c.cost = 0.5 * pr + kUserWeightSub3 * 0.5 * (p1 + p2 + p3) +
                         kPenalty * std::max(0.0, 0.5 * (p1 + p2 + p3) - ch.p_source_max) +
                         kPenalty * std::max(0.0, 0.5 * pr - ch.p_relay_max);
            }
            c.e_source = 0.5 * (p1 + p2 + p3);
            c.e_relay = 0.5 * pr;
            c.violation = violation_of(ch, c.e_source, c.e_relay);
            c.alloc.p1 = p1;
            c.alloc.p2 = p2;
            c.alloc.p3 = p3;
            c.alloc.p_relay = pr;
            c.alloc.rate_relayed = 0.5 * std::log2(x);
            c.alloc.rate_direct = ch.rate - c.alloc.rate_relayed;
            return c;
        }

        // Sub-scheme 1: the whole message is decoded by the relay in phase 1 and the user repeats it
        // coherently with the relay in phase 2 (P1 = P2 = Pu, no direct-only part).
        Candidate eval_repeat(const RelayChannel &ch, double pu)
        {
            const double N = ch.noise, q = std::exp2(2.0 * ch.rate);
            const double y = 1.0 + pu * ch.g_sd / N;
            const double s2 = N * std::max(0.0, q / y - 1.0);
            const double pr = std::pow(std::max(0.0, std::sqrt(s2) - std::sqrt(pu * ch.g_sd)), 2) / ch.g_rd;
            Candidate c;
            c.e_source = pu;
            c.e_relay = 0.5 * pr;
            c.violation = violation_of(ch, c.e_source, c.e_relay);
            c.cost = pu + 0.5 * pr + kPenalty * std::max(0.0, pu - ch.p_source_max) +
                     kPenalty * std::max(0.0, 0.5 * pr - ch.p_relay_max);
            c.alloc.p1 = c.alloc.p2 = pu;
            c.alloc.p_relay = pr;
            c.alloc.rate_relayed = ch.rate;
            return c;
        }

        Candidate solve_sub(const RelayChannel &ch, int k)
        {
            Candidate best;
            if (k == 1)
            {
                const double q1 = std::expm1(2.0 * ch.rate * std::numbers::ln2);
                const double lo = q1 * ch.noise / ch.g_sr;
                const double hi = std::max(lo, q1 * ch.noise / ch.g_sd);
                if (hi > lo)
                {
                    auto m = numerics::minimize_brent([&](double pu) { return eval_repeat(ch, pu).cost; }, lo, hi);
                    best = eval_repeat(ch, m.x);
                    best.converged = m.converged;
                }
                else
                    best = eval_repeat(ch, lo);
            }
            else
            {
                const bool relay_objective = (k == 3);
                auto m = numerics::minimize_brent([&](double a) { return eval_split(ch, a, relay_objective).cost; },
                                                  0.0, ch.rate);
                best = eval_split(ch, m.x, relay_objective);
                best.converged = m.converged;
            }
            best.alloc.subscheme = k;
            return best;
        }
    }

    EoPdfSolution solve_eopdf(const RelayChannel &ch, int subscheme)
    {
        if (subscheme < 0 || subscheme > 3)
            throw ConfigError("EO-PDF sub-scheme must be 0 (all) or 1..3");
        EoPdfSolution out;
        if (!std::isfinite(ch.g_sd) || !std::isfinite(ch.g_sr) || !std::isfinite(ch.g_rd) || !std::isfinite(ch.noise) ||
            !std::isfinite(ch.rate))
        {
            out.outcome = Outcome::NumericalFailure;
            out.e_source = out.e_relay = std::numeric_limits<double>::quiet_NaN();
            return out;
        }
        bool any_feasible = false, failed = false;
        Candidate chosen, least_violation;
        least_violation.violation = std::numeric_limits<double>::infinity();
        // Sub-schemes 1 and 3 optimise over subsets of sub-scheme 2's feasible set, so they cannot beat it on
        // total energy; they are solved only as a fallback when sub-scheme 2 finds no feasible point.
        const std::array<int, 3> order = {2, 1, 3};
        for (int k : order)
        {
            if (subscheme != 0 && k != subscheme)
                continue;
            if (subscheme == 0 && any_feasible)
                break;
            Candidate c = solve_sub(ch, k);
            if (!c.converged || !std::isfinite(c.cost))
            {
                failed = true;
                continue;
            }
            if (within_budget(ch, c.e_source, c.e_relay))
            {
                chosen = c;
                any_feasible = true;
            }
            else if (c.violation < least_violation.violation)
                least_violation = c;
        }
        if (any_feasible)
            out.outcome = Outcome::Feasible;
        else
        {
            out.outcome = failed ? Outcome::NumericalFailure : Outcome::Outage;
            chosen = least_violation;
        }
        out.e_source = chosen.e_source;
        out.e_relay = chosen.e_relay;
        out.violation = chosen.violation;
        out.allocation = chosen.alloc;
        return out;
    }

    SchemeEnergy eopdf_energy(const LinkGains &g, const CellConfig &cfg, Direction dir)
    {
        const EoPdfSolution sol = solve_eopdf(relay_channel(g, cfg, dir));
        SchemeEnergy out;
        out.scheme = {SchemeKind::EOPDF, 0};
        out.outcome = sol.outcome;
        assign_source(out, dir, sol.e_source);
        out.e_relay = sol.e_relay;
        out.eopdf = sol.allocation;
        return out;
    }

    SchemeEnergy evaluate_scheme(SchemeChoice scheme, const LinkGains &g, const CellConfig &cfg, Direction dir)
    {
        switch (scheme.kind)
        {
        case SchemeKind::DTx:
            return dtx_energy(g, cfg, dir);
        case SchemeKind::FullDF:
            return fulldf_energy(g, cfg, dir, scheme.alpha);
        case SchemeKind::EOPDF:
            return eopdf_energy(g, cfg, dir);
        }
        throw ConfigError("unknown scheme");
    }

    Decision best_scheme(const LinkGains &g, const CellConfig &cfg, Direction dir, std::span<const SchemeChoice> schemes)
    {
        if (schemes.empty())
            throw ConfigError("scheme set is empty");
        Decision out;
        for (const auto &s : schemes)
        {
            SchemeEnergy e = evaluate_scheme(s, g, cfg, dir);
            if (e.outcome == Outcome::NumericalFailure)
                out.numerical_failure = true;
            if (!e.feasible())
                continue;
            if (out.outage || e.total() < out.energy.total())
            {
                out.energy = e;
                out.outage = false;
            }
        }
        return out;
    }
}

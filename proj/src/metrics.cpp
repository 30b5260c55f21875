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

#include "relayarea/metrics.hpp"
#include "relayarea/errors.hpp"
#include "relayarea/numerics.hpp"

#include <algorithm>
#include <cmath>

namespace relayarea
{
    namespace
    {
        constexpr double kQuadRelTol = 1e-11;

        double safe_acos(double v) { return std::acos(std::clamp(v, -1.0, 1.0)); }

        double integrate_or_throw(auto &&f, double a, double b, double rel_tol)
        {
            const auto res = numerics::integrate(f, a, b, rel_tol, 0.0, 4000);
            if (!res.converged)
                throw NumericalError("adaptive quadrature did not reach its tolerance");
            return res.value;
        }
    }

    AngleSolution angles(const CharacteristicDistances &cd)
    {
        const double rd = cd.r_dtx, rc = cd.r_cov;
        if (rd > rc * (1.0 + 1e-12))
            throw ConfigError("angles: R_DTx exceeds R_cov");
        const double d = std::min(cd.d_min, rd);
        const double s = 0.5 * kSqrt3 * rd, e = 0.75 * rc;
        AngleSolution a;
        if (d <= std::min(s, e))
        {
            a.phi_small = a.phi_big = kHalfSector;
            a.case_id = 1;
        }
        else if (s <= e)
        {
            a.phi_small = safe_acos(d / rd);
            a.phi_big = kHalfSector;
            a.case_id = 2;
        }
        else
        {
            a.x = 0.75 * rc + 0.25 * std::sqrt(std::max(0.0, 4.0 * rd * rd - 3.0 * rc * rc));
            if (d <= a.x)
            {
                a.phi_small = a.phi_big = std::atan(kSqrt3 * (rc / d - 1.0));
                a.case_id = 3;
            }
            else
            {
                a.phi_small = safe_acos(d / rd);
                a.phi_big = kHalfSector - safe_acos(kSqrt3 * rc / (2.0 * rd));
                a.case_id = 4;
            }
        }
        return a;
    }

    double p_rtx_formula(double d_min, double r_dtx, double r_cov, const AngleSolution &a)
    {
        const double area = d_min * d_min / 2.0 * std::tan(a.phi_small) +
                            r_dtx * r_dtx / 2.0 * (a.phi_big - a.phi_small) +
                            0.375 * r_cov * r_cov * std::tan(kHalfSector - a.phi_big);
        return 1.0 - 8.0 / (kSqrt3 * r_cov * r_cov) * area;
    }

    double p_rtx(const CharacteristicDistances &cd)
    {
        const AngleSolution a = angles(cd);
        return std::clamp(p_rtx_formula(std::min(cd.d_min, cd.r_dtx), cd.r_dtx, cd.r_cov, a), 0.0, 1.0);
    }

    namespace
    {
        // Energy constant of direct transmission: (2^R - 1) N K_d
        double dtx_constant(const CellModel &model)
        {
            return std::expm1(model.config.rate * std::numbers::ln2) * model.config.noise * model.links.direct.k;
        }

        double edge_term(double r_cov, double b, double from)
        {
            // (sqrt3 Rc)^b * int_from^{pi/6} (sin t + sqrt3 cos t)^-b dt
            auto f = [b](double t) { return std::pow(std::sin(t) + kSqrt3 * std::cos(t), -b); };
            return std::pow(kSqrt3 * r_cov, b) * integrate_or_throw(f, from, kHalfSector, kQuadRelTol);
        }
    }

    double avg_energy_dtx(const CharacteristicDistances &cd, const CellModel &model, Direction)
    {
        const AngleSolution an = angles(cd);
        const double d = std::min(cd.d_min, cd.r_dtx);
        const double p = std::clamp(p_rtx_formula(d, cd.r_dtx, cd.r_cov, an), 0.0, 1.0);
        if (p >= 1.0)
            return 0.0;
        const double b = model.links.direct.exponent + 2.0;
        auto sec = [b](double t) { return std::pow(1.0 / std::cos(t), b); };
        const double line = std::pow(d, b) * integrate_or_throw(sec, 0.0, an.phi_small, kQuadRelTol);
        const double arc = std::pow(cd.r_dtx, b) * (an.phi_big - an.phi_small);
        const double edge = edge_term(cd.r_cov, b, an.phi_big);
        return 2.0 * dtx_constant(model) * (line + arc + edge) / (b * sector_area(cd.r_cov) * (1.0 - p));
    }

    double avg_energy_dtx_all(const CellModel &model, Direction, double r_cov)
    {
        const double b = model.links.direct.exponent + 2.0;
        return 2.0 * dtx_constant(model) * edge_term(r_cov, b, 0.0) / (b * sector_area(r_cov));
    }

    namespace
    {
        // int_{r0}^{r1} (D^2 + r^2 - 2 D r c)^2 r dr
        double quartic_antiderivative(double r, double dr, double c)
        {
            const double r2 = r * r, d2 = dr * dr;
            return r2 * r2 * r2 / 6.0 - 0.8 * dr * c * r2 * r2 * r + (4.0 * d2 * c * c + 2.0 * d2) * r2 * r2 / 4.0 -
                   4.0 / 3.0 * d2 * dr * c * r2 * r + d2 * d2 * r2 / 2.0;
        }
    }

    double fulldf_position_integral(const CharacteristicDistances &cd, const CellModel &model, InnerIntegral method)
    {
        const double dr = model.config.relay_distance;
        const double as = model.links.user_relay.exponent;
        const AngleSolution an = angles(cd);
        const double d = std::min(cd.d_min, cd.r_dtx);
        const bool poly = method == InnerIntegral::Polynomial || (method == InnerIntegral::Auto && as == 4.0);
        if (method == InnerIntegral::Polynomial && as != 4.0)
            throw ConfigError("polynomial inner integral needs a 40 dB/decade user-relay exponent");

        auto inner = [&](double theta, double r_lo)
        {
            const double r_hi = sector_edge(theta, cd.r_cov);
            if (r_hi <= r_lo)
                return 0.0;
            const double c = std::cos(theta);
            if (poly)
                return quartic_antiderivative(r_hi, dr, c) - quartic_antiderivative(r_lo, dr, c);
            auto g = [&](double r)
            {
                const double rs2 = std::max(0.0, dr * dr + r * r - 2.0 * dr * r * c);
                return std::pow(rs2, 0.5 * as) * r;
            };
            // Split at the point closest to the relay, where the integrand has a kink for small exponents
            const double r_near = dr * c;
            if (r_near > r_lo && r_near < r_hi)
                return integrate_or_throw(g, r_lo, r_near, 1e-12) + integrate_or_throw(g, r_near, r_hi, 1e-12);
            return integrate_or_throw(g, r_lo, r_hi, 1e-12);
        };
        auto line_part = [&](double theta) { return inner(theta, d / std::cos(theta)); };
        auto arc_part = [&](double theta) { return inner(theta, cd.r_dtx); };
        double total = integrate_or_throw(line_part, 0.0, an.phi_small, kQuadRelTol);
        if (an.phi_big > an.phi_small)
            total += integrate_or_throw(arc_part, an.phi_small, an.phi_big, kQuadRelTol);
        return total;
    }

    RelayAverages avg_energy_fulldf(const CharacteristicDistances &cd, const CellModel &model, Direction dir)
    {
        const auto &cfg = model.config;
        const double q = std::expm1(2.0 * cfg.rate * std::numbers::ln2);
        const double p = std::clamp(p_rtx_formula(std::min(cd.d_min, cd.r_dtx), cd.r_dtx, cd.r_cov, angles(cd)), 0.0, 1.0);
        RelayAverages out;
        const double fixed_hop = 0.5 * q * cfg.noise * model.links.relay_bs.k *
                                 std::pow(cfg.relay_distance, model.links.relay_bs.exponent);
        double position_hop = 0.0;
        if (p > 0.0)
        {
            // Half-block energy times the two mirrored half sectors
            position_hop = q * cfg.noise * model.links.user_relay.k * fulldf_position_integral(cd, model) /
                           (sector_area(cd.r_cov) * p);
        }
        if (dir == Direction::Uplink)
        {
            out.e_source = position_hop;
            out.e_relay = fixed_hop;
        }
        else
        {
            out.e_source = fixed_hop;
            out.e_relay = position_hop;
        }
        return out;
    }

    namespace
    {
        struct EoAverages
        {
            double e_source = 0.0, e_relay = 0.0, rel_se = 0.0;
            std::size_t samples = 0, outages = 0;
        };

        EoAverages eopdf_averages(const CharacteristicDistances &cd, const CellModel &model, Direction dir,
                                  const ReportOptions &opts)
        {
            SectorSampler sampler(cd.r_cov, opts.seed);
            double s_src = 0.0, s_rel = 0.0, s_tot2 = 0.0;
            EoAverages out;
            std::size_t draws = 0;
            const std::size_t max_draws = 1000 * std::max<std::size_t>(opts.max_samples, 1);
            while (out.samples < opts.max_samples && draws < max_draws)
            {
                const UserPosition u = sampler.next();
                ++draws;
                if (!rea_contains(cd, u))
                    continue;
                const SchemeEnergy e = eopdf_energy(model.gains(u), model.config, dir);
                if (e.outcome == Outcome::NumericalFailure)
                    throw NumericalError("EO-PDF optimizer did not converge");
                if (!e.feasible())
                {
                    ++out.outages;
                    continue;
                }
                const double src = dir == Direction::Uplink ? e.e_user : e.e_bs;
                s_src += src;
                s_rel += e.e_relay;
                s_tot2 += (src + e.e_relay) * (src + e.e_relay);
                ++out.samples;
                if (out.samples >= opts.min_samples && out.samples % 500 == 0)
                {
                    const double n = static_cast<double>(out.samples);
                    const double mean = (s_src + s_rel) / n;
                    const double var = std::max(0.0, s_tot2 / n - mean * mean) * n / (n - 1.0);
                    out.rel_se = std::sqrt(var / n) / mean;
                    if (out.rel_se <= opts.target_rel_se)
                        break;
                }
            }
            if (out.samples > 0)
            {
                const double n = static_cast<double>(out.samples);
                out.e_source = s_src / n;
                out.e_relay = s_rel / n;
                const double mean = (s_src + s_rel) / n;
                const double var = out.samples > 1 ? std::max(0.0, s_tot2 / n - mean * mean) * n / (n - 1.0) : 0.0;
                out.rel_se = mean > 0.0 ? std::sqrt(var / n) / mean : 0.0;
            }
            return out;
        }
    }

    EnergyReport energy_report(const CharacteristicDistances &cd, const CellModel &model, Direction dir,
                               SchemeChoice scheme, const ReportOptions &opts)
    {
        if (scheme.kind == SchemeKind::DTx)
            throw ConfigError("energy report needs a relaying scheme");
        EnergyReport rep;
        rep.r_cov = cd.r_cov;
        rep.sector_area = sector_area(cd.r_cov);
        rep.angles = angles(cd);
        const double raw = p_rtx_formula(std::min(cd.d_min, cd.r_dtx), cd.r_dtx, cd.r_cov, rep.angles);
        rep.p_rtx = std::clamp(raw, 0.0, 1.0);
        rep.p_rtx_clamped = rep.p_rtx != raw;
        rep.e_dtx_avg = avg_energy_dtx(cd, model, dir);
        if (rep.p_rtx > 0.0)
        {
            if (scheme.kind == SchemeKind::FullDF)
            {
                const RelayAverages r = avg_energy_fulldf(cd, model, dir);
                rep.e_source_avg = r.e_source;
                rep.e_relay_avg = r.e_relay;
            }
            else
            {
                const EoAverages r = eopdf_averages(cd, model, dir, opts);
                rep.e_source_avg = r.e_source;
                rep.e_relay_avg = r.e_relay;
                rep.relay_samples = r.samples;
                rep.relay_outage_samples = r.outages;
                rep.relay_rel_se = r.rel_se;
            }
        }
        rep.e_total_avg = (1.0 - rep.p_rtx) * rep.e_dtx_avg + rep.p_rtx * (rep.e_source_avg + rep.e_relay_avg);
        rep.e_per_area = rep.e_total_avg / rep.sector_area;
        rep.cost_ratio = (cd.r_dtx / cd.r_cov) * (cd.r_dtx / cd.r_cov);
        return rep;
    }
}

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

#include "relayarea/rea.hpp"
#include "relayarea/errors.hpp"
#include "relayarea/numerics.hpp"

#include <cmath>
#include <limits>

namespace relayarea
{
    namespace
    {
        constexpr double kScanStep = 1.0;     // m
        constexpr double kRootTol = 1e-9;     // m
        constexpr double kFarLimit = 20000.0; // m, outward search limit for outage/energy boundaries

        double direct_power_max(const CellConfig &cfg, Direction dir)
        {
            return dir == Direction::Uplink ? cfg.user_power_max : cfg.bs_power_max;
        }

        double relay_side_power_max(const CellConfig &cfg, Direction dir)
        {
            return dir == Direction::Uplink ? cfg.user_power_max : cfg.relay_power_max;
        }

        // Last point of the true-region of pred along a ray, starting from a point where pred holds
        template <class Pred>
        std::optional<double> far_edge(Pred &&pred, double r_start)
        {
            if (!pred(r_start))
                return std::nullopt;
            double lo = r_start, hi = r_start + kScanStep;
            while (pred(hi))
            {
                lo = hi;
                hi += kScanStep;
                if (hi > kFarLimit)
                    return std::nullopt;
            }
            while (hi - lo > 1e-7)
            {
                const double mid = 0.5 * (lo + hi);
                (pred(mid) ? lo : hi) = mid;
            }
            return lo;
        }

        template <class Diff>
        Boundary first_crossing(Diff &&diff, double r_upper)
        {
            const double r_lo = kMinLinkDistance;
            if (diff(r_lo) >= 0.0)
                return {0.0, BoundaryKind::RelayEverywhere};
            auto br = numerics::scan_sign_change(diff, r_lo, r_upper, kScanStep);
            if (!br)
                return {r_upper, BoundaryKind::RelayNowhere};
            return {numerics::refine_root(diff, br->lo, br->hi, kRootTol), BoundaryKind::Found};
        }
    }

    double r_dtx(const CellModel &model, Direction dir)
    {
        const auto &cfg = model.config;
        const auto &ld = model.links.direct;
        const double q = std::expm1(cfg.rate * std::numbers::ln2);
        return std::pow(direct_power_max(cfg, dir) / (ld.k * cfg.noise * q), 1.0 / ld.exponent);
    }

    std::optional<double> d_rtx_closed_form(const CellModel &model)
    {
        const auto &ld = model.links.direct, &ls = model.links.user_relay;
        if (ld.exponent != ls.exponent)
            return std::nullopt;
        return model.config.relay_distance / (std::pow(ld.k / ls.k, 1.0 / ls.exponent) + 1.0);
    }

    double d_rtx(const CellModel &model, Direction dir)
    {
        if (dir == Direction::Downlink)
            return 0.0;
        if (auto closed = d_rtx_closed_form(model))
            return *closed;
        const auto &ld = model.links.direct, &ls = model.links.user_relay;
        const double dr = model.config.relay_distance;
        const double c = std::pow(ld.k / ls.k, 2.0 / ls.exponent);
        const double p = 2.0 * ld.exponent / ls.exponent;
        auto f = [&](double r) { return c * std::pow(r, p) - (r - dr) * (r - dr); };
        auto br = numerics::scan_sign_change(f, 0.0, dr, kScanStep);
        if (!br)
            throw ConfigError("relaying condition has no crossing between the base station and the relay");
        return numerics::refine_root(f, br->lo, br->hi, kRootTol);
    }

    Boundary d_df_e(const CellModel &model, Direction dir, int alpha, double r_upper)
    {
        const auto &cfg = model.config;
        auto diff_for = [&](int a)
        {
            return [&, a](double r)
            {
                const LinkGains g = model.gains({r, 0.0});
                return dtx_energy(g, cfg, dir).total() - fulldf_energy(g, cfg, dir, a).total();
            };
        };
        const Boundary b0 = first_crossing(diff_for(0), r_upper);
        if (alpha == 0 || b0.kind != BoundaryKind::Found)
            return alpha == 0 ? b0 : first_crossing(diff_for(alpha), r_upper);

        // Repetition coding only lowers the relayed energy: walk back from the two-hop boundary
        auto diff = diff_for(alpha);
        if (diff(b0.r) < 0.0)
            return first_crossing(diff, r_upper);
        double hi = b0.r;
        while (hi > kMinLinkDistance)
        {
            const double lo = std::max(kMinLinkDistance, hi - kScanStep);
            if (diff(lo) < 0.0)
                return {numerics::refine_root(diff, lo, hi, kRootTol), BoundaryKind::Found};
            hi = lo;
        }
        return {0.0, BoundaryKind::RelayEverywhere};
    }

    Boundary d_eo_e(const CellModel &model, Direction dir, double r_upper)
    {
        const auto &cfg = model.config;
        auto diff = [&](double r)
        {
            const LinkGains g = model.gains({r, 0.0});
            return dtx_energy(g, cfg, dir).total() - eopdf_energy(g, cfg, dir).total();
        };
        return first_crossing(diff, r_upper);
    }

    Circle outer_circle_fit(double r0, double r1)
    {
        const double c = std::cos(kHalfSector);
        const double denom = 2.0 * (r0 - r1 * c);
        if (std::abs(denom) <= 1e-12 * std::max(r0, r1))
            throw std::domain_error("outer_circle_fit: points do not determine a circle centred on the axis");
        const double x = (r0 * r0 - r1 * r1) / denom;
        return {x, std::abs(r0 - x)};
    }

    double r_df_o(const CellModel &model, Direction dir)
    {
        const auto &cfg = model.config;
        const auto &ls = model.links.user_relay;
        const double q = std::expm1(2.0 * cfg.rate * std::numbers::ln2);
        return std::pow(2.0 * relay_side_power_max(cfg, dir) / (ls.k * cfg.noise * q), 1.0 / ls.exponent);
    }

    double coverage_radius(double x_max, double r_max)
    {
        const double edge = 4.0 * r_max * r_max - x_max * x_max;
        if (edge < 0.0)
            return std::numeric_limits<double>::quiet_NaN();
        return x_max + std::min(r_max, std::sqrt(edge / 3.0));
    }

    const char *to_string(Rejection reason)
    {
        switch (reason)
        {
        case Rejection::None:
            return "";
        case Rejection::RelayLinkOutage:
            return "relay-link-outage";
        case Rejection::OuterBoundary:
            return "outer-boundary-not-found";
        case Rejection::CoverageGap:
            return "coverage-gap";
        case Rejection::CoverageBelowDirect:
            return "coverage-below-direct";
        case Rejection::RelayOutsideCell:
            return "relay-outside-cell";
        case Rejection::EnergyBeyondRelay:
            return "energy-boundary-beyond-relay";
        case Rejection::CoverageHole:
            return "coverage-hole";
        }
        return "?";
    }

    namespace
    {
        bool in_disk(double x, double y, const CharacteristicDistances &cd)
        {
            const double dx = x - cd.x_max;
            return dx * dx + y * y <= cd.r_max * cd.r_max * (1.0 + 1e-9);
        }

        // Every sector point beyond R_DTx must be reachable through the relay. The part of the sector outside
        // the DTx disk has as extreme points the hexagon vertices and the ends of the DTx arc on the sector rays.
        bool covers_outer_sector(const CharacteristicDistances &cd)
        {
            const double rc = cd.r_cov;
            if (cd.r_dtx >= rc)
                return true;
            if (!in_disk(rc, 0.0, cd))
                return false;
            if (cd.r_dtx < 0.5 * kSqrt3 * rc)
            {
                if (!in_disk(0.75 * rc, 0.25 * kSqrt3 * rc, cd))
                    return false;
                return in_disk(cd.r_dtx * std::cos(kHalfSector), cd.r_dtx * std::sin(kHalfSector), cd);
            }
            return true;
        }

        std::optional<Circle> fulldf_energy_circle(const CellModel &model, Direction dir, int alpha)
        {
            const auto &cfg = model.config;
            auto cheaper_relay = [&](double theta)
            {
                return [&, theta](double r)
                {
                    const LinkGains g = model.gains({r, theta});
                    return dtx_energy(g, cfg, dir).total() > fulldf_energy(g, cfg, dir, alpha).total();
                };
            };
            const double dr = cfg.relay_distance;
            auto r0 = far_edge(cheaper_relay(0.0), dr);
            auto r1 = far_edge(cheaper_relay(kHalfSector), dr * std::cos(kHalfSector));
            if (!r0 || !r1)
                return std::nullopt;
            try
            {
                return outer_circle_fit(*r0, *r1);
            }
            catch (const std::domain_error &)
            {
                return std::nullopt;
            }
        }
    }

    ReaResult characteristic_distances(const CellModel &model, Direction dir, SchemeChoice scheme)
    {
        if (scheme.kind == SchemeKind::DTx)
            throw ConfigError("characteristic distances need a relaying scheme");
        const auto &cfg = model.config;
        const double dr = cfg.relay_distance;
        ReaResult out;
        out.scheme = scheme;
        out.direction = dir;
        auto &cd = out.cd;
        cd.r_dtx = r_dtx(model, dir);
        out.d_rtx = d_rtx(model, dir);

        auto reject = [&](Rejection why)
        {
            out.accepted = false;
            out.reason = why;
            return out;
        };

        if (scheme.kind == SchemeKind::FullDF)
        {
            const double q = std::expm1(2.0 * cfg.rate * std::numbers::ln2);
            const double budget = dir == Direction::Uplink ? cfg.relay_power_max : cfg.bs_power_max;
            if (0.5 * q * cfg.noise / model.links.relay_bs.gain(dr) > budget)
                return reject(Rejection::RelayLinkOutage);
            cd.x_max = dr;
            cd.r_max = r_df_o(model, dir);
        }
        else
        {
            auto feasible = [&](double theta)
            {
                return [&, theta](double r) { return eopdf_energy(model.gains({r, theta}), cfg, dir).feasible(); };
            };
            auto r0 = far_edge(feasible(0.0), dr);
            auto r1 = far_edge(feasible(kHalfSector), dr * std::cos(kHalfSector));
            if (!r0 || !r1)
                return reject(Rejection::OuterBoundary);
            try
            {
                const Circle c = outer_circle_fit(*r0, *r1);
                cd.x_max = c.center;
                cd.r_max = c.radius;
            }
            catch (const std::domain_error &)
            {
                return reject(Rejection::OuterBoundary);
            }
        }

        cd.r_cov = coverage_radius(cd.x_max, cd.r_max);
        if (!std::isfinite(cd.r_cov))
            return reject(Rejection::CoverageGap);

        if (scheme.kind == SchemeKind::FullDF)
        {
            out.energy_boundary = d_df_e(model, dir, scheme.alpha, cd.r_cov);
            cd.d_min = std::max(out.d_rtx, std::min(out.energy_boundary->r, cd.r_dtx));
            out.energy_circle = fulldf_energy_circle(model, dir, scheme.alpha);
        }
        else if (dir == Direction::Uplink)
            cd.d_min = out.d_rtx;
        else
        {
            out.energy_boundary = d_eo_e(model, dir, cd.r_cov);
            cd.d_min = std::max(out.d_rtx, std::min(out.energy_boundary->r, cd.r_dtx));
        }

        if (cd.r_cov < cd.r_dtx)
            return reject(Rejection::CoverageBelowDirect);
        if (dr > cd.r_cov)
            return reject(Rejection::RelayOutsideCell);
        if (cd.d_min > dr)
            return reject(Rejection::EnergyBeyondRelay);
        if (!covers_outer_sector(cd))
            return reject(Rejection::CoverageHole);
        out.accepted = true;
        return out;
    }

    bool rea_contains(const CharacteristicDistances &cd, const UserPosition &user)
    {
        if (!sector_contains(user, cd.r_cov))
            return false;
        const double x = user.x(), y = user.y();
        const bool inner = x >= cd.d_min || user.r > cd.r_dtx;
        const double dx = x - cd.x_max;
        return inner && dx * dx + y * y <= cd.r_max * cd.r_max;
    }
}

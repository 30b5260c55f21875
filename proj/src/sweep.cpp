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

#include "relayarea/sweep.hpp"
#include "relayarea/errors.hpp"

#include <atomic>
#include <cmath>
#include <filesystem>
#include <limits>
#include <thread>

namespace relayarea
{
    std::string to_string(SweepParameter p)
    {
        switch (p)
        {
        case SweepParameter::RelayDistance:
            return "relay_distance_m";
        case SweepParameter::RelayHeight:
            return "relay_height_m";
        case SweepParameter::Rate:
            return "rate_bps_hz";
        case SweepParameter::Beta:
            return "beta";
        }
        return "?";
    }

    SweepParameter parse_sweep_parameter(const std::string &text)
    {
        for (auto p : {SweepParameter::RelayDistance, SweepParameter::RelayHeight, SweepParameter::Rate,
                       SweepParameter::Beta})
            if (text == to_string(p))
                return p;
        if (text == "D_r")
            return SweepParameter::RelayDistance;
        if (text == "H_R")
            return SweepParameter::RelayHeight;
        if (text == "rate")
            return SweepParameter::Rate;
        throw ConfigError("unknown sweep parameter '" + text + "'");
    }

    void SweepSpec::validate() const
    {
        cell.validate();
        if (values.empty())
            throw ConfigError("sweep range is empty");
        if (schemes.empty())
            throw ConfigError("sweep needs at least one scheme");
        if (!(beta >= 0.0 && beta <= 1.0))
            throw ConfigError("beta must lie in [0, 1]");
        if (parameter == SweepParameter::Beta)
            for (double b : values)
                if (!(b >= 0.0 && b <= 1.0))
                    throw ConfigError("beta must lie in [0, 1]");
    }

    std::vector<double> sweep_grid(double start, double stop, double step)
    {
        if (!(step > 0.0))
            throw ConfigError("sweep step must be positive");
        if (stop < start)
            throw ConfigError("sweep range is empty");
        std::vector<double> v;
        for (std::int64_t i = 0;; ++i)
        {
            const double x = start + static_cast<double>(i) * step;
            if (x > stop + 0.5 * step * 1e-9)
                break;
            v.push_back(x);
        }
        return v;
    }

    namespace
    {
        SchemeChoice parse_scheme_name(const std::string &s, int alpha)
        {
            if (s == "fulldf-rep")
                return {SchemeKind::FullDF, 1};
            const SchemeKind k = parse_scheme_kind(s);
            return {k, k == SchemeKind::FullDF ? alpha : 0};
        }
    }

    SweepSpec sweep_spec_from_json(const json &j, const std::string &base_dir)
    {
        SweepSpec spec;
        try
        {
            if (j.contains("cell"))
                spec.cell = cell_config_from_json(j.at("cell"));
            else if (j.contains("cell_file"))
            {
                std::filesystem::path p = j.at("cell_file").get<std::string>();
                if (p.is_relative())
                    p = std::filesystem::path(base_dir) / p;
                spec.cell = load_cell_config(p.string());
            }
            if (j.contains("parameter"))
                spec.parameter = parse_sweep_parameter(j.at("parameter").get<std::string>());
            const int alpha = j.value("alpha", 0);
            if (j.contains("schemes"))
            {
                spec.schemes.clear();
                for (const auto &s : j.at("schemes"))
                    spec.schemes.push_back(parse_scheme_name(s.get<std::string>(), alpha));
            }
            if (j.contains("direction"))
                spec.direction = parse_direction(j.at("direction").get<std::string>());
            spec.beta = j.value("beta", spec.beta);
            spec.seed = j.value("seed", spec.seed);
            if (j.contains("columns"))
                spec.columns = j.at("columns").get<std::vector<std::string>>();

            if (j.contains("values"))
                spec.values = j.at("values").get<std::vector<double>>();
            else if (j.contains("start") || j.contains("stop") || j.contains("step"))
            {
                const double start = j.at("start").get<double>();
                const double step = j.at("step").get<double>();
                double stop;
                if (j.at("stop").is_string())
                {
                    if (j.at("stop").get<std::string>() != "auto" || spec.parameter != SweepParameter::RelayDistance)
                        throw ConfigError("stop 'auto' is only defined for relay-distance sweeps");
                    stop = 3000.0;
                    spec.trim_beyond_coverage = true;
                }
                else
                    stop = j.at("stop").get<double>();
                spec.values = sweep_grid(start, stop, step);
            }
            else
            {
                switch (spec.parameter)
                {
                case SweepParameter::RelayDistance:
                    spec.values = sweep_grid(100.0, 3000.0, 25.0);
                    spec.trim_beyond_coverage = true;
                    break;
                case SweepParameter::RelayHeight:
                    spec.values = {10.0, 20.0, 30.0};
                    break;
                case SweepParameter::Rate:
                    spec.values = {2.0, 3.0, 4.0, 5.0, 6.0};
                    break;
                case SweepParameter::Beta:
                    spec.values = {0.0, 0.25, 0.5, 0.75, 1.0};
                    break;
                }
            }
        }
        catch (const json::exception &e)
        {
            throw ConfigError(std::string("malformed sweep specification: ") + e.what());
        }
        spec.validate();
        return spec;
    }

    namespace
    {
        const std::vector<std::string> kSweepColumns = {
            "index", "parameter", "value", "scheme", "direction", "accepted", "reason", "D_r[m]", "H_R[m]",
            "rate[bit/s/Hz]", "beta", "R_DTx[m]", "R_cov_max[m]", "R_cov[m]", "D_min[m]", "X_max[m]", "R_max[m]",
            "P_RTx", "E_DTx_avg[J]", "E_source_avg[J]", "E_relay_avg[J]", "E_total_avg[J]", "E_per_area[J/m2]",
            "energy_gain[dB]", "cost_ratio"};

        constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

        struct PointRow
        {
            std::vector<Value> cells;
            bool beyond_coverage = false;
        };

        std::vector<PointRow> evaluate_point(const SweepSpec &spec, const ScenarioTable &table, std::size_t index)
        {
            const double v = spec.values[index];
            CellConfig cfg = spec.cell;
            double beta = spec.beta;
            switch (spec.parameter)
            {
            case SweepParameter::RelayDistance:
                cfg.relay_distance = v;
                break;
            case SweepParameter::RelayHeight:
                cfg.relay_height = v;
                break;
            case SweepParameter::Rate:
                cfg.rate = v;
                break;
            case SweepParameter::Beta:
                beta = v;
                break;
            }
            const std::uint64_t seed = substream_seed(spec.seed, index);

            std::vector<PointRow> rows;
            for (const SchemeChoice &scheme : spec.schemes)
            {
                PointRow pr;
                auto &c = pr.cells;
                c = {static_cast<std::int64_t>(index), to_string(spec.parameter), v, to_string(scheme),
                     to_string(spec.direction), false, std::string(), cfg.relay_distance, cfg.relay_height, cfg.rate,
                     beta};
                double r_dtx_v = kNaN, r_cov_max = kNaN, r_cov = kNaN, d_min = kNaN, x_max = kNaN, r_max = kNaN;
                double p = kNaN, e_dtx = kNaN, e_src = kNaN, e_rel = kNaN, e_tot = kNaN, e_area = kNaN, gain = kNaN,
                       cost = kNaN;
                try
                {
                    const CellModel model = CellModel::build(cfg, table);
                    r_dtx_v = r_dtx(model, spec.direction);
                    if (scheme.kind == SchemeKind::DTx)
                    {
                        c[5] = true;
                        r_cov_max = r_cov = r_dtx_v;
                        p = 0.0;
                        e_dtx = e_tot = avg_energy_dtx_all(model, spec.direction, r_dtx_v);
                        e_src = e_rel = 0.0;
                        e_area = e_tot / sector_area(r_cov);
                        gain = 0.0;
                        cost = 1.0;
                    }
                    else
                    {
                        const ReaResult rea = characteristic_distances(model, spec.direction, scheme);
                        d_min = rea.cd.d_min;
                        x_max = rea.cd.x_max;
                        r_max = rea.cd.r_max;
                        r_cov_max = rea.cd.r_cov;
                        if (!rea.accepted)
                        {
                            c[6] = std::string(to_string(rea.reason));
                            pr.beyond_coverage = rea.reason == Rejection::RelayOutsideCell ||
                                                 rea.reason == Rejection::CoverageGap;
                        }
                        else
                        {
                            c[5] = true;
                            CharacteristicDistances cd = rea.cd;
                            cd.r_cov = cd.r_dtx + beta * (rea.cd.r_cov - cd.r_dtx);
                            r_cov = cd.r_cov;
                            const EnergyReport rep =
                                energy_report(cd, model, spec.direction, scheme, {.seed = seed});
                            p = rep.p_rtx;
                            e_dtx = rep.e_dtx_avg;
                            e_src = rep.e_source_avg;
                            e_rel = rep.e_relay_avg;
                            e_tot = rep.e_total_avg;
                            e_area = rep.e_per_area;
                            cost = rep.cost_ratio;

                            CharacteristicDistances cd0 = rea.cd;
                            cd0.r_cov = cd0.r_dtx;
                            const EnergyReport rep0 = beta == 0.0 ? rep
                                                                  : energy_report(cd0, model, spec.direction, scheme,
                                                                                  {.seed = seed});
                            gain = 10.0 * std::log10(avg_energy_dtx_all(model, spec.direction, cd0.r_cov) /
                                                     rep0.e_total_avg);
                        }
                    }
                }
                catch (const std::exception &e)
                {
                    c[5] = false;
                    c[6] = std::string("error: ") + e.what();
                }
                for (double x : {r_dtx_v, r_cov_max, r_cov, d_min, x_max, r_max, p, e_dtx, e_src, e_rel, e_tot, e_area,
                                 gain, cost})
                    c.emplace_back(x);
                rows.push_back(std::move(pr));
            }
            return rows;
        }
    }

    Table run_sweep(const SweepSpec &spec, const ScenarioTable &table)
    {
        spec.validate();
        const std::size_t n = spec.values.size();
        std::vector<std::vector<PointRow>> points(n);
        std::atomic<std::size_t> next{0};
        auto worker = [&]
        {
            for (std::size_t k = next++; k < n; k = next++)
                points[k] = evaluate_point(spec, table, k);
        };
        unsigned threads = spec.threads ? spec.threads : std::max(1u, std::thread::hardware_concurrency());
        threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
        if (threads <= 1)
            worker();
        else
        {
            std::vector<std::thread> pool;
            for (unsigned i = 0; i < threads; ++i)
                pool.emplace_back(worker);
            for (auto &t : pool)
                t.join();
        }

        std::size_t keep = n;
        if (spec.trim_beyond_coverage && spec.parameter == SweepParameter::RelayDistance)
        {
            while (keep > 0)
            {
                bool all_beyond = true;
                for (const auto &r : points[keep - 1])
                    all_beyond = all_beyond && r.beyond_coverage;
                if (!all_beyond)
                    break;
                --keep;
            }
        }

        Table out;
        out.columns = kSweepColumns;
        for (std::size_t k = 0; k < keep; ++k)
            for (auto &r : points[k])
                out.rows.push_back(std::move(r.cells));
        return spec.columns.empty() ? out : out.select(spec.columns);
    }

    Table rea_table(const std::vector<ReaResult> &results, const CellConfig &cfg)
    {
        Table t;
        t.columns = {"scheme", "direction", "accepted", "reason", "D_r[m]", "D_min[m]", "R_DTx[m]", "X_max[m]",
                     "R_max[m]", "R_cov[m]", "D_RTx[m]", "D_energy[m]", "energy_boundary", "X_energy[m]",
                     "R_energy[m]"};
        for (const auto &r : results)
        {
            std::string kind = "none";
            double d_e = kNaN;
            if (r.energy_boundary)
            {
                d_e = r.energy_boundary->r;
                kind = r.energy_boundary->kind == BoundaryKind::Found             ? "found"
                       : r.energy_boundary->kind == BoundaryKind::RelayEverywhere ? "relay-everywhere"
                                                                                  : "relay-nowhere";
            }
            t.rows.push_back({to_string(r.scheme), to_string(r.direction), r.accepted,
                              std::string(to_string(r.reason)), cfg.relay_distance, r.cd.d_min, r.cd.r_dtx,
                              r.cd.x_max, r.cd.r_max, r.cd.r_cov, r.d_rtx, d_e, kind,
                              r.energy_circle ? r.energy_circle->center : kNaN,
                              r.energy_circle ? r.energy_circle->radius : kNaN});
        }
        return t;
    }

    Table metrics_table(const std::vector<std::pair<ReaResult, EnergyReport>> &rows)
    {
        Table t;
        t.columns = {"scheme", "direction", "R_cov[m]", "sector_area[m2]", "angle_case", "phi_small[rad]",
                     "phi_big[rad]", "P_RTx", "E_DTx_avg[J]", "E_source_avg[J]", "E_relay_avg[J]", "E_total_avg[J]",
                     "E_per_area[J/m2]", "cost_ratio", "relay_samples", "relay_rel_se"};
        for (const auto &[rea, rep] : rows)
            t.rows.push_back({to_string(rea.scheme), to_string(rea.direction), rep.r_cov, rep.sector_area,
                              static_cast<std::int64_t>(rep.angles.case_id), rep.angles.phi_small, rep.angles.phi_big,
                              rep.p_rtx, rep.e_dtx_avg, rep.e_source_avg, rep.e_relay_avg, rep.e_total_avg,
                              rep.e_per_area, rep.cost_ratio, static_cast<std::int64_t>(rep.relay_samples),
                              rep.relay_rel_se});
        return t;
    }

    Table simulation_table(const std::vector<std::pair<SchemeChoice, SimResult>> &rows, Direction dir)
    {
        Table t;
        t.columns = {"scheme", "direction", "n_samples", "R_cov[m]", "p_rtx_hat", "p_rtx_se", "e_total_hat[J]",
                     "e_total_se[J]", "outage_rate", "numerical_failures", "p_rtx_model", "e_total_model[J]",
                     "decision_mismatch_rate", "energy_model_error", "mismatch_near_line"};
        for (const auto &[scheme, s] : rows)
            t.rows.push_back({to_string(scheme), to_string(dir), static_cast<std::int64_t>(s.n_samples), s.r_cov,
                              s.p_rtx_hat.value, s.p_rtx_hat.std_error, s.e_total_hat.value, s.e_total_hat.std_error,
                              s.outage_rate, static_cast<std::int64_t>(s.numerical_failures),
                              s.has_model ? s.p_rtx_model : kNaN, s.has_model ? s.e_total_model : kNaN,
                              s.has_model ? s.decision_mismatch_rate : kNaN, s.has_model ? s.energy_model_error : kNaN,
                              s.has_model ? s.mismatch_near_line : kNaN});
        return t;
    }
}

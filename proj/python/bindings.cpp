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
#include "relayarea/montecarlo.hpp"
#include "relayarea/sweep.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

namespace py = pybind11;
using namespace relayarea;

namespace
{
    CellConfig cell_from(const std::string &text)
    {
        CellConfig c = text.empty() ? CellConfig{} : cell_config_from_json(json::parse(text));
        c.validate();
        return c;
    }

    ScenarioTable table_from(const std::string &text)
    {
        return text.empty() ? ScenarioTable::winner2_default() : scenario_table_from_json(json::parse(text));
    }

    SchemeChoice scheme_from(const std::string &name)
    {
        if (name == "fulldf-rep")
            return {SchemeKind::FullDF, 1};
        const SchemeKind k = parse_scheme_kind(name);
        if (k == SchemeKind::DTx)
            throw ConfigError("direct transmission has no relay efficiency area");
        return {k, 0};
    }

    py::object to_py(const Value &v)
    {
        return std::visit([](const auto &x) -> py::object { return py::cast(x); }, v);
    }

    py::list records(const Table &t)
    {
        py::list out;
        for (const auto &row : t.rows)
        {
            py::dict d;
            for (std::size_t i = 0; i < t.columns.size(); ++i)
                d[py::str(t.columns[i])] = to_py(row[i]);
            out.append(d);
        }
        return out;
    }

    py::list rea(const std::string &cell, const std::vector<std::string> &schemes, const std::string &direction,
                 const std::string &table)
    {
        const CellModel model = CellModel::build(cell_from(cell), table_from(table));
        const Direction dir = parse_direction(direction);
        std::vector<ReaResult> rows;
        {
            py::gil_scoped_release release;
            for (const auto &s : schemes)
                rows.push_back(characteristic_distances(model, dir, scheme_from(s)));
        }
        return records(rea_table(rows, model.config));
    }

    py::list metrics(const std::string &cell, const std::vector<std::string> &schemes, const std::string &direction,
                     double beta, std::uint64_t seed, const std::string &table)
    {
        if (!(beta >= 0.0 && beta <= 1.0))
            throw ConfigError("beta must lie in [0, 1]");
        const CellModel model = CellModel::build(cell_from(cell), table_from(table));
        const Direction dir = parse_direction(direction);
        std::vector<std::pair<ReaResult, EnergyReport>> rows;
        {
            py::gil_scoped_release release;
            for (const auto &name : schemes)
            {
                const SchemeChoice s = scheme_from(name);
                const ReaResult r = characteristic_distances(model, dir, s);
                if (!r.accepted)
                    throw ConfigError(to_string(s) + " configuration rejected: " + to_string(r.reason));
                CharacteristicDistances cd = r.cd;
                cd.r_cov = cd.r_dtx + beta * (r.cd.r_cov - cd.r_dtx);
                rows.emplace_back(r, energy_report(cd, model, dir, s, {.seed = seed}));
            }
        }
        return records(metrics_table(rows));
    }

    py::list simulate_py(const std::string &cell, const std::vector<std::string> &schemes,
                         const std::string &direction, std::size_t samples, std::uint64_t seed, unsigned threads,
                         const std::string &table)
    {
        const CellModel model = CellModel::build(cell_from(cell), table_from(table));
        const Direction dir = parse_direction(direction);
        SimOptions o;
        o.samples = samples;
        o.seed = seed;
        o.threads = threads;
        std::vector<std::pair<SchemeChoice, SimResult>> rows;
        {
            py::gil_scoped_release release;
            for (const auto &name : schemes)
            {
                if (name == "dtx")
                    rows.emplace_back(SchemeChoice{}, simulate(model, dir, {SchemeChoice{}}, o));
                else
                {
                    const SchemeChoice s = scheme_from(name);
                    rows.emplace_back(s, simulate(model, dir, {SchemeChoice{}, s}, o));
                }
            }
        }
        return records(simulation_table(rows, dir));
    }

    py::list sweep(const std::string &spec, const std::string &base_dir, const std::string &table)
    {
        const SweepSpec s = sweep_spec_from_json(json::parse(spec), base_dir);
        const ScenarioTable t = table_from(table);
        Table out;
        {
            py::gil_scoped_release release;
            out = run_sweep(s, t);
        }
        return records(out);
    }

    py::dict link_gains_py(const std::string &cell, double r, double theta, const std::string &table)
    {
        const CellModel model = CellModel::build(cell_from(cell), table_from(table));
        const LinkGains g = model.gains({r, theta});
        py::dict d;
        d["gd"] = g.gd;
        d["gs"] = g.gs;
        d["gr"] = g.gr;
        return d;
    }
}

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Relay efficiency area model: characteristic distances, energy metrics, simulation and sweeps";

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);

    m.def("default_config", [] { return to_json(CellConfig{}).dump(); });
    m.def("default_scenario_table", [] { return to_json(ScenarioTable::winner2_default()).dump(); });
    m.def("normalize_config", [](const std::string &cell) { return to_json(cell_from(cell)).dump(); });
    m.def("rea", &rea);
    m.def("metrics", &metrics);
    m.def("simulate", &simulate_py);
    m.def("sweep", &sweep);
    m.def("link_gains", &link_gains_py);
    m.def("p_rtx",
          [](double d_min, double r_dtx, double r_cov)
          {
              CharacteristicDistances cd;
              cd.d_min = d_min;
              cd.r_dtx = r_dtx;
              cd.r_cov = r_cov;
              return p_rtx(cd);
          });
}

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
#include "relayarea/sweep.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

using namespace relayarea;

namespace
{
    constexpr int kExitOk = 0;
    constexpr int kExitConfig = 1;
    constexpr int kExitNumerical = 2;

    struct Options
    {
        std::string config;
        std::string scenario_table;
        std::string direction = "up";
        std::string scheme = "all";
        int alpha = 0;
        std::uint64_t seed = 1;
        std::size_t samples = 100000;
        std::string format = "csv";
        std::string out;
        unsigned threads = 0;
        std::optional<double> relay_distance;
        std::optional<double> relay_height;
        std::optional<double> rate;
        double beta = 1.0;

        // sweep
        std::string spec;
        std::string parameter;
        std::optional<double> start, stop, step;
        std::vector<double> values;
    };

    void add_common(CLI::App *cmd, Options &o)
    {
        cmd->add_option("--config", o.config, "Cell configuration (JSON)")->check(CLI::ExistingFile);
        cmd->add_option("--scenario-table", o.scenario_table, "Path-loss scenario table (JSON), default WINNER II")
            ->check(CLI::ExistingFile);
        cmd->add_option("--direction", o.direction, "up | down")->check(CLI::IsMember({"up", "down", "uplink", "downlink"}));
        cmd->add_option("--format", o.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--out", o.out, "Output file (default: stdout)");
        cmd->add_option("--relay-distance", o.relay_distance, "Override relay distance D_r [m]");
        cmd->add_option("--relay-height", o.relay_height, "Override relay height H_R [m]");
        cmd->add_option("--rate", o.rate, "Override target rate [bit/s/Hz]");
    }

    void add_scheme(CLI::App *cmd, Options &o)
    {
        cmd->add_option("--scheme", o.scheme, "dtx | fulldf | eopdf | all")
            ->check(CLI::IsMember({"dtx", "fulldf", "eopdf", "all"}));
        cmd->add_option("--alpha", o.alpha, "Full-DF coding: 0 two-hop, 1 repetition")->check(CLI::Range(0, 1));
    }

    CellConfig load_cell(const Options &o)
    {
        CellConfig cfg = o.config.empty() ? CellConfig{} : load_cell_config(o.config);
        if (o.relay_distance)
            cfg.relay_distance = *o.relay_distance;
        if (o.relay_height)
            cfg.relay_height = *o.relay_height;
        if (o.rate)
            cfg.rate = *o.rate;
        cfg.validate();
        return cfg;
    }

    ScenarioTable load_table(const Options &o)
    {
        return o.scenario_table.empty() ? ScenarioTable::winner2_default() : load_scenario_table(o.scenario_table);
    }

    std::vector<SchemeChoice> relay_schemes(const Options &o)
    {
        if (o.scheme == "dtx")
            throw ConfigError("direct transmission has no relay efficiency area; use --scheme fulldf|eopdf|all");
        if (o.scheme == "fulldf")
            return {{SchemeKind::FullDF, o.alpha}};
        if (o.scheme == "eopdf")
            return {{SchemeKind::EOPDF, 0}};
        return {{SchemeKind::FullDF, o.alpha}, {SchemeKind::EOPDF, 0}};
    }

    void write(const Table &t, const Options &o)
    {
        const Format f = parse_format(o.format);
        if (o.out.empty())
            emit(t, f, std::cout);
        else
            emit(t, f, o.out);
    }

    void run_rea(const Options &o)
    {
        const CellModel model = CellModel::build(load_cell(o), load_table(o));
        const Direction dir = parse_direction(o.direction);
        std::vector<ReaResult> rows;
        for (const auto &s : relay_schemes(o))
            rows.push_back(characteristic_distances(model, dir, s));
        write(rea_table(rows, model.config), o);
    }

    void run_metrics(const Options &o)
    {
        if (!(o.beta >= 0.0 && o.beta <= 1.0))
            throw ConfigError("beta must lie in [0, 1]");
        const CellModel model = CellModel::build(load_cell(o), load_table(o));
        const Direction dir = parse_direction(o.direction);
        std::vector<std::pair<ReaResult, EnergyReport>> rows;
        for (const auto &s : relay_schemes(o))
        {
            const ReaResult rea = characteristic_distances(model, dir, s);
            if (!rea.accepted)
                throw ConfigError(to_string(s) + " configuration rejected: " + to_string(rea.reason));
            CharacteristicDistances cd = rea.cd;
            cd.r_cov = cd.r_dtx + o.beta * (rea.cd.r_cov - cd.r_dtx);
            rows.emplace_back(rea, energy_report(cd, model, dir, s, {.seed = o.seed}));
        }
        write(metrics_table(rows), o);
    }

    void run_simulate(const Options &o)
    {
        const CellModel model = CellModel::build(load_cell(o), load_table(o));
        const Direction dir = parse_direction(o.direction);
        SimOptions so;
        so.samples = o.samples;
        so.seed = o.seed;
        so.threads = o.threads;
        std::vector<std::pair<SchemeChoice, SimResult>> rows;
        if (o.scheme == "dtx")
            rows.emplace_back(SchemeChoice{}, simulate(model, dir, {SchemeChoice{}}, so));
        else
            for (const auto &s : relay_schemes(o))
                rows.emplace_back(s, simulate(model, dir, {SchemeChoice{}, s}, so));
        write(simulation_table(rows, dir), o);
    }

    void run_sweep_cmd(const Options &o, const CLI::App &cmd)
    {
        SweepSpec spec;
        if (!o.spec.empty())
        {
            const std::string base = std::filesystem::path(o.spec).parent_path().string();
            spec = sweep_spec_from_json(load_json_file(o.spec), base.empty() ? "." : base);
        }
        if (!o.config.empty() || o.relay_distance || o.relay_height || o.rate)
        {
            CellConfig cfg = o.config.empty() ? spec.cell : load_cell_config(o.config);
            if (o.relay_distance)
                cfg.relay_distance = *o.relay_distance;
            if (o.relay_height)
                cfg.relay_height = *o.relay_height;
            if (o.rate)
                cfg.rate = *o.rate;
            spec.cell = cfg;
        }
        if (cmd.count("--parameter"))
            spec.parameter = parse_sweep_parameter(o.parameter);
        if (!o.values.empty())
            spec.values = o.values;
        else if (o.start || o.stop || o.step)
        {
            if (!(o.start && o.stop && o.step))
                throw ConfigError("--start, --stop and --step go together");
            spec.values = sweep_grid(*o.start, *o.stop, *o.step);
            spec.trim_beyond_coverage = false;
        }
        else if (o.spec.empty() || cmd.count("--parameter"))
        {
            json j;
            j["parameter"] = to_string(spec.parameter);
            const SweepSpec defaults = sweep_spec_from_json(j);
            spec.values = defaults.values;
            spec.trim_beyond_coverage = defaults.trim_beyond_coverage;
        }
        if (cmd.count("--scheme") || o.spec.empty())
        {
            if (o.scheme == "all")
                spec.schemes = {{SchemeKind::DTx, 0}, {SchemeKind::FullDF, o.alpha}, {SchemeKind::EOPDF, 0}};
            else if (o.scheme == "dtx")
                spec.schemes = {{SchemeKind::DTx, 0}};
            else
                spec.schemes = relay_schemes(o);
        }
        if (cmd.count("--direction"))
            spec.direction = parse_direction(o.direction);
        if (cmd.count("--beta"))
            spec.beta = o.beta;
        if (cmd.count("--seed"))
            spec.seed = o.seed;
        if (cmd.count("--threads"))
            spec.threads = o.threads;
        write(run_sweep(spec, load_table(o)), o);
    }

    void run_validate(const Options &o)
    {
        const CellModel model = CellModel::build(load_cell(o), load_table(o));
        Table t;
        t.columns = {"link", "regime", "scenario", "los", "K", "exponent"};
        const std::string regime = to_string(model.config.regime());
        for (auto [name, link] : {std::pair{"direct", &model.links.direct}, std::pair{"user-relay", &model.links.user_relay},
                                  std::pair{"relay-bs", &model.links.relay_bs}})
            t.rows.push_back({std::string(name), regime, link->scenario.name, link->scenario.los, link->k, link->exponent});
        write(t, o);
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"Relay efficiency area model for relay-aided cellular planning"};
    app.require_subcommand(1);
    Options o;

    auto *rea = app.add_subcommand("rea", "Characteristic distances of the relay efficiency area");
    add_common(rea, o);
    add_scheme(rea, o);

    auto *metrics = app.add_subcommand("metrics", "Analytic energy report for one configuration");
    add_common(metrics, o);
    add_scheme(metrics, o);
    metrics->add_option("--beta", o.beta, "Coverage extension in [0, 1]");
    metrics->add_option("--seed", o.seed, "Seed of the EO-PDF area averages");

    auto *sim = app.add_subcommand("simulate", "Monte-Carlo user drops against the area model");
    add_common(sim, o);
    add_scheme(sim, o);
    sim->add_option("--seed", o.seed, "Random seed");
    sim->add_option("--samples", o.samples, "User drops per scheme")->check(CLI::PositiveNumber);
    sim->add_option("--threads", o.threads, "Worker threads (0: all cores); results do not depend on it");

    auto *sweep = app.add_subcommand("sweep", "Parameter sweep over D_r, H_R, rate or beta");
    add_common(sweep, o);
    add_scheme(sweep, o);
    sweep->add_option("--spec", o.spec, "Sweep specification (JSON)")->check(CLI::ExistingFile);
    sweep->add_option("--parameter", o.parameter, "relay_distance_m | relay_height_m | rate_bps_hz | beta");
    sweep->add_option("--start", o.start, "First value");
    sweep->add_option("--stop", o.stop, "Last value");
    sweep->add_option("--step", o.step, "Step");
    sweep->add_option("--values", o.values, "Explicit values")->delimiter(',');
    sweep->add_option("--beta", o.beta, "Coverage extension in [0, 1]");
    sweep->add_option("--seed", o.seed, "Random seed");
    sweep->add_option("--threads", o.threads, "Worker threads (0: all cores); results do not depend on it");

    auto *validate = app.add_subcommand("validate-config", "Check a configuration and print the resolved links");
    add_common(validate, o);

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try
    {
        if (*rea)
            run_rea(o);
        else if (*metrics)
            run_metrics(o);
        else if (*sim)
            run_simulate(o);
        else if (*sweep)
            run_sweep_cmd(o, *sweep);
        else if (*validate)
            run_validate(o);
        return kExitOk;
    }
    catch (const ConfigError &e)
    {
        std::cerr << "configuration error: " << e.what() << '\n';
        return kExitConfig;
    }
    catch (const NumericalError &e)
    {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    }
    catch (const std::logic_error &e)
    {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    }
}

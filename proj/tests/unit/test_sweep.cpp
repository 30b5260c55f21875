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

#include "relayarea/errors.hpp"
#include "relayarea/sweep.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

using namespace relayarea;

namespace
{
    double num(const Value &v)
    {
        if (const auto *d = std::get_if<double>(&v))
            return *d;
        return static_cast<double>(std::get<std::int64_t>(v));
    }

    bool same(const Value &a, const Value &b)
    {
        if (const auto *x = std::get_if<double>(&a))
        {
            const auto *y = std::get_if<double>(&b);
            return y && ((std::isnan(*x) && std::isnan(*y)) || *x == *y);
        }
        return a == b;
    }

    std::string to_text(const Table &t, Format f)
    {
        std::ostringstream s;
        emit(t, f, s);
        return s.str();
    }

    SweepSpec dr_spec(std::vector<double> values, double beta)
    {
        SweepSpec s;
        s.values = std::move(values);
        s.beta = beta;
        return s;
    }
}

TEST_CASE("sweep grid")
{
    CHECK(sweep_grid(100.0, 200.0, 25.0) == std::vector<double>{100.0, 125.0, 150.0, 175.0, 200.0});
    CHECK(sweep_grid(0.0, 1.0, 0.1).size() == 11);
    CHECK_THROWS_AS(sweep_grid(0.0, 1.0, 0.0), ConfigError);
    CHECK_THROWS_AS(sweep_grid(2.0, 1.0, 1.0), ConfigError);
}

TEST_CASE("sweep spec validation")
{
    SweepSpec s;
    CHECK_THROWS_AS(s.validate(), ConfigError); // no values
    s.values = {600.0};
    CHECK_NOTHROW(s.validate());
    s.beta = 1.5;
    CHECK_THROWS_AS(s.validate(), ConfigError);
    s.beta = 0.5;
    s.schemes.clear();
    CHECK_THROWS_AS(s.validate(), ConfigError);
    CHECK(parse_sweep_parameter("D_r") == SweepParameter::RelayDistance);
    CHECK_THROWS_AS(parse_sweep_parameter("noise"), ConfigError);
}

TEST_CASE("coverage extension limits")
{
    const auto table = ScenarioTable::winner2_default();
    const Table t0 = run_sweep(dr_spec({600.0}, 0.0), table);
    const Table t1 = run_sweep(dr_spec({600.0}, 1.0), table);
    REQUIRE(t0.rows.size() == 1);
    const auto &r0 = t0.rows[0], &r1 = t1.rows[0];
    CHECK(std::get<bool>(r0[t0.column("accepted")]));
    CHECK(num(r0[t0.column("R_cov[m]")]) == num(r0[t0.column("R_DTx[m]")]));
    CHECK(num(r0[t0.column("cost_ratio")]) == 1.0);
    CHECK(num(r1[t1.column("R_cov[m]")]) == num(r1[t1.column("R_cov_max[m]")]));
    CHECK(num(r1[t1.column("cost_ratio")]) < 1.0);
}

TEST_CASE("energy gain agrees with the per-position energies at the DTx edge")
{
    const auto table = ScenarioTable::winner2_default();
    const Table t = run_sweep(dr_spec(sweep_grid(300.0, 1200.0, 100.0), 0.0), table);
    int checked = 0;
    for (const auto &row : t.rows)
    {
        if (!std::get<bool>(row[t.column("accepted")]))
            continue;
        CellConfig c;
        c.relay_distance = num(row[t.column("D_r[m]")]);
        const auto m = test_support::default_model(c);
        const double rd = num(row[t.column("R_DTx[m]")]);
        const auto g = m.gains({rd, 0.0});
        const bool relay_cheaper = fulldf_energy(g, c, Direction::Uplink, 0).total() <
                                   dtx_energy(g, c, Direction::Uplink).total();
        const double gain = num(row[t.column("energy_gain[dB]")]);
        CHECK(std::isfinite(gain));
        if (relay_cheaper)
            CHECK(gain > 0.0);
        ++checked;
    }
    CHECK(checked >= 5);
}

TEST_CASE("rejected points and per-point errors stay in the table")
{
    const auto table = ScenarioTable::winner2_default();
    SweepSpec s;
    s.parameter = SweepParameter::RelayHeight;
    s.values = {0.5, 20.0};
    const Table t = run_sweep(s, table);
    REQUIRE(t.rows.size() == 2);
    CHECK_FALSE(std::get<bool>(t.rows[0][t.column("accepted")]));
    CHECK(std::get<std::string>(t.rows[0][t.column("reason")]).rfind("error:", 0) == 0);
    CHECK(std::get<bool>(t.rows[1][t.column("accepted")]));

    const Table far = run_sweep(dr_spec({100.0, 600.0}, 1.0), table);
    CHECK(std::get<std::string>(far.rows[0][far.column("reason")]) == "coverage-below-direct");
    CHECK(std::isnan(num(far.rows[0][far.column("E_total_avg[J]")])));
}

TEST_CASE("automatic stop trims relay distances beyond the coverage")
{
    json j;
    j["parameter"] = "relay_distance_m";
    j["start"] = 1000;
    j["stop"] = "auto";
    j["step"] = 100;
    const SweepSpec s = sweep_spec_from_json(j);
    CHECK(s.trim_beyond_coverage);
    const Table t = run_sweep(s, ScenarioTable::winner2_default());
    REQUIRE_FALSE(t.rows.empty());
    const double last = num(t.rows.back()[t.column("D_r[m]")]);
    CHECK(last < 1600.0);
    CHECK(last >= 1100.0);
}

TEST_CASE("sweep output is a pure function of its inputs")
{
    SweepSpec s = dr_spec(sweep_grid(400.0, 800.0, 100.0), 0.5);
    s.schemes = {{SchemeKind::DTx, 0}, {SchemeKind::FullDF, 0}, {SchemeKind::EOPDF, 0}};
    s.threads = 1;
    const auto table = ScenarioTable::winner2_default();
    const std::string a = to_text(run_sweep(s, table), Format::Csv);
    s.threads = 3;
    const std::string b = to_text(run_sweep(s, table), Format::Csv);
    CHECK(a == b);
    s.seed = 99;
    CHECK(to_text(run_sweep(s, table), Format::Csv) != a); // EO-PDF averages follow the seed
}

TEST_CASE("trade-off envelope over beta has an interior minimum in D_r")
{
    const auto table = ScenarioTable::winner2_default();
    SweepSpec s;
    s.cell.rate = 5.0;
    s.values = sweep_grid(250.0, 600.0, 5.0);
    std::vector<double> env(s.values.size(), std::numeric_limits<double>::infinity());
    for (double beta : {0.0, 0.25, 0.5, 0.75, 1.0})
    {
        s.beta = beta;
        const Table t = run_sweep(s, table);
        for (std::size_t i = 0; i < t.rows.size(); ++i)
            if (std::get<bool>(t.rows[i][t.column("accepted")]))
                env[i] = std::min(env[i], num(t.rows[i][t.column("E_per_area[J/m2]")]));
    }
    std::size_t first = 0, last = env.size() - 1;
    while (first < env.size() && !std::isfinite(env[first]))
        ++first;
    while (last > first && !std::isfinite(env[last]))
        --last;
    REQUIRE(last > first + 1);
    const auto best = std::min_element(env.begin() + first, env.begin() + last + 1) - env.begin();
    CHECK(static_cast<std::size_t>(best) > first);
    CHECK(static_cast<std::size_t>(best) < last);
}

TEST_CASE("emit: header-only table, round trip and format agreement")
{
    Table empty;
    empty.columns = {"a[m]", "b"};
    CHECK(to_text(empty, Format::Csv) == "a[m],b\n");

    Table t;
    t.columns = {"i", "x", "flag", "name"};
    t.rows = {{std::int64_t{3}, 0.1 + 0.2, true, std::string("fulldf")},
              {std::int64_t{-1}, std::nan(""), false, std::string("with,comma")},
              {std::int64_t{0}, 1e-300, true, std::string("")},
              {std::int64_t{7}, 600.0, false, std::string("say \"hi\"")}};
    std::istringstream in(to_text(t, Format::Csv));
    const Table back = read_csv(in);
    REQUIRE(back.columns == t.columns);
    REQUIRE(back.rows.size() == t.rows.size());
    for (std::size_t r = 0; r < t.rows.size(); ++r)
        for (std::size_t c = 0; c < t.columns.size(); ++c)
            CHECK(same(back.rows[r][c], t.rows[r][c]));

    const json j = json::parse(to_text(t, Format::Json));
    CHECK(j.at("columns").get<std::vector<std::string>>() == t.columns);
    for (std::size_t r = 0; r < t.rows.size(); ++r)
    {
        const auto &row = j.at("rows")[r];
        CHECK(row.at("i").get<std::int64_t>() == std::get<std::int64_t>(t.rows[r][0]));
        const double x = std::get<double>(t.rows[r][1]);
        if (std::isnan(x))
            CHECK(row.at("x").is_null());
        else
            CHECK(row.at("x").get<double>() == x);
        CHECK(row.at("flag").get<bool>() == std::get<bool>(t.rows[r][2]));
        CHECK(row.at("name").get<std::string>() == std::get<std::string>(t.rows[r][3]));
    }

    // Sweep output survives the CSV round trip unchanged
    const Table sweep = run_sweep(dr_spec({500.0, 2500.0}, 1.0), ScenarioTable::winner2_default());
    std::istringstream sin(to_text(sweep, Format::Csv));
    const Table sback = read_csv(sin);
    CHECK(to_text(sback, Format::Csv) == to_text(sweep, Format::Csv));
}

TEST_CASE("emit to a file reports the path on failure")
{
    Table t;
    t.columns = {"a"};
    const auto dir = std::filesystem::temp_directory_path() / "relayarea_emit_test";
    std::filesystem::create_directories(dir);
    const std::string path = (dir / "out.csv").string();
    emit(t, Format::Csv, path);
    std::ifstream f(path);
    std::string line;
    std::getline(f, line);
    CHECK(line == "a");
    try
    {
        emit(t, Format::Csv, (dir / "missing" / "out.csv").string());
        FAIL("expected an I/O error");
    }
    catch (const std::runtime_error &e)
    {
        CHECK(std::string(e.what()).find("missing") != std::string::npos);
    }
}

TEST_CASE("column selection")
{
    SweepSpec s = dr_spec({600.0}, 1.0);
    s.columns = {"value", "R_cov[m]"};
    const Table t = run_sweep(s, ScenarioTable::winner2_default());
    CHECK(t.columns == s.columns);
    CHECK(t.rows[0].size() == 2);
    s.columns = {"nope"};
    CHECK_THROWS_AS(run_sweep(s, ScenarioTable::winner2_default()), ConfigError);
}

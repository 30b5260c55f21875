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

#include "relayarea/table.hpp"
#include "relayarea/errors.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>

namespace relayarea
{
    std::size_t Table::column(const std::string &name) const
    {
        for (std::size_t i = 0; i < columns.size(); ++i)
            if (columns[i] == name)
                return i;
        throw ConfigError("unknown column '" + name + "'");
    }

    Table Table::select(const std::vector<std::string> &names) const
    {
        std::vector<std::size_t> idx;
        for (const auto &n : names)
            idx.push_back(column(n));
        Table out;
        out.columns = names;
        for (const auto &row : rows)
        {
            std::vector<Value> r;
            for (auto i : idx)
                r.push_back(row[i]);
            out.rows.push_back(std::move(r));
        }
        return out;
    }

    Format parse_format(const std::string &text)
    {
        if (text == "csv")
            return Format::Csv;
        if (text == "json")
            return Format::Json;
        throw ConfigError("unknown format '" + text + "'");
    }

    namespace
    {
        std::string format_double(double v)
        {
            if (std::isnan(v))
                return "nan";
            if (std::isinf(v))
                return v > 0 ? "inf" : "-inf";
            char buf[64];
            auto res = std::to_chars(buf, buf + sizeof(buf), v);
            std::string s(buf, res.ptr);
            // Keep doubles distinguishable from integers when read back
            if (s.find_first_of(".e") == std::string::npos)
                s += ".0";
            return s;
        }

        std::string csv_escape(const std::string &s)
        {
            if (s.find_first_of(",\"\n") == std::string::npos)
                return s;
            std::string out = "\"";
            for (char c : s)
            {
                if (c == '"')
                    out += '"';
                out += c;
            }
            return out + "\"";
        }
    }

    std::string format_value(const Value &v)
    {
        struct Visitor
        {
            std::string operator()(double d) const { return format_double(d); }
            std::string operator()(std::int64_t i) const { return std::to_string(i); }
            std::string operator()(bool b) const { return b ? "true" : "false"; }
            std::string operator()(const std::string &s) const { return s; }
        };
        return std::visit(Visitor{}, v);
    }

    void emit(const Table &table, Format format, std::ostream &out)
    {
        if (format == Format::Csv)
        {
            for (std::size_t i = 0; i < table.columns.size(); ++i)
                out << (i ? "," : "") << csv_escape(table.columns[i]);
            out << '\n';
            for (const auto &row : table.rows)
            {
                for (std::size_t i = 0; i < row.size(); ++i)
                    out << (i ? "," : "") << csv_escape(format_value(row[i]));
                out << '\n';
            }
            return;
        }
        nlohmann::ordered_json j;
        j["columns"] = table.columns;
        j["rows"] = nlohmann::ordered_json::array();
        for (const auto &row : table.rows)
        {
            nlohmann::ordered_json r = nlohmann::ordered_json::object();
            for (std::size_t i = 0; i < row.size(); ++i)
            {
                const std::string &key = table.columns[i];
                std::visit(
                    [&](const auto &v)
                    {
                        using T = std::decay_t<decltype(v)>;
                        if constexpr (std::is_same_v<T, double>)
                            r[key] = std::isfinite(v) ? nlohmann::ordered_json(v) : nlohmann::ordered_json(nullptr);
                        else
                            r[key] = v;
                    },
                    row[i]);
            }
            j["rows"].push_back(std::move(r));
        }
        out << j.dump(2) << '\n';
    }

    void emit(const Table &table, Format format, const std::string &path)
    {
        std::ofstream out(path, std::ios::binary);
        if (!out)
            throw std::runtime_error("cannot open '" + path + "' for writing");
        emit(table, format, out);
        if (!out)
            throw std::runtime_error("write to '" + path + "' failed");
    }

    namespace
    {
        std::vector<std::pair<std::string, bool>> split_csv_line(const std::string &line)
        {
            std::vector<std::pair<std::string, bool>> cells;
            std::string cur;
            bool quoted = false, in_quotes = false;
            for (std::size_t i = 0; i < line.size(); ++i)
            {
                const char c = line[i];
                if (in_quotes)
                {
                    if (c == '"' && i + 1 < line.size() && line[i + 1] == '"')
                        cur += '"', ++i;
                    else if (c == '"')
                        in_quotes = false;
                    else
                        cur += c;
                }
                else if (c == '"')
                    in_quotes = quoted = true;
                else if (c == ',')
                {
                    cells.emplace_back(cur, quoted);
                    cur.clear();
                    quoted = false;
                }
                else
                    cur += c;
            }
            cells.emplace_back(cur, quoted);
            return cells;
        }

        Value parse_cell(const std::string &s, bool quoted)
        {
            if (quoted)
                return s;
            if (s == "true")
                return true;
            if (s == "false")
                return false;
            if (s == "nan")
                return std::nan("");
            if (s == "inf" || s == "-inf")
                return s[0] == '-' ? -HUGE_VAL : HUGE_VAL;
            const char *b = s.data(), *e = s.data() + s.size();
            if (!s.empty() && s.find_first_of(".e") == std::string::npos)
            {
                std::int64_t i = 0;
                auto r = std::from_chars(b, e, i);
                if (r.ec == std::errc() && r.ptr == e)
                    return i;
            }
            double d = 0.0;
            auto r = std::from_chars(b, e, d);
            if (!s.empty() && r.ec == std::errc() && r.ptr == e)
                return d;
            return s;
        }
    }

    Table read_csv(std::istream &in)
    {
        Table t;
        std::string line;
        if (!std::getline(in, line))
            return t;
        for (auto &[text, quoted] : split_csv_line(line))
            t.columns.push_back(text);
        while (std::getline(in, line))
        {
            if (line.empty())
                continue;
            std::vector<Value> row;
            for (auto &[text, quoted] : split_csv_line(line))
                row.push_back(parse_cell(text, quoted));
            if (row.size() != t.columns.size())
                throw ConfigError("CSV row width does not match the header");
            t.rows.push_back(std::move(row));
        }
        return t;
    }
}

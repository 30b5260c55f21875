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

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace relayarea
{
    using Value = std::variant<double, std::int64_t, bool, std::string>;

    // Column-ordered result table; column names carry their unit in brackets, e.g. "R_cov[m]"
    struct Table
    {
        std::vector<std::string> columns;
        std::vector<std::vector<Value>> rows;

        // Keep only the named columns, in the given order; throws ConfigError on an unknown name
        Table select(const std::vector<std::string> &names) const;
        std::size_t column(const std::string &name) const;
    };

    enum class Format
    {
        Csv,
        Json
    };

    Format parse_format(const std::string &text);

    // Doubles are written in shortest round-trip form; NaN is "nan" in CSV and null in JSON
    std::string format_value(const Value &v);

    void emit(const Table &table, Format format, std::ostream &out);
    void emit(const Table &table, Format format, const std::string &path);

    // Parses the CSV written by emit; cells are typed by the shape of their text
    Table read_csv(std::istream &in);
}

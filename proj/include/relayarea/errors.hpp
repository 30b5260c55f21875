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

#include <stdexcept>
#include <string>

namespace relayarea
{
    // Invalid or inconsistent configuration (CLI exit code 1)
    class ConfigError : public std::runtime_error
    {
    public:
        explicit ConfigError(const std::string &what) : std::runtime_error(what) {}
    };

    // A numerical routine failed to converge (CLI exit code 2)
    class NumericalError : public std::runtime_error
    {
    public:
        explicit NumericalError(const std::string &what) : std::runtime_error(what) {}
    };
}

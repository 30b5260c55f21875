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

#include "relayarea/config_io.hpp"
#include "relayarea/metrics.hpp"
#include "relayarea/pathloss.hpp"
#include "relayarea/rea.hpp"
#include "relayarea/schemes.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <string>

namespace test_support
{
    inline relayarea::CellModel default_model(relayarea::CellConfig cfg = {})
    {
        return relayarea::CellModel::build(cfg, relayarea::ScenarioTable::winner2_default());
    }

    inline std::string data_path(const std::string &name) { return std::string(RELAYAREA_DATA_DIR) + "/" + name; }

    // Independent adaptive quadrature for oracles
    template <class F>
    double gk(F f, double a, double b, double tol = 1e-13)
    {
        if (b <= a)
            return 0.0;
        return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 20, tol);
    }

    inline double rel_diff(double a, double b) { return std::abs(a - b) / std::max(std::abs(a), std::abs(b)); }
}

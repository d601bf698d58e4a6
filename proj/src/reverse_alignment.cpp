// SPDX-License-Identifier: Apache-2.0
//
// irss: IRS-aided electromagnetic stealth simulation and reflection design
// Copyright (C) 2026 irss contributors
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

#include "irss/optimizers.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace irss
{
    ReflectionSolution reverse_alignment(const ComplexVec &u, cdouble c, double beta_max)
    {
        if (!(beta_max > 0.0))
            throw InvalidArgument("beta_max must be positive");
        if (u.size() == 0)
            throw InvalidArgument("empty cascaded vector");
        for (Eigen::Index n = 0; n < u.size(); ++n)
            if (std::abs(std::abs(u[n]) - 1.0) > 1e-9)
                throw InvalidArgument("cascaded vector entry " + std::to_string(n) + " is not unit modulus");

        const Eigen::Index n1 = u.size();
        ReflectionSolution sol;
        sol.solver = "reverse-alignment";
        sol.theta = ComplexVec::Zero(n1);

        const double mag = std::abs(c);
        if (mag > 0.0)
        {
            const cdouble unit = c / mag;
            const double ratio = mag / beta_max;
            const auto full = static_cast<Eigen::Index>(std::floor(ratio));
            if (n1 <= full || static_cast<double>(n1) < std::ceil(ratio))
            {
                // Not enough elements to cancel C: every element at full modulus against it.
                for (Eigen::Index n = 0; n < n1; ++n)
                    sol.theta[n] = -beta_max * u[n] * unit;
            }
            else
            {
                for (Eigen::Index n = 0; n < full; ++n)
                    sol.theta[n] = -beta_max * u[n] * unit;
                const double rest = std::max(0.0, mag - static_cast<double>(full) * beta_max);
                sol.theta[full] = -rest * u[full] * unit;
            }
        }
        sol.objective = std::norm(u.dot(sol.theta) + c);
        return sol;
    }
}

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

#include <cmath>
#include <limits>

namespace irss
{
    namespace
    {
        constexpr double modulus_slack = 1e-9;

        struct SvdSystem
        {
            LeastSquaresFactor factor;
            Eigen::BDCSVD<ComplexMat> svd;
            ComplexVec projected; // U^H b
        };

        SvdSystem decompose(const ReflectionProblem &problem)
        {
            SvdSystem s{stacked_system(problem), {}, {}};
            s.svd.compute(s.factor.rows, Eigen::ComputeThinU | Eigen::ComputeThinV);
            s.projected = s.svd.matrixU().adjoint() * s.factor.offset;
            return s;
        }

        ComplexVec regularized(const SvdSystem &s, double delta)
        {
            const RealVec &sv = s.svd.singularValues();
            ComplexVec scaled(sv.size());
            for (Eigen::Index i = 0; i < sv.size(); ++i)
            {
                const double den = sv[i] * sv[i] + delta;
                scaled[i] = den > 0.0 ? s.projected[i] * (sv[i] / den) : cdouble(0.0, 0.0);
            }
            return -(s.svd.matrixV() * scaled);
        }
    }

    ComplexVec mmse_reflection(const ReflectionProblem &problem, double delta)
    {
        if (!(delta >= 0.0))
            throw InvalidArgument("delta must be nonnegative");
        return regularized(decompose(problem), delta);
    }

    MmseResult mmse_delta_search(const ReflectionProblem &problem, std::span<const double> grid)
    {
        if (grid.empty())
            throw InvalidArgument("delta grid is empty");
        const SvdSystem s = decompose(problem);
        const double cap = problem.beta_max * (1.0 + modulus_slack);

        MmseResult best;
        double best_res = std::numeric_limits<double>::infinity();
        for (double delta : grid)
        {
            if (!(delta >= 0.0))
                throw InvalidArgument("delta must be nonnegative");
            ComplexVec theta = regularized(s, delta);
            if (!(theta.cwiseAbs().maxCoeff() <= cap))
                continue;
            const double res = (s.factor.rows * theta + s.factor.offset).squaredNorm();
            if (res < best_res)
            {
                best_res = res;
                best.delta = delta;
                best.solution.theta = std::move(theta);
            }
        }
        if (!std::isfinite(best_res))
            throw InfeasibleError("no delta in the grid meets the modulus constraint");
        best.solution.objective = best_res;
        best.solution.solver = "mmse";
        best.solution.iterations = grid.size();
        return best;
    }

    std::vector<double> default_delta_grid(const ReflectionProblem &problem)
    {
        const LeastSquaresFactor f = stacked_system(problem);
        double scale = 0.0;
        if (f.rows.size() > 0)
        {
            Eigen::BDCSVD<ComplexMat> svd(f.rows);
            scale = svd.singularValues()[0] * svd.singularValues()[0];
        }
        if (!(scale > 0.0))
            scale = 1.0;
        constexpr int points = 40;
        std::vector<double> grid(points);
        for (int i = 0; i < points; ++i)
            grid[static_cast<std::size_t>(i)] = scale * std::pow(10.0, -12.0 + 16.0 * i / (points - 1));
        return grid;
    }

    MmseResult mmse_auto(const ReflectionProblem &problem)
    {
        std::vector<double> grid = default_delta_grid(problem);
        for (int attempt = 0;; ++attempt)
        {
            try
            {
                return mmse_delta_search(problem, grid);
            }
            catch (const InfeasibleError &)
            {
                if (attempt == 8)
                    throw;
                for (double &d : grid)
                    d *= 1e6;
            }
        }
    }
}

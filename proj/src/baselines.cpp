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
#include <random>

namespace irss
{
    ReflectionSolution dft_codebook_search(const QcqpInstance &instance)
    {
        const auto n = static_cast<Eigen::Index>(instance.size());
        if (n == 0)
            throw InvalidArgument("empty instance");
        ReflectionSolution best;
        best.solver = "dft-codebook";
        best.iterations = static_cast<std::size_t>(n);
        ComplexVec word(n);
        for (Eigen::Index m = 0; m < n; ++m)
        {
            for (Eigen::Index i = 0; i < n; ++i)
                word[i] = std::polar(instance.beta_max,
                                     -2.0 * pi * static_cast<double>((m * i) % n) / static_cast<double>(n));
            const double f = instance.evaluate(word);
            if (m == 0 || f < best.objective)
            {
                best.objective = f;
                best.theta = word;
            }
        }
        return best;
    }

    ComplexVec random_phase(std::size_t n1, double beta_max, std::uint64_t seed)
    {
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> phase(0.0, 2.0 * pi);
        ComplexVec theta(static_cast<Eigen::Index>(n1));
        for (Eigen::Index n = 0; n < theta.size(); ++n)
            theta[n] = std::polar(beta_max, phase(rng));
        return theta;
    }

    std::size_t min_irs_elements(double zeta_bar, std::size_t n2, double beta_max, std::size_t realizations)
    {
        if (!(zeta_bar >= 0.0 && zeta_bar <= 1.0))
            throw InvalidArgument("zeta_bar must lie in [0, 1]");
        if (!(beta_max > 0.0))
            throw InvalidArgument("beta_max must be positive");
        if (realizations < 1)
            throw InvalidArgument("realization count must be at least 1");
        // E[max of I exponentials with mean s] = s * H_I, with s = (1 - zeta_bar) N2.
        const double variance = (1.0 - zeta_bar) * static_cast<double>(n2);
        double harmonic = 0.0;
        for (std::size_t i = 1; i <= realizations; ++i)
            harmonic += 1.0 / static_cast<double>(i);
        const double needed = std::sqrt(variance * harmonic) / beta_max;
        const double n = std::ceil(needed - 1e-9);
        return n > 0.0 ? static_cast<std::size_t>(n) : 0;
    }
}

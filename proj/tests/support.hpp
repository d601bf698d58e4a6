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

// Shared fixtures and independent oracles for the test suites.
#ifndef IRSS_TESTS_SUPPORT_HPP
#define IRSS_TESTS_SUPPORT_HPP

#include "irss/channel.hpp"
#include "irss/config.hpp"
#include "irss/optimizers.hpp"
#include "irss/power_model.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

namespace irss::test
{
    inline ComplexVec random_unit_modulus(std::size_t n, std::mt19937_64 &rng)
    {
        std::uniform_real_distribution<double> ph(0.0, 2.0 * pi);
        ComplexVec u(static_cast<Eigen::Index>(n));
        for (Eigen::Index i = 0; i < u.size(); ++i)
            u[i] = std::polar(1.0, ph(rng));
        return u;
    }

    inline ComplexVec random_complex(std::size_t n, std::mt19937_64 &rng, double scale = 1.0)
    {
        std::normal_distribution<double> g(0.0, scale);
        ComplexVec v(static_cast<Eigen::Index>(n));
        for (Eigen::Index i = 0; i < v.size(); ++i)
            v[i] = cdouble(g(rng), g(rng));
        return v;
    }

    // Instance f = ||R theta + b||^2 with `rows` random rows.
    inline QcqpInstance random_instance(std::size_t n1, std::size_t rows, double beta, std::mt19937_64 &rng)
    {
        ReflectionProblem p;
        p.n1 = n1;
        p.beta_max = beta;
        std::uniform_real_distribution<double> w(0.2, 2.0);
        std::normal_distribution<double> g(0.0, 1.0);
        for (std::size_t r = 0; r < rows; ++r)
        {
            const double cscale = 0.5 * static_cast<double>(n1) * beta;
            p.links.push_back({r, 0, w(rng), random_unit_modulus(n1, rng),
                               cdouble(g(rng) * cscale, g(rng) * cscale)});
        }
        return build_instance(p);
    }

    // Independent power oracle: sum_k sum_j P_j |w_k^T H_{T->R_k} diag([theta; phi]) H_{R_j->T} w_j|^2
    // from explicit channel matrices.
    inline double channel_power_oracle(const Scenario &sc, const ComplexVec &theta, std::size_t only_k = SIZE_MAX,
                                       std::size_t only_j = SIZE_MAX)
    {
        const TargetSurface &t = sc.target;
        ComplexVec full(static_cast<Eigen::Index>(t.n1() + t.n2()));
        full << theta, t.nirs.phi;
        const std::size_t K = sc.radar_count();
        std::vector<ComplexMat> h_to_target(K); // H_{R_k -> T}, N x M
        for (std::size_t k = 0; k < K; ++k)
        {
            const Vec3 r = sc.radars[k].position - t.position;
            const double d = r.norm();
            const AnglePair at_t{std::atan2(r.x(), -r.z()), std::asin(r.y() / d)};
            const AnglePair at_r{std::atan2(-r.x(), -r.z()), std::asin(-r.y() / d)};
            const ComplexVec a_t = upa_response(t.surface_geometry(), at_t, sc.wavelength);
            const ComplexVec a_r = upa_response(sc.radars[k].geometry, at_r, sc.wavelength);
            h_to_target[k] = los_channel(a_t, a_r, path_gain(d, sc.alpha, sc.wavelength)).matrix;
        }
        double total = 0.0;
        for (std::size_t k = 0; k < K; ++k)
            for (std::size_t j = 0; j < K; ++j)
            {
                if ((only_k != SIZE_MAX && k != only_k) || (only_j != SIZE_MAX && j != only_j))
                    continue;
                const ComplexMat h_back = h_to_target[k].transpose(); // H_{T -> R_k}
                const cdouble y = (sc.radars[k].beamformer.transpose() * h_back *
                                   full.asDiagonal() * h_to_target[j] * sc.radars[j].beamformer)(0, 0);
                total += sc.radars[j].tx_power * std::norm(y);
            }
        return total;
    }

    // Exact minimum of the instance over the polar grid {a e^{j p}}: a = 0, step, ..., <= beta_max and
    // p = 0, step, ..., < 2 pi, for N1 = 1 or 2. For N1 = 2 the inner element is minimized in closed
    // form over its phase grid: for fixed theta_1 the objective depends on theta_2 through
    // U22 a^2 + 2 a |g| cos(p - arg g) with g = U21 theta_1 + v2, so only the two grid phases around
    // arg g + pi can win.
    inline double polar_grid_minimum(const QcqpInstance &inst, double step = 0.01)
    {
        const auto n_amp = static_cast<int>(std::floor(inst.beta_max / step + 1e-9));
        const auto n_ph = static_cast<int>(std::floor(2.0 * pi / step)) + 1;
        std::vector<cdouble> points;
        points.reserve(static_cast<std::size_t>((n_amp + 1) * n_ph));
        for (int a = 0; a <= n_amp; ++a)
            for (int p = 0; p < n_ph; ++p)
                points.push_back(std::polar(a * step, p * step));
        const ComplexMat &U = inst.quad;
        const ComplexVec &v = inst.lin;
        double best = std::numeric_limits<double>::infinity();
        if (inst.size() == 1)
        {
            for (cdouble t : points)
                best = std::min(best, U(0, 0).real() * std::norm(t) + 2.0 * std::real(std::conj(v[0]) * t) +
                                          inst.constant);
            return best;
        }
        if (inst.size() != 2)
            throw InvalidArgument("polar_grid_minimum handles N1 = 1 or 2");
        const double u22 = U(1, 1).real();
        for (cdouble t1 : points)
        {
            const double head =
                U(0, 0).real() * std::norm(t1) + 2.0 * std::real(std::conj(v[0]) * t1) + inst.constant;
            const cdouble g = U(1, 0) * t1 + v[1];
            double target = std::arg(g) + pi;
            if (target >= 2.0 * pi)
                target -= 2.0 * pi;
            const int lo = std::min(static_cast<int>(std::floor(target / step)), n_ph - 1);
            const int hi = lo + 1 < n_ph ? lo + 1 : 0;
            for (int p : {lo, hi})
            {
                const double c = std::cos(p * step - std::arg(g));
                for (int a = 0; a <= n_amp; ++a)
                {
                    const double r = a * step;
                    best = std::min(best, head + u22 * r * r + 2.0 * r * std::abs(g) * c);
                }
            }
        }
        return best;
    }

    // Upper bound on grid minimum minus the true minimum: every point within per-element distance
    // step/2 * (1 + beta) of a grid point, so the gap is at most 2 |grad| h + L h^2.
    inline double polar_grid_gap(const QcqpInstance &inst, const ComplexVec &opt, double step = 0.01)
    {
        const double h = std::sqrt(static_cast<double>(inst.size())) * 0.5 * step * (1.0 + inst.beta_max);
        const double lmax = Eigen::SelfAdjointEigenSolver<ComplexMat>(inst.quad).eigenvalues().maxCoeff();
        return 2.0 * inst.gradient(opt).norm() * h + lmax * h * h;
    }

    inline Scenario single_scenario(std::uint64_t seed = 7) { return build_scenario(default_single_radar_config(), seed); }
    inline Scenario three_scenario(std::uint64_t seed = 7) { return build_scenario(default_three_radar_config(), seed); }
}

#endif

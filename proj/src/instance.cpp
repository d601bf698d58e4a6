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
    double ReflectionProblem::evaluate(const ComplexVec &theta) const
    {
        if (static_cast<std::size_t>(theta.size()) != n1)
            throw InvalidArgument("theta length does not match the problem");
        double total = 0.0;
        for (const LinkTerm &l : links)
            total += l.weight * std::norm(l.u.dot(theta) + l.c);
        return total;
    }

    std::size_t ReflectionProblem::radar_count() const
    {
        std::size_t k = 0;
        for (const LinkTerm &l : links)
            k = std::max({k, l.k + 1, l.j + 1});
        return k;
    }

    ReflectionProblem reflection_problem(const Scenario &scenario)
    {
        scenario.validate();
        const GainSet gains = beamforming_gains(scenario);
        const TargetSurface &t = scenario.target;
        const std::size_t K = scenario.radar_count();

        std::vector<ComplexVec> irs(K);
        for (std::size_t k = 0; k < K; ++k)
            irs[k] = split_ts_response(ts_response(scenario, k), t.n1x, t.n2x, t.ny).irs;

        ReflectionProblem p;
        p.n1 = t.n1();
        p.beta_max = t.beta_max;
        for (std::size_t k = 0; k < K; ++k)
            for (std::size_t j = 0; j < K; ++j)
            {
                const double w =
                    scenario.radars[j].tx_power * std::norm(gains.g_rx[k]) * std::norm(gains.g_tx[j]);
                p.links.push_back({k, j, w, cascaded_response(irs[k], irs[j]),
                                   gains.c_nirs(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j))});
            }
        return p;
    }

    ReflectionProblem reflection_problem(const TargetSurface &target, double wavelength,
                                         std::span<const AnglePair> aoas, std::span<const double> g2_tx,
                                         std::span<const double> g2_rx)
    {
        const std::size_t K = aoas.size();
        if (K == 0 || g2_tx.size() != K || g2_rx.size() != K)
            throw InvalidArgument("need one AoA and one gain pair per radar");
        if (static_cast<std::size_t>(target.nirs.phi.size()) != target.n2())
            throw InvalidArgument("NIRS coefficient count does not match n2x * ny");

        std::vector<TsSplit> parts;
        parts.reserve(K);
        for (const AnglePair &a : aoas)
        {
            a.validate();
            parts.push_back(split_ts_response(upa_response(target.surface_geometry(), a, wavelength), target.n1x,
                                              target.n2x, target.ny));
        }

        ReflectionProblem p;
        p.n1 = target.n1();
        p.beta_max = target.beta_max;
        for (std::size_t k = 0; k < K; ++k)
            for (std::size_t j = 0; j < K; ++j)
            {
                if (!(g2_rx[k] >= 0.0 && g2_tx[j] >= 0.0))
                    throw InvalidArgument("gain estimates must be nonnegative");
                const cdouble c = parts[k].nirs.cwiseProduct(parts[j].nirs).cwiseProduct(target.nirs.phi).sum();
                p.links.push_back(
                    {k, j, g2_rx[k] * g2_tx[j], cascaded_response(parts[k].irs, parts[j].irs), c});
            }
        return p;
    }

    LeastSquaresFactor stacked_system(const ReflectionProblem &problem)
    {
        const auto rows = static_cast<Eigen::Index>(problem.links.size());
        const auto n = static_cast<Eigen::Index>(problem.n1);
        LeastSquaresFactor f{ComplexMat(rows, n), ComplexVec(rows)};
        for (Eigen::Index r = 0; r < rows; ++r)
        {
            const LinkTerm &l = problem.links[static_cast<std::size_t>(r)];
            if (l.u.size() != n)
                throw InvalidArgument("link vector length does not match n1");
            if (!(l.weight >= 0.0))
                throw InvalidArgument("link weights must be nonnegative");
            const double s = std::sqrt(l.weight);
            f.rows.row(r) = s * l.u.adjoint();
            f.offset[r] = s * l.c;
        }
        return f;
    }

    QcqpInstance build_instance(const ReflectionProblem &problem)
    {
        if (problem.n1 == 0)
            throw InvalidArgument("problem has no IRS elements");
        LeastSquaresFactor f = stacked_system(problem);
        QcqpInstance inst;
        inst.quad = f.rows.adjoint() * f.rows;
        inst.lin = f.rows.adjoint() * f.offset;
        inst.constant = f.offset.squaredNorm();
        inst.beta_max = problem.beta_max;
        inst.factor = std::move(f);
        return inst;
    }

    QcqpInstance build_instance(const Scenario &scenario)
    {
        return build_instance(reflection_problem(scenario));
    }

    QcqpInstance single_radar_instance(const ComplexVec &u, cdouble c, double beta_max)
    {
        ReflectionProblem p;
        p.n1 = static_cast<std::size_t>(u.size());
        p.beta_max = beta_max;
        p.links.push_back({0, 0, 1.0, u, c});
        return build_instance(p);
    }

    double QcqpInstance::evaluate(const ComplexVec &theta) const
    {
        if (theta.size() != lin.size())
            throw InvalidArgument("theta length does not match the instance");
        if (factor)
            return (factor->rows * theta + factor->offset).squaredNorm();
        return std::real(theta.dot(quad * theta)) + 2.0 * std::real(lin.dot(theta)) + constant;
    }

    ComplexVec QcqpInstance::apply(const ComplexVec &theta) const
    {
        if (factor && factor->rows.rows() < factor->rows.cols())
            return factor->rows.adjoint() * (factor->rows * theta);
        return quad * theta;
    }

    double QcqpInstance::lipschitz() const
    {
        const Eigen::Index n = lin.size();
        if (n == 0)
            return 0.0;
        // Deterministic start with no special alignment to any array response.
        ComplexVec x(n);
        for (Eigen::Index i = 0; i < n; ++i)
            x[i] = std::polar(1.0, 0.7 * static_cast<double>(i * i) + 0.3 * static_cast<double>(i));
        x.normalize();

        double est = 0.0;
        for (int it = 0; it < 5000; ++it)
        {
            ComplexVec y = apply(x);
            const double norm = y.norm();
            if (norm == 0.0)
                return 0.0;
            const double next = std::real(x.dot(y));
            x = y / norm;
            if (it > 10 && std::abs(next - est) <= 1e-14 * std::abs(next))
                return std::max(next, norm);
            est = next;
        }
        return est;
    }

    ComplexVec project_modulus(const ComplexVec &theta, double beta_max)
    {
        ComplexVec out = theta;
        for (Eigen::Index n = 0; n < out.size(); ++n)
        {
            const double m = std::abs(out[n]);
            if (m > beta_max)
                out[n] *= beta_max / m;
        }
        return out;
    }
}

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
#include <optional>
#include <vector>
#include <string>

namespace irss
{
    namespace
    {
        constexpr std::size_t polish_every = 500;

        // f from a cached U x, without another matvec.
        double value_from(const QcqpInstance &inst, const ComplexVec &x, const ComplexVec &ux)
        {
            return std::real(x.dot(ux)) + 2.0 * std::real(inst.lin.dot(x)) + inst.constant;
        }

        ReflectionSolution finish(const QcqpInstance &inst, ComplexVec theta, std::size_t iterations)
        {
            ReflectionSolution sol;
            sol.objective = inst.evaluate(theta);
            sol.theta = std::move(theta);
            sol.solver = "pgd";
            sol.iterations = iterations;
            const KktCertificate cert = kkt_certificate(inst, sol);
            sol.kkt_residual = cert.residual;
            sol.multipliers = cert.multipliers;
            return sol;
        }

        // Newton ascent on the dual restricted to the elements at full modulus:
        // lambda_A solves |theta_n(lambda)|^2 = beta^2 with theta(lambda) = -(U + diag lambda)^{-1} v.
        // Returns nothing when U + diag(lambda) is singular or the iteration stalls.
        std::optional<ComplexVec> dual_newton_polish(const QcqpInstance &inst, const ComplexVec &x, const ComplexVec &ux)
        {
            const double beta = inst.beta_max;
            const Eigen::Index n = x.size();
            const ComplexVec g = ux + inst.lin;
            std::vector<Eigen::Index> active;
            RealVec lambda = RealVec::Zero(n);
            for (Eigen::Index i = 0; i < n; ++i)
                if (std::abs(x[i]) >= beta * (1.0 - 1e-7))
                {
                    active.push_back(i);
                    lambda[i] = std::max(0.0, -std::real(std::conj(x[i]) * g[i])) / (beta * beta);
                }
            if (active.empty())
                return std::nullopt;
            const auto na = static_cast<Eigen::Index>(active.size());
            ComplexVec theta;
            for (int it = 0; it < 30; ++it)
            {
                ComplexMat m = inst.quad;
                m.diagonal() += lambda.cast<cdouble>();
                Eigen::LLT<ComplexMat> llt(m);
                if (llt.info() != Eigen::Success || !(llt.rcond() >= 1e-13))
                    return std::nullopt;
                theta = -llt.solve(inst.lin);
                RealVec resid(na);
                for (Eigen::Index a = 0; a < na; ++a)
                    resid[a] = std::norm(theta[active[static_cast<std::size_t>(a)]]) - beta * beta;
                if (resid.cwiseAbs().maxCoeff() <= 1e-15 * beta * beta)
                    break;
                const ComplexMat w = llt.solve(ComplexMat::Identity(n, n));
                RealMat hess(na, na);
                for (Eigen::Index a = 0; a < na; ++a)
                    for (Eigen::Index b = 0; b < na; ++b)
                    {
                        const Eigen::Index i = active[static_cast<std::size_t>(a)];
                        const Eigen::Index j = active[static_cast<std::size_t>(b)];
                        hess(a, b) = 2.0 * std::real(std::conj(theta[i]) * w(i, j) * theta[j]);
                    }
                // d|theta_i|^2 / d lambda_j = -hess(i, j)
                Eigen::LDLT<RealMat> ldlt(hess);
                if (ldlt.info() != Eigen::Success)
                    return std::nullopt;
                const RealVec step = ldlt.solve(resid);
                if (!step.allFinite())
                    return std::nullopt;
                for (Eigen::Index a = 0; a < na; ++a)
                {
                    double &l = lambda[active[static_cast<std::size_t>(a)]];
                    l = std::max(0.0, l + step[a]);
                }
            }
            return project_modulus(theta, beta);
        }
    }

    ReflectionSolution solve_pgd(const QcqpInstance &inst, const PgdOptions &options)
    {
        if (!(options.tol > 0.0))
            throw InvalidArgument("pgd tolerance must be positive");
        if (!(inst.beta_max > 0.0))
            throw InvalidArgument("beta_max must be positive");
        const Eigen::Index n = inst.lin.size();
        if (n == 0)
            throw InvalidArgument("empty instance");
        const double beta = inst.beta_max;

        const double lmax = inst.lipschitz();
        if (!(lmax > 0.0))
        {
            // Linear objective: push every element against its gradient.
            ComplexVec theta = ComplexVec::Zero(n);
            for (Eigen::Index i = 0; i < n; ++i)
                if (std::abs(inst.lin[i]) > 0.0)
                    theta[i] = -beta * inst.lin[i] / std::abs(inst.lin[i]);
            return finish(inst, std::move(theta), 0);
        }
        const double L = lmax * (1.0 + 1e-6);
        const double stop = options.tol * beta * std::sqrt(static_cast<double>(n));

        ComplexVec x = options.start ? project_modulus(*options.start, beta) : ComplexVec::Zero(n);
        if (x.size() != n)
            throw InvalidArgument("start point length does not match the instance");
        ComplexVec ux = inst.apply(x);
        double fx = value_from(inst, x, ux);
        ComplexVec y = x;
        ComplexVec uy = ux;
        double t = 1.0;

        ComplexVec best = x;
        double best_f = fx;

        for (std::size_t it = 1; it <= options.max_iter; ++it)
        {
            const ComplexVec mapped = project_modulus(x - (ux + inst.lin) / L, beta);
            if ((x - mapped).norm() <= stop)
                return finish(inst, std::move(x), it - 1);

            if (it % polish_every == 0)
                if (std::optional<ComplexVec> p = dual_newton_polish(inst, x, ux))
                {
                    const ComplexVec up = inst.apply(*p);
                    const double fp = value_from(inst, *p, up);
                    if ((*p - project_modulus(*p - (up + inst.lin) / L, beta)).norm() <= stop)
                        return finish(inst, std::move(*p), it);
                    if (fp < fx)
                    {
                        x = std::move(*p);
                        ux = up;
                        fx = fp;
                        y = x;
                        uy = ux;
                        t = 1.0;
                        if (fx < best_f)
                        {
                            best_f = fx;
                            best = x;
                        }
                        continue;
                    }
                }

            ComplexVec xn = project_modulus(y - (uy + inst.lin) / L, beta);
            ComplexVec uxn = inst.apply(xn);
            const double fn = value_from(inst, xn, uxn);

            if (fn > fx && t > 1.0)
            {
                y = x;
                uy = ux;
                t = 1.0;
                continue;
            }

            const double tn = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t * t));
            const double m = (t - 1.0) / tn;
            y = xn + m * (xn - x);
            uy = uxn + m * (uxn - ux);
            x = std::move(xn);
            ux = std::move(uxn);
            fx = fn;
            t = tn;
            if (fx < best_f)
            {
                best_f = fx;
                best = x;
            }
        }

        ReflectionSolution partial;
        partial.objective = inst.evaluate(best);
        partial.theta = std::move(best);
        partial.solver = "pgd";
        partial.iterations = options.max_iter;
        throw ConvergenceFailure("pgd did not reach tolerance in " + std::to_string(options.max_iter) +
                                     " iterations",
                                 std::move(partial));
    }
}

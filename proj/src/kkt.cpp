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
        constexpr double active_fraction = 1.0 - 1e-7;

        void check_multipliers(const QcqpInstance &inst, const RealVec &lambda)
        {
            if (lambda.size() != inst.lin.size())
                throw InvalidArgument("multiplier length does not match the instance");
            for (Eigen::Index i = 0; i < lambda.size(); ++i)
                if (!(lambda[i] >= 0.0))
                    throw InvalidArgument("multipliers must be nonnegative");
        }
    }

    ComplexVec lagrange_semiclosed(const QcqpInstance &inst, const RealVec &lambda)
    {
        check_multipliers(inst, lambda);
        ComplexMat m = inst.quad;
        m.diagonal() += lambda.cast<cdouble>();
        Eigen::LLT<ComplexMat> llt(m);
        if (llt.info() != Eigen::Success || !(llt.rcond() >= 1e-12))
            throw SingularMatrixError("U + diag(lambda) is singular to working precision");
        return -llt.solve(inst.lin);
    }

    KktCertificate kkt_certificate(const QcqpInstance &inst, const ReflectionSolution &solution)
    {
        const ComplexVec &theta = solution.theta;
        if (theta.size() != inst.lin.size())
            throw InvalidArgument("solution length does not match the instance");
        const double beta = inst.beta_max;
        const ComplexVec g = inst.gradient(theta);

        KktCertificate cert;
        cert.multipliers = RealVec::Zero(theta.size());
        RealVec slack(theta.size());
        for (Eigen::Index n = 0; n < theta.size(); ++n)
        {
            const double mod = std::abs(theta[n]);
            if (mod >= beta * active_fraction)
                cert.multipliers[n] = std::max(0.0, -std::real(std::conj(theta[n]) * g[n]) / (mod * mod));
            slack[n] = cert.multipliers[n] * (beta * beta - mod * mod);
        }
        cert.stationarity = (g + cert.multipliers.cast<cdouble>().cwiseProduct(theta)).norm();
        cert.slackness = slack.norm();
        cert.residual = cert.stationarity + cert.slackness;
        return cert;
    }

    double dual_value(const QcqpInstance &inst, const RealVec &lambda)
    {
        check_multipliers(inst, lambda);
        ComplexMat m = inst.quad;
        m.diagonal() += lambda.cast<cdouble>();
        Eigen::SelfAdjointEigenSolver<ComplexMat> eig(m);
        if (eig.info() != Eigen::Success)
            throw SingularMatrixError("eigendecomposition failed");
        const RealVec &ev = eig.eigenvalues();
        const ComplexVec w = eig.eigenvectors().adjoint() * inst.lin;
        const double top = ev.size() ? std::max(ev.maxCoeff(), 0.0) : 0.0;
        const double cutoff = 1e-12 * top;
        const double vnorm = inst.lin.norm();

        double quad = 0.0;
        for (Eigen::Index i = 0; i < ev.size(); ++i)
        {
            if (ev[i] > cutoff && ev[i] > 0.0)
                quad += std::norm(w[i]) / ev[i];
            else if (std::abs(w[i]) > 1e-8 * vnorm)
                return -std::numeric_limits<double>::infinity();
        }
        return inst.constant - inst.beta_max * inst.beta_max * lambda.sum() - quad;
    }
}

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

#ifndef IRSS_OPTIMIZERS_HPP
#define IRSS_OPTIMIZERS_HPP

#include "irss/power_model.hpp"
#include "irss/types.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace irss
{
    // One (receive radar k, transmit radar j) echo term of the objective:
    // weight * |u^H theta + c|^2.
    struct LinkTerm
    {
        std::size_t k = 0;
        std::size_t j = 0;
        double weight = 0.0; // |G_{R,k}|^2 |G_{T,j}|^2 (times P_j when built from a scenario)
        ComplexVec u;        // IRS part of the cascaded response
        cdouble c;           // NIRS reflection gain u~^H phi
    };

    // What the target needs to know to design its reflection.
    struct ReflectionProblem
    {
        std::size_t n1 = 0;
        double beta_max = 1.0;
        std::vector<LinkTerm> links;

        double evaluate(const ComplexVec &theta) const;
        std::size_t radar_count() const;
    };

    // From ground truth: weights P_j |G_{R,k}|^2 |G_{T,j}|^2, so evaluate() is the sum power in watts.
    ReflectionProblem reflection_problem(const Scenario &scenario);

    // From target-side knowledge: AoAs at the target and (possibly P-scaled) |G|^2 estimates.
    ReflectionProblem reflection_problem(const TargetSurface &target, double wavelength,
                                         std::span<const AnglePair> aoas, std::span<const double> g2_tx,
                                         std::span<const double> g2_rx);

    // f(theta) = ||rows * theta + offset||^2
    struct LeastSquaresFactor
    {
        ComplexMat rows;
        ComplexVec offset;
    };

    // min theta^H U theta + 2 Re(v^H theta) + c  s.t. |theta_n| <= beta_max
    struct QcqpInstance
    {
        ComplexMat quad;     // U~, Hermitian PSD
        ComplexVec lin;      // v~
        double constant = 0; // C~
        double beta_max = 1.0;
        std::optional<LeastSquaresFactor> factor;

        std::size_t size() const { return static_cast<std::size_t>(lin.size()); }
        double evaluate(const ComplexVec &theta) const;
        ComplexVec apply(const ComplexVec &theta) const; // U~ theta
        ComplexVec gradient(const ComplexVec &theta) const { return apply(theta) + lin; }
        double lipschitz() const;                        // lambda_max(U~), power iteration
    };

    QcqpInstance build_instance(const ReflectionProblem &problem);
    QcqpInstance build_instance(const Scenario &scenario);

    // K = 1 data: (u u^H, C u, |C|^2).
    QcqpInstance single_radar_instance(const ComplexVec &u, cdouble c, double beta_max);

    struct ReflectionSolution
    {
        ComplexVec theta;
        double objective = 0.0;
        std::string solver;
        std::size_t iterations = 0;
        std::optional<double> kkt_residual;
        std::optional<RealVec> multipliers;
    };

    class ConvergenceFailure : public Error
    {
    public:
        ConvergenceFailure(const std::string &what, ReflectionSolution best)
            : Error(ErrorCode::convergence, what), best_(std::move(best)) {}
        const ReflectionSolution &best() const noexcept { return best_; }

    private:
        ReflectionSolution best_;
    };

    struct PgdOptions
    {
        double tol = 1e-10;             // on ||theta - proj(theta - grad/L)||, relative to beta_max sqrt(N1)
        std::size_t max_iter = 100000;
        std::optional<ComplexVec> start;
    };

    // Accelerated projected gradient with function-value restart. Attaches the KKT certificate.
    ReflectionSolution solve_pgd(const QcqpInstance &instance, const PgdOptions &options = {});

    // -(U~ + diag(lambda))^{-1} v~
    ComplexVec lagrange_semiclosed(const QcqpInstance &instance, const RealVec &lambda);

    struct KktCertificate
    {
        RealVec multipliers;
        double stationarity = 0.0;
        double slackness = 0.0;
        double residual = 0.0; // stationarity + slackness
    };

    KktCertificate kkt_certificate(const QcqpInstance &instance, const ReflectionSolution &solution);

    // g(lambda) = C~ - beta^2 1^T lambda - v~^H (U~ + diag lambda)^+ v~, or -inf when v~ leaves the range.
    double dual_value(const QcqpInstance &instance, const RealVec &lambda);

    // Closed-form single-radar design; objective is |u^H theta + C|^2.
    ReflectionSolution reverse_alignment(const ComplexVec &u, cdouble c, double beta_max);

    // Stacked echo system D theta = -E phi with rows sqrt(w_{k,j}) u_{k,j}^H and right side sqrt(w) c.
    LeastSquaresFactor stacked_system(const ReflectionProblem &problem);

    // -(D^H D + delta I)^{-1} D^H E phi
    ComplexVec mmse_reflection(const ReflectionProblem &problem, double delta);

    struct MmseResult
    {
        double delta = 0.0;
        ReflectionSolution solution;
    };

    // Among grid candidates whose solution meets the modulus constraint, the one with the smallest
    // residual ||D theta + E phi||^2. Throws InfeasibleError when no candidate is feasible.
    MmseResult mmse_delta_search(const ReflectionProblem &problem, std::span<const double> grid);

    // 40 points log-spaced over [1e-12, 1e4] * lambda_max(D^H D).
    std::vector<double> default_delta_grid(const ReflectionProblem &problem);

    // Default grid, widened upward by 1e6 until a feasible delta appears.
    MmseResult mmse_auto(const ReflectionProblem &problem);

    // Columns of the N1 x N1 DFT matrix at modulus beta_max; lowest index wins ties.
    ReflectionSolution dft_codebook_search(const QcqpInstance &instance);

    ComplexVec random_phase(std::size_t n1, double beta_max, std::uint64_t seed);

    // ceil(sqrt(sum_{i=1..I} (1 - zeta_bar) N2 / (i beta_max^2)))
    std::size_t min_irs_elements(double zeta_bar, std::size_t n2, double beta_max, std::size_t realizations);

    // Element-wise modulus clamp onto |theta_n| <= beta_max.
    ComplexVec project_modulus(const ComplexVec &theta, double beta_max);
}

#endif

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

#ifndef IRSS_ESTIMATION_HPP
#define IRSS_ESTIMATION_HPP

#include "irss/arrays.hpp"
#include "irss/optimizers.hpp"
#include "irss/power_model.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace irss
{
    struct SnapshotSet
    {
        ComplexMat samples;             // L x T
        std::vector<double> sample_times;
        double noise_power = 0.0;       // sigma_S^2
        ArrayGeometry array;            // CSSA that produced the samples
        double wavelength = 0.0;
        double pri = 0.0;
        double pulse = 0.0;             // sampling window is [0, pulse)
    };

    // z(t_i) = A_S s(t_i) + n_S(t_i), s_k(t) = G_{T,k} x_k(t), t_i uniform over [0, t_p).
    SnapshotSet collect_snapshots(const Scenario &scenario, std::size_t n_snapshots, std::uint64_t seed);

    struct MusicOptions
    {
        double grid_step = deg2rad(1.0);     // coarse 2D grid
        double refine_step = deg2rad(0.01);  // local refinement grid, must divide grid_step
    };

    struct AoaEstimate
    {
        std::vector<AnglePair> angles;       // strongest peak first
        RealMat spectrum;                    // pseudo-spectrum on the coarse grid (azimuth x elevation)
        std::vector<double> azimuth_grid;
        std::vector<double> elevation_grid;
        double grid_step = 0.0;
    };

    class EstimationFailure : public Error
    {
    public:
        EstimationFailure(const std::string &what, AoaEstimate partial)
            : Error(ErrorCode::estimation, what), partial_(std::move(partial)) {}
        const AoaEstimate &partial() const noexcept { return partial_; }

    private:
        AoaEstimate partial_;
    };

    AoaEstimate music_aoa(const SnapshotSet &snapshots, std::size_t k_sources, const MusicOptions &options = {});

    // ||E_n^H a(angles)||^2 for the noise subspace of the sample covariance.
    RealVec noise_subspace_projection(const SnapshotSet &snapshots, std::size_t k_sources,
                                      std::span<const AnglePair> angles);

    // [a_S(angles_1), ..., a_S(angles_K)]
    ComplexMat steering_matrix(const ArrayGeometry &cssa, double wavelength, std::span<const AnglePair> angles);

    // (A^H A)^{-1} A^H z(t) per snapshot; K x T.
    ComplexMat ls_recover(const SnapshotSet &snapshots, const ComplexMat &steering);

    struct GainEstimate
    {
        std::vector<double> g2_tx; // P |G_{T,k}|^2 plus noise energy
        std::vector<double> g2_rx; // equal to g2_tx by reciprocity
    };

    // (1/T_p) * integral |s_hat_k(t)|^2 dt by the rectangle rule over the sample times.
    GainEstimate gain_estimate(const ComplexMat &recovered, std::span<const double> sample_times, double pri,
                               double pulse);

    struct TargetKnowledge
    {
        std::vector<AnglePair> aoas;
        GainEstimate gains;
        ReflectionProblem problem;
    };

    // Snapshots -> MUSIC -> LS recovery -> gain estimate -> reflection problem.
    TargetKnowledge estimate_target_knowledge(const Scenario &scenario, std::size_t n_snapshots, std::uint64_t seed,
                                              const MusicOptions &options = {});
}

#endif

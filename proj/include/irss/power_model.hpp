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

#ifndef IRSS_POWER_MODEL_HPP
#define IRSS_POWER_MODEL_HPP

#include "irss/arrays.hpp"
#include "irss/channel.hpp"
#include "irss/types.hpp"

#include <cstdint>
#include <vector>

namespace irss
{
    struct RadarNode
    {
        ArrayGeometry geometry;  // UPA
        Vec3 position = Vec3::Zero();
        ComplexVec beamformer;   // unit norm, geometry.element_count() entries
        double tx_power = 0.0;   // P [W]
        double pri = 0.0;        // T_p [s]
        double pulse = 0.0;      // t_p [s]
        double bandwidth = 0.0;  // B [Hz]
        double noise_power = 0.0;
    };

    struct IrsPanel
    {
        ComplexVec theta;
        double beta_max = 1.0;

        void validate() const; // |theta_n| <= beta_max
    };

    struct NirsPanel
    {
        ComplexVec phi;
        RealVec zeta;

        // phi_n = sqrt(1 - zeta_n) exp(j psi_n), psi_n ~ U[0, 2 pi) drawn from `seed`.
        static NirsPanel random(const RealVec &zeta, std::uint64_t seed);
        void validate() const; // |phi_n| = sqrt(1 - zeta_n)
    };

    // Target surface: IRS columns [0, n1x) followed by NIRS columns [n1x, n1x + n2x), all ny rows.
    struct TargetSurface
    {
        Vec3 position = Vec3::Zero();
        std::size_t n1x = 1;
        std::size_t n2x = 0;
        std::size_t ny = 1;
        double spacing = 0.0;
        double beta_max = 1.0;
        NirsPanel nirs;
        ArrayGeometry cssa;
        double sensing_noise = 0.0; // sigma_S^2 [W]

        std::size_t n1() const { return n1x * ny; }
        std::size_t n2() const { return n2x * ny; }
        ArrayGeometry surface_geometry() const { return ArrayGeometry::upa(n1x + n2x, ny, spacing); }
    };

    struct Scenario
    {
        double wavelength = 0.0;
        double alpha = 0.0; // reference path gain at 1 m (linear)
        std::vector<RadarNode> radars;
        TargetSurface target;

        std::size_t radar_count() const { return radars.size(); }
        void validate() const;
    };

    struct LinkGeometry
    {
        double distance = 0.0;
        AnglePair at_target; // AoA of radar k at the target surface
        AnglePair at_radar;  // AoA of the target at radar k
    };

    // Target surface faces -z, radar arrays face +z. Azimuth is measured in the x-z plane,
    // elevation out of it.
    LinkGeometry link_geometry(const Scenario &scenario, std::size_t k);

    // Target-surface response toward radar k (all N = N1 + N2 elements).
    ComplexVec ts_response(const Scenario &scenario, std::size_t k);

    // Normalized chirp: sqrt(P T_p / t_p) exp(j pi B t^2 / t_p) on [0, t_p], zero on (t_p, T_p),
    // so that (1/T_p) * integral |x|^2 over one PRI equals P.
    cdouble chirp_waveform(double t, const RadarNode &radar);

    // conj(a_R(direction)) / sqrt(M)
    ComplexVec matched_beamformer(const RadarNode &radar, const AnglePair &direction, double wavelength);

    struct GainSet
    {
        std::vector<cdouble> g_tx; // G_{T,k} = rho_k a_{R_k}^T w_k
        std::vector<cdouble> g_rx; // G_{R,k} = rho_k w_k^T a_{R_k}
        ComplexMat c_nirs;         // (k, j) -> u~_{k,j}^H phi
    };

    GainSet beamforming_gains(const Scenario &scenario);

    // P_j |G_{R,k}|^2 |G_{T,j}|^2 |u_bar_{k,j}^H [theta; phi]|^2 summed over j.
    double radar_power(std::size_t k, const ComplexVec &theta, const Scenario &scenario);
    double radar_power(std::size_t k, const ComplexVec &theta, const Scenario &scenario, const GainSet &gains);

    double sum_power(const ComplexVec &theta, const Scenario &scenario);
    double sum_power(const ComplexVec &theta, const Scenario &scenario, const GainSet &gains);
}

#endif

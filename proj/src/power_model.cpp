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

#include "irss/power_model.hpp"

#include <cmath>
#include <random>
#include <string>

namespace irss
{
    namespace
    {
        constexpr double modulus_slack = 1e-9;

        void check_theta(const ComplexVec &theta, const Scenario &scenario)
        {
            if (static_cast<std::size_t>(theta.size()) != scenario.target.n1())
                throw InvalidArgument("theta has " + std::to_string(theta.size()) + " entries, expected " +
                                      std::to_string(scenario.target.n1()));
            const double cap = scenario.target.beta_max * (1.0 + modulus_slack);
            for (Eigen::Index n = 0; n < theta.size(); ++n)
                if (!(std::abs(theta[n]) <= cap))
                    throw InvalidArgument("|theta_" + std::to_string(n) + "| exceeds beta_max");
        }
    }

    void IrsPanel::validate() const
    {
        if (!(beta_max > 0.0 && beta_max <= 1.0))
            throw InvalidArgument("beta_max must lie in (0, 1]");
        for (Eigen::Index n = 0; n < theta.size(); ++n)
            if (!(std::abs(theta[n]) <= beta_max * (1.0 + modulus_slack)))
                throw InvalidArgument("|theta_" + std::to_string(n) + "| exceeds beta_max");
    }

    NirsPanel NirsPanel::random(const RealVec &zeta, std::uint64_t seed)
    {
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> phase(0.0, 2.0 * pi);
        NirsPanel panel;
        panel.zeta = zeta;
        panel.phi.resize(zeta.size());
        for (Eigen::Index n = 0; n < zeta.size(); ++n)
        {
            if (!(zeta[n] >= 0.0 && zeta[n] <= 1.0))
                throw InvalidArgument("absorbing efficiency must lie in [0, 1]");
            panel.phi[n] = std::polar(std::sqrt(1.0 - zeta[n]), phase(rng));
        }
        return panel;
    }

    void NirsPanel::validate() const
    {
        if (phi.size() != zeta.size())
            throw InvalidArgument("NIRS phi and zeta lengths differ");
        for (Eigen::Index n = 0; n < phi.size(); ++n)
        {
            if (!(zeta[n] >= 0.0 && zeta[n] <= 1.0))
                throw InvalidArgument("absorbing efficiency must lie in [0, 1]");
            if (std::abs(std::abs(phi[n]) - std::sqrt(1.0 - zeta[n])) > 1e-12)
                throw InvalidArgument("|phi_" + std::to_string(n) + "| != sqrt(1 - zeta)");
        }
    }

    void Scenario::validate() const
    {
        if (!(wavelength > 0.0))
            throw InvalidArgument("wavelength must be positive");
        if (!(alpha > 0.0))
            throw InvalidArgument("alpha must be positive");
        if (radars.empty())
            throw InvalidArgument("scenario needs at least one radar");
        for (std::size_t k = 0; k < radars.size(); ++k)
        {
            const RadarNode &r = radars[k];
            if (r.geometry.kind != ArrayKind::upa)
                throw InvalidArgument("radar arrays must be UPAs");
            r.geometry.validate();
            if (static_cast<std::size_t>(r.beamformer.size()) != r.geometry.element_count())
                throw InvalidArgument("radar " + std::to_string(k) + " beamformer length mismatch");
            if (std::abs(r.beamformer.norm() - 1.0) > 1e-9)
                throw InvalidArgument("radar " + std::to_string(k) + " beamformer must have unit norm");
            if (!(r.tx_power >= 0.0))
                throw InvalidArgument("radar transmit power must be nonnegative");
            if (!(r.pulse > 0.0 && r.pulse < r.pri))
                throw InvalidArgument("radar pulse must satisfy 0 < t_p < T_p");
        }
        const TargetSurface &t = target;
        if (t.n1x < 1 || t.ny < 1)
            throw InvalidArgument("target needs at least one IRS element");
        if (!(t.spacing > 0.0))
            throw InvalidArgument("target element spacing must be positive");
        if (!(t.beta_max > 0.0 && t.beta_max <= 1.0))
            throw InvalidArgument("beta_max must lie in (0, 1]");
        if (static_cast<std::size_t>(t.nirs.phi.size()) != t.n2())
            throw InvalidArgument("NIRS coefficient count does not match n2x * ny");
        t.nirs.validate();
        for (std::size_t k = 0; k < radars.size(); ++k)
            link_geometry(*this, k);
    }

    LinkGeometry link_geometry(const Scenario &scenario, std::size_t k)
    {
        if (k >= scenario.radars.size())
            throw InvalidArgument("radar index out of range");
        const Vec3 r = scenario.radars[k].position - scenario.target.position;
        const double d = r.norm();
        if (!(d > 0.0))
            throw InvalidArgument("radar " + std::to_string(k) + " coincides with the target");
        LinkGeometry g;
        g.distance = d;
        g.at_target = {std::atan2(r.x(), -r.z()), std::asin(r.y() / d)};
        g.at_radar = {std::atan2(-r.x(), -r.z()), std::asin(-r.y() / d)};
        if (!g.at_target.valid() || !g.at_radar.valid())
            throw InvalidArgument("radar " + std::to_string(k) + " is outside the target's field of view");
        return g;
    }

    ComplexVec ts_response(const Scenario &scenario, std::size_t k)
    {
        return upa_response(scenario.target.surface_geometry(), link_geometry(scenario, k).at_target,
                            scenario.wavelength);
    }

    cdouble chirp_waveform(double t, const RadarNode &radar)
    {
        if (!(t >= 0.0 && t < radar.pri))
            throw InvalidArgument("waveform time must lie in [0, T_p)");
        if (t > radar.pulse)
            return {0.0, 0.0};
        const double amp = std::sqrt(radar.tx_power * radar.pri / radar.pulse);
        return std::polar(amp, pi * radar.bandwidth * t * t / radar.pulse);
    }

    ComplexVec matched_beamformer(const RadarNode &radar, const AnglePair &direction, double wavelength)
    {
        const ComplexVec a = upa_response(radar.geometry, direction, wavelength);
        return a.conjugate() / std::sqrt(static_cast<double>(a.size()));
    }

    GainSet beamforming_gains(const Scenario &scenario)
    {
        const std::size_t K = scenario.radars.size();
        const TargetSurface &t = scenario.target;
        GainSet gains;
        gains.g_tx.resize(K);
        gains.g_rx.resize(K);
        gains.c_nirs = ComplexMat::Zero(static_cast<Eigen::Index>(K), static_cast<Eigen::Index>(K));

        std::vector<ComplexVec> nirs(K);
        for (std::size_t k = 0; k < K; ++k)
        {
            const RadarNode &r = scenario.radars[k];
            const LinkGeometry g = link_geometry(scenario, k);
            const PathGain rho = path_gain(g.distance, scenario.alpha, scenario.wavelength);
            const ComplexVec a_r = upa_response(r.geometry, g.at_radar, scenario.wavelength);
            gains.g_tx[k] = rho.value * a_r.transpose() * r.beamformer;
            gains.g_rx[k] = rho.value * r.beamformer.transpose() * a_r;
            const ComplexVec a_t = upa_response(t.surface_geometry(), g.at_target, scenario.wavelength);
            nirs[k] = split_ts_response(a_t, t.n1x, t.n2x, t.ny).nirs;
        }
        for (std::size_t k = 0; k < K; ++k)
            for (std::size_t j = 0; j < K; ++j)
                gains.c_nirs(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j)) =
                    nirs[k].cwiseProduct(nirs[j]).cwiseProduct(t.nirs.phi).sum();
        return gains;
    }

    double radar_power(std::size_t k, const ComplexVec &theta, const Scenario &scenario)
    {
        return radar_power(k, theta, scenario, beamforming_gains(scenario));
    }

    double radar_power(std::size_t k, const ComplexVec &theta, const Scenario &scenario, const GainSet &gains)
    {
        check_theta(theta, scenario);
        if (k >= scenario.radars.size())
            throw InvalidArgument("radar index out of range");
        const TargetSurface &t = scenario.target;
        const ComplexVec a_k =
            split_ts_response(ts_response(scenario, k), t.n1x, t.n2x, t.ny).irs;
        const double grx = std::norm(gains.g_rx[k]);
        double total = 0.0;
        for (std::size_t j = 0; j < scenario.radars.size(); ++j)
        {
            const ComplexVec a_j = split_ts_response(ts_response(scenario, j), t.n1x, t.n2x, t.ny).irs;
            const cdouble refl = a_k.cwiseProduct(a_j).cwiseProduct(theta).sum() +
                                 gains.c_nirs(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j));
            total += scenario.radars[j].tx_power * grx * std::norm(gains.g_tx[j]) * std::norm(refl);
        }
        return total;
    }

    double sum_power(const ComplexVec &theta, const Scenario &scenario)
    {
        return sum_power(theta, scenario, beamforming_gains(scenario));
    }

    double sum_power(const ComplexVec &theta, const Scenario &scenario, const GainSet &gains)
    {
        double total = 0.0;
        for (std::size_t k = 0; k < scenario.radars.size(); ++k)
            total += radar_power(k, theta, scenario, gains);
        return total;
    }
}

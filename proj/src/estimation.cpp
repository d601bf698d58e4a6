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

#include "irss/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

namespace irss
{
    namespace
    {
        struct NoiseSubspace
        {
            ComplexMat basis; // L x (L - k)
        };

        NoiseSubspace noise_subspace(const SnapshotSet &snapshots, std::size_t k)
        {
            const Eigen::Index L = snapshots.samples.rows();
            const Eigen::Index T = snapshots.samples.cols();
            if (k == 0 || static_cast<Eigen::Index>(k) >= L)
                throw InvalidArgument("source count must lie in [1, L)");
            if (T < static_cast<Eigen::Index>(k))
                throw InvalidArgument("need at least as many snapshots as sources");
            const ComplexMat cov = snapshots.samples * snapshots.samples.adjoint() / static_cast<double>(T);
            Eigen::SelfAdjointEigenSolver<ComplexMat> eig(cov);
            if (eig.info() != Eigen::Success)
                throw EstimationFailure("covariance eigendecomposition failed", {});
            return {eig.eigenvectors().leftCols(L - static_cast<Eigen::Index>(k))};
        }

        double projection(const NoiseSubspace &ns, const ComplexVec &a)
        {
            return (ns.basis.adjoint() * a).squaredNorm();
        }

        // Largest integer i with i * step strictly below pi/2.
        long last_index(double step)
        {
            long i = static_cast<long>(std::floor((pi / 2) / step));
            while (i > 0 && static_cast<double>(i) * step >= pi / 2)
                --i;
            return i;
        }
    }

    SnapshotSet collect_snapshots(const Scenario &scenario, std::size_t n_snapshots, std::uint64_t seed)
    {
        if (n_snapshots == 0)
            throw InvalidArgument("need at least one snapshot");
        scenario.validate();
        const TargetSurface &t = scenario.target;
        const std::size_t K = scenario.radar_count();
        const GainSet gains = beamforming_gains(scenario);

        std::vector<AnglePair> truth;
        for (std::size_t k = 0; k < K; ++k)
            truth.push_back(link_geometry(scenario, k).at_target);
        const ComplexMat A = steering_matrix(t.cssa, scenario.wavelength, truth);

        double window = std::numeric_limits<double>::infinity();
        for (const RadarNode &r : scenario.radars)
            window = std::min(window, r.pulse);

        SnapshotSet out;
        out.array = t.cssa;
        out.wavelength = scenario.wavelength;
        out.noise_power = t.sensing_noise;
        out.pri = scenario.radars.front().pri;
        out.pulse = window;
        const auto L = static_cast<Eigen::Index>(t.cssa.element_count());
        const auto T = static_cast<Eigen::Index>(n_snapshots);
        out.samples.resize(L, T);
        out.sample_times.resize(n_snapshots);

        std::mt19937_64 rng(seed);
        std::normal_distribution<double> gauss(0.0, std::sqrt(t.sensing_noise / 2.0));
        ComplexVec s(static_cast<Eigen::Index>(K));
        for (Eigen::Index i = 0; i < T; ++i)
        {
            const double time = window * static_cast<double>(i) / static_cast<double>(T);
            out.sample_times[static_cast<std::size_t>(i)] = time;
            for (std::size_t k = 0; k < K; ++k)
                s[static_cast<Eigen::Index>(k)] = gains.g_tx[k] * chirp_waveform(time, scenario.radars[k]);
            out.samples.col(i) = A * s;
            if (t.sensing_noise > 0.0)
                for (Eigen::Index l = 0; l < L; ++l)
                {
                    const double re = gauss(rng);
                    const double im = gauss(rng);
                    out.samples(l, i) += cdouble(re, im);
                }
        }
        return out;
    }

    ComplexMat steering_matrix(const ArrayGeometry &cssa, double wavelength, std::span<const AnglePair> angles)
    {
        ComplexMat A(static_cast<Eigen::Index>(cssa.element_count()), static_cast<Eigen::Index>(angles.size()));
        for (std::size_t k = 0; k < angles.size(); ++k)
            A.col(static_cast<Eigen::Index>(k)) = cssa_response(cssa, angles[k], wavelength);
        return A;
    }

    RealVec noise_subspace_projection(const SnapshotSet &snapshots, std::size_t k_sources,
                                      std::span<const AnglePair> angles)
    {
        const NoiseSubspace ns = noise_subspace(snapshots, k_sources);
        RealVec out(static_cast<Eigen::Index>(angles.size()));
        for (std::size_t i = 0; i < angles.size(); ++i)
            out[static_cast<Eigen::Index>(i)] =
                projection(ns, cssa_response(snapshots.array, angles[i], snapshots.wavelength));
        return out;
    }

    AoaEstimate music_aoa(const SnapshotSet &snapshots, std::size_t k_sources, const MusicOptions &options)
    {
        if (!(options.grid_step > 0.0) || !(options.refine_step > 0.0) || options.refine_step > options.grid_step)
            throw InvalidArgument("grid steps must be positive with refine_step <= grid_step");
        const NoiseSubspace ns = noise_subspace(snapshots, k_sources);
        const double step = options.grid_step;

        AoaEstimate est;
        est.grid_step = step;
        const long az_last = last_index(step);
        const long el_last = last_index(step);
        for (long i = -az_last; i <= az_last; ++i)
            est.azimuth_grid.push_back(static_cast<double>(i) * step);
        for (long j = 0; j <= el_last; ++j)
            est.elevation_grid.push_back(static_cast<double>(j) * step);
        const auto naz = static_cast<Eigen::Index>(est.azimuth_grid.size());
        const auto nel = static_cast<Eigen::Index>(est.elevation_grid.size());

        est.spectrum.resize(naz, nel);
        for (Eigen::Index i = 0; i < naz; ++i)
            for (Eigen::Index j = 0; j < nel; ++j)
            {
                const AnglePair a{est.azimuth_grid[static_cast<std::size_t>(i)],
                                  est.elevation_grid[static_cast<std::size_t>(j)]};
                const double p = projection(ns, cssa_response(snapshots.array, a, snapshots.wavelength));
                est.spectrum(i, j) = 1.0 / std::max(p, std::numeric_limits<double>::min());
            }

        // 8-neighbour local maxima; among equal neighbours the earlier one in scan order wins.
        struct Peak
        {
            Eigen::Index i, j;
            double value;
        };
        std::vector<Peak> peaks;
        for (Eigen::Index i = 0; i < naz; ++i)
            for (Eigen::Index j = 0; j < nel; ++j)
            {
                const double v = est.spectrum(i, j);
                bool is_peak = true;
                for (Eigen::Index di = -1; di <= 1 && is_peak; ++di)
                    for (Eigen::Index dj = -1; dj <= 1; ++dj)
                    {
                        const Eigen::Index ii = i + di, jj = j + dj;
                        if ((di == 0 && dj == 0) || ii < 0 || jj < 0 || ii >= naz || jj >= nel)
                            continue;
                        const double w = est.spectrum(ii, jj);
                        const bool earlier = ii * nel + jj < i * nel + j;
                        if (w > v || (earlier && w == v))
                        {
                            is_peak = false;
                            break;
                        }
                    }
                if (is_peak)
                    peaks.push_back({i, j, v});
            }
        std::stable_sort(peaks.begin(), peaks.end(), [](const Peak &a, const Peak &b) { return a.value > b.value; });

        std::vector<Peak> kept;
        for (const Peak &p : peaks)
        {
            const bool merged = std::any_of(kept.begin(), kept.end(), [&](const Peak &q) {
                return std::abs(p.i - q.i) <= 2 && std::abs(p.j - q.j) <= 2;
            });
            if (!merged)
                kept.push_back(p);
            if (kept.size() == k_sources)
                break;
        }

        if (kept.size() < k_sources)
        {
            for (const Peak &p : kept)
                est.angles.push_back({est.azimuth_grid[static_cast<std::size_t>(p.i)],
                                      est.elevation_grid[static_cast<std::size_t>(p.j)]});
            throw EstimationFailure("found " + std::to_string(kept.size()) + " of " +
                                        std::to_string(k_sources) + " sources",
                                    std::move(est));
        }

        // Local refinement on the fine grid spanning +-grid_step around each coarse peak.
        const double fine = options.refine_step;
        const long ratio = std::max(1L, std::lround(step / fine));
        const long az_fine_last = last_index(fine);
        const long el_fine_last = last_index(fine);
        for (const Peak &p : kept)
        {
            const long ci = (p.i - az_last) * ratio;
            const long cj = p.j * ratio;
            double best = std::numeric_limits<double>::infinity();
            AnglePair best_angle{static_cast<double>(ci) * fine, static_cast<double>(cj) * fine};
            for (long di = -ratio; di <= ratio; ++di)
            {
                const long ii = ci + di;
                if (ii < -az_fine_last || ii > az_fine_last)
                    continue;
                for (long dj = -ratio; dj <= ratio; ++dj)
                {
                    const long jj = cj + dj;
                    if (jj < 0 || jj > el_fine_last)
                        continue;
                    const AnglePair a{static_cast<double>(ii) * fine, static_cast<double>(jj) * fine};
                    const double v = projection(ns, cssa_response(snapshots.array, a, snapshots.wavelength));
                    if (v < best)
                    {
                        best = v;
                        best_angle = a;
                    }
                }
            }
            est.angles.push_back(best_angle);
        }
        return est;
    }

    ComplexMat ls_recover(const SnapshotSet &snapshots, const ComplexMat &steering)
    {
        if (steering.rows() != snapshots.samples.rows())
            throw InvalidArgument("steering matrix rows do not match the array size");
        if (steering.cols() == 0 || steering.cols() > steering.rows())
            throw InvalidArgument("steering matrix must have between 1 and L columns");
        const ComplexMat gram = steering.adjoint() * steering;
        Eigen::LLT<ComplexMat> llt(gram);
        if (llt.info() != Eigen::Success || !(llt.rcond() >= 1e-10))
            throw SingularMatrixError("steering matrix is rank deficient (angles too close)");
        return llt.solve(steering.adjoint() * snapshots.samples);
    }

    GainEstimate gain_estimate(const ComplexMat &recovered, std::span<const double> sample_times, double pri,
                               double pulse)
    {
        if (!(pri > 0.0) || !(pulse > 0.0) || pulse > pri)
            throw InvalidArgument("need 0 < pulse <= pri");
        if (static_cast<std::size_t>(recovered.cols()) != sample_times.size() || sample_times.empty())
            throw InvalidArgument("one sample time per recovered snapshot");
        GainEstimate g;
        for (Eigen::Index k = 0; k < recovered.rows(); ++k)
        {
            double energy = 0.0;
            for (std::size_t i = 0; i < sample_times.size(); ++i)
            {
                const double next = i + 1 < sample_times.size() ? sample_times[i + 1] : pulse;
                energy += std::norm(recovered(k, static_cast<Eigen::Index>(i))) * (next - sample_times[i]);
            }
            g.g2_tx.push_back(energy / pri);
        }
        g.g2_rx = g.g2_tx;
        return g;
    }

    TargetKnowledge estimate_target_knowledge(const Scenario &scenario, std::size_t n_snapshots, std::uint64_t seed,
                                              const MusicOptions &options)
    {
        const SnapshotSet snaps = collect_snapshots(scenario, n_snapshots, seed);
        TargetKnowledge out;
        out.aoas = music_aoa(snaps, scenario.radar_count(), options).angles;
        const ComplexMat A = steering_matrix(snaps.array, snaps.wavelength, out.aoas);
        out.gains = gain_estimate(ls_recover(snaps, A), snaps.sample_times, snaps.pri, snaps.pulse);
        out.problem = reflection_problem(scenario.target, scenario.wavelength, out.aoas, out.gains.g2_tx,
                                         out.gains.g2_rx);
        return out;
    }
}

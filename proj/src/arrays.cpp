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

#include "irss/arrays.hpp"

#include <cmath>
#include <string>

namespace irss
{
    ArrayGeometry ArrayGeometry::upa(std::size_t nx, std::size_t ny, double spacing)
    {
        ArrayGeometry g{ArrayKind::upa, nx, ny, spacing};
        g.validate();
        return g;
    }

    ArrayGeometry ArrayGeometry::cssa(std::size_t lx, std::size_t ly, double spacing)
    {
        ArrayGeometry g{ArrayKind::cssa, lx, ly, spacing};
        g.validate();
        return g;
    }

    std::size_t ArrayGeometry::element_count() const
    {
        return kind == ArrayKind::upa ? nx * ny : nx + ny - 1;
    }

    void ArrayGeometry::validate() const
    {
        if (nx < 1 || ny < 1)
            throw InvalidArgument("array dimensions must be positive");
        if (!(spacing > 0.0) || !std::isfinite(spacing))
            throw InvalidArgument("array spacing must be positive");
        if (kind == ArrayKind::cssa && (nx % 2 == 0 || ny % 2 == 0))
            throw InvalidArgument("cross-shaped array arms must have odd length");
    }

    bool AnglePair::valid() const
    {
        const double lim = pi / 2;
        return std::isfinite(azimuth) && std::isfinite(elevation) && std::abs(azimuth) < lim &&
               std::abs(elevation) < lim;
    }

    void AnglePair::validate() const
    {
        if (!valid())
            throw InvalidArgument("angles must lie in (-pi/2, pi/2), got (" + std::to_string(azimuth) + ", " +
                                  std::to_string(elevation) + ")");
    }

    ComplexVec steer_1d(double phase_step, std::size_t n)
    {
        if (n == 0)
            throw InvalidArgument("steering vector length must be positive");
        ComplexVec e(static_cast<Eigen::Index>(n));
        e[0] = cdouble(1.0, 0.0);
        for (std::size_t m = 1; m < n; ++m)
            e[static_cast<Eigen::Index>(m)] = std::polar(1.0, -pi * static_cast<double>(m) * phase_step);
        return e;
    }

    std::pair<double, double> phase_steps(const AnglePair &angles, double spacing, double wavelength)
    {
        if (!(wavelength > 0.0))
            throw InvalidArgument("wavelength must be positive");
        const double scale = 2.0 * spacing / wavelength * std::cos(angles.elevation);
        return {scale * std::cos(angles.azimuth), scale * std::sin(angles.azimuth)};
    }

    ComplexVec upa_response(const ArrayGeometry &geom, const AnglePair &angles, double wavelength)
    {
        if (geom.kind != ArrayKind::upa)
            throw InvalidArgument("upa_response needs a UPA geometry");
        geom.validate();
        const auto [px, py] = phase_steps(angles, geom.spacing, wavelength);
        const ComplexVec ex = steer_1d(px, geom.nx);
        const ComplexVec ey = steer_1d(py, geom.ny);
        const auto ny = static_cast<Eigen::Index>(geom.ny);
        ComplexVec a(ex.size() * ny);
        for (Eigen::Index ix = 0; ix < ex.size(); ++ix)
            a.segment(ix * ny, ny) = ex[ix] * ey;
        return a;
    }

    TsSplit split_ts_response(const ComplexVec &full, std::size_t n1x, std::size_t n2x, std::size_t ny)
    {
        if (ny == 0 || static_cast<std::size_t>(full.size()) != (n1x + n2x) * ny)
            throw InvalidArgument("response length does not match (n1x + n2x) * ny");
        const auto n1 = static_cast<Eigen::Index>(n1x * ny);
        return {full.head(n1), full.tail(full.size() - n1)};
    }

    ComplexVec cssa_response(const ArrayGeometry &geom, const AnglePair &angles, double wavelength)
    {
        if (geom.kind != ArrayKind::cssa)
            throw InvalidArgument("cssa_response needs a CSSA geometry");
        geom.validate();
        const auto [px, py] = phase_steps(angles, geom.spacing, wavelength);
        const auto lx = static_cast<Eigen::Index>(geom.nx);
        const auto ly = static_cast<Eigen::Index>(geom.ny);
        const Eigen::Index cx = (lx - 1) / 2;
        const Eigen::Index cy = (ly - 1) / 2;

        ComplexVec a(lx + ly - 1);
        for (Eigen::Index m = 0; m < lx; ++m)
            a[m] = m == cx ? cdouble(1.0, 0.0) : std::polar(1.0, -pi * static_cast<double>(m - cx) * px);
        Eigen::Index out = lx;
        for (Eigen::Index m = 0; m < ly; ++m)
        {
            if (m == cy)
                continue;
            a[out++] = std::polar(1.0, -pi * static_cast<double>(m - cy) * py);
        }
        return a;
    }

    ComplexVec cascaded_response(const ComplexVec &a_k, const ComplexVec &a_j)
    {
        if (a_k.size() != a_j.size())
            throw InvalidArgument("cascaded_response needs equal lengths");
        return a_k.cwiseProduct(a_j).conjugate();
    }
}

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

#ifndef IRSS_ARRAYS_HPP
#define IRSS_ARRAYS_HPP

#include "irss/types.hpp"

#include <cstddef>

namespace irss
{
    enum class ArrayKind
    {
        upa,  // uniform planar array, nx * ny elements
        cssa, // cross-shaped sensing array, nx + ny - 1 elements
    };

    struct ArrayGeometry
    {
        ArrayKind kind = ArrayKind::upa;
        std::size_t nx = 1;
        std::size_t ny = 1;
        double spacing = 0.0; // element spacing [m]

        static ArrayGeometry upa(std::size_t nx, std::size_t ny, double spacing);

        // Both arm lengths must be odd so the shared device sits at the centre of each arm.
        static ArrayGeometry cssa(std::size_t lx, std::size_t ly, double spacing);

        std::size_t element_count() const;
        void validate() const;

        bool operator==(const ArrayGeometry &) const = default;
    };

    // Azimuth and elevation [rad]; both must lie in (-pi/2, pi/2).
    struct AnglePair
    {
        double azimuth = 0.0;
        double elevation = 0.0;

        bool valid() const;
        void validate() const;

        bool operator==(const AnglePair &) const = default;
    };

    // e(phi, n) = [1, exp(-j pi phi), ..., exp(-j pi (n-1) phi)]^T
    ComplexVec steer_1d(double phase_step, std::size_t n);

    // Per-axis phase steps (2 d / lambda) cos(el) cos(az) and (2 d / lambda) cos(el) sin(az).
    std::pair<double, double> phase_steps(const AnglePair &angles, double spacing, double wavelength);

    // kron(e_x, e_y); element (ix, iy) is stored at ix * ny + iy.
    ComplexVec upa_response(const ArrayGeometry &geom, const AnglePair &angles, double wavelength);

    struct TsSplit
    {
        ComplexVec irs;
        ComplexVec nirs;
    };

    // Splits a target-surface response over (n1x + n2x) x ny elements into the leading
    // IRS columns and the trailing NIRS columns.
    TsSplit split_ts_response(const ComplexVec &full, std::size_t n1x, std::size_t n2x, std::size_t ny);

    // x-arm (nx entries) followed by the y-arm with the shared centre device removed.
    // Each arm is referenced to the centre device, whose response is exactly 1.
    ComplexVec cssa_response(const ArrayGeometry &geom, const AnglePair &angles, double wavelength);

    // Returns u with u^H = a_k^T (.) a_j^T, i.e. u = conj(a_k (.) a_j).
    ComplexVec cascaded_response(const ComplexVec &a_k, const ComplexVec &a_j);
}

#endif

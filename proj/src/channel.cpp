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

#include "irss/channel.hpp"

#include <cmath>

namespace irss
{
    PathGain path_gain(double distance, double alpha, double wavelength)
    {
        if (!(distance > 0.0) || !std::isfinite(distance))
            throw InvalidArgument("distance must be positive");
        if (!(alpha > 0.0))
            throw InvalidArgument("reference path gain must be positive");
        if (!(wavelength > 0.0))
            throw InvalidArgument("wavelength must be positive");
        // Reduce d / lambda before scaling by 2 pi to keep the phase accurate at long range.
        const double cycles = std::fmod(distance / wavelength, 1.0);
        return {std::polar(std::sqrt(alpha) / distance, -2.0 * pi * cycles), distance, alpha, wavelength};
    }

    LosChannel los_channel(const ComplexVec &rx_response, const ComplexVec &tx_response, const PathGain &gain,
                           std::string rx_label, std::string tx_label)
    {
        if (rx_response.size() == 0 || tx_response.size() == 0)
            throw InvalidArgument("array responses must be nonempty");
        return {gain.value * rx_response * tx_response.transpose(), std::move(rx_label), std::move(tx_label)};
    }

    LosChannel reverse(const LosChannel &channel)
    {
        return {channel.matrix.transpose(), channel.tx_label, channel.rx_label};
    }

    LosChannel stack(const LosChannel &top, const LosChannel &bottom, std::string rx_label)
    {
        if (top.matrix.cols() != bottom.matrix.cols())
            throw InvalidArgument("stacked channels must share the transmitter");
        ComplexMat m(top.matrix.rows() + bottom.matrix.rows(), top.matrix.cols());
        m << top.matrix, bottom.matrix;
        return {std::move(m), std::move(rx_label), top.tx_label};
    }
}

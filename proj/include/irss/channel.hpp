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

#ifndef IRSS_CHANNEL_HPP
#define IRSS_CHANNEL_HPP

#include "irss/types.hpp"

#include <string>

namespace irss
{
    // rho = sqrt(alpha) / d * exp(-j 2 pi d / lambda)
    struct PathGain
    {
        cdouble value;
        double distance = 0.0;
        double alpha = 0.0;
        double wavelength = 0.0;
    };

    PathGain path_gain(double distance, double alpha, double wavelength);

    // Far-field LoS channel rho * a_rx * a_tx^T (rank one).
    struct LosChannel
    {
        ComplexMat matrix;
        std::string rx_label;
        std::string tx_label;
    };

    LosChannel los_channel(const ComplexVec &rx_response, const ComplexVec &tx_response, const PathGain &gain,
                           std::string rx_label = "rx", std::string tx_label = "tx");

    // Reverse link under reciprocity: H_{X->Y} = H_{Y->X}^T.
    LosChannel reverse(const LosChannel &channel);

    // Vertical concatenation of two channels driven by the same transmitter.
    LosChannel stack(const LosChannel &top, const LosChannel &bottom, std::string rx_label);
}

#endif

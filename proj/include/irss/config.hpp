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

#ifndef IRSS_CONFIG_HPP
#define IRSS_CONFIG_HPP

#include "irss/power_model.hpp"

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace irss
{
    struct RadarConfig
    {
        std::array<double, 3> position{0.0, 0.0, 0.0};
        std::size_t mx = 8;
        std::size_t my = 8;
        double spacing = 0.025;
        double power_dbm = 15.0;
        double pri = 100e-6;
        double pulse = 30e-6;
        double bandwidth = 100e6;
        double noise_dbm = -90.0;
        // Beam direction (azimuth, elevation) in degrees; defaults to the line of sight toward the target.
        std::optional<std::array<double, 2>> beam_deg;

        bool operator==(const RadarConfig &) const = default;
    };

    struct TargetConfig
    {
        std::array<double, 3> position{0.0, 0.0, 100.0};
        std::size_t n1x = 4;
        std::size_t n1y = 2;
        std::size_t n2x = 100;
        std::size_t n2y = 2;
        double spacing = 0.0125;
        double beta_max = 1.0;
        std::vector<double> zeta{0.8}; // one value for all NIRS elements, or one per element
        std::size_t cssa_lx = 5;
        std::size_t cssa_ly = 5;
        double sensing_noise_dbm = -90.0;
        std::size_t realizations = 20; // I in the minimum-element bound

        bool operator==(const TargetConfig &) const = default;
    };

    struct ScenarioConfig
    {
        double wavelength = 0.05;
        double alpha_db = -30.0;
        std::uint64_t seed = 1;
        std::size_t snapshots = 64;
        std::vector<RadarConfig> radars{RadarConfig{}};
        TargetConfig target;

        bool operator==(const ScenarioConfig &) const = default;

        void validate() const; // throws ConfigError with the field path
        double zeta_bar() const;
    };

    ScenarioConfig parse_config(const std::string &json_text);
    std::string to_json(const ScenarioConfig &config); // canonical form, parse_config(to_json(c)) == c
    ScenarioConfig load_config(const std::filesystem::path &path);

    // One radar directly below the target.
    ScenarioConfig default_single_radar_config();
    // Radar 1 below the target, radars 2 and 3 on the ground at +-45 degrees.
    ScenarioConfig default_three_radar_config();

    double dbm_to_watts(double dbm);
    double db_to_linear(double db);
    double watts_to_db(double watts);

    // Linear-unit scenario. NIRS phases are drawn from `nirs_seed`.
    Scenario build_scenario(const ScenarioConfig &config, std::uint64_t nirs_seed);

    // FNV-1a over the canonical JSON, as 16 hex digits.
    std::string config_hash(const ScenarioConfig &config);
}

#endif

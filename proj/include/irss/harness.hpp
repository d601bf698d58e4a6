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

#ifndef IRSS_HARNESS_HPP
#define IRSS_HARNESS_HPP

#include "irss/config.hpp"
#include "irss/power_model.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace irss
{
    inline constexpr std::string_view solver_no_irs = "no-irs";
    inline constexpr std::string_view solver_random = "random-phase";
    inline constexpr std::string_view solver_dft = "dft-codebook";
    inline constexpr std::string_view solver_reverse = "reverse-alignment";
    inline constexpr std::string_view solver_mmse = "mmse";
    inline constexpr std::string_view solver_pgd = "pgd";
    inline constexpr std::string_view solver_pgd_estimated = "pgd-estimated";

    // Row order within a sweep value.
    std::size_t solver_rank(std::string_view solver);

    std::vector<std::string> preset_names();

    struct ResultRow
    {
        double sweep = 0.0;
        std::string solver;
        std::size_t trial = 0;
        std::uint64_t seed = 0;
        double power_watts = 0.0;

        double power_db() const; // -inf for zero power

        bool operator==(const ResultRow &) const = default;
    };

    struct ExperimentResult
    {
        std::string preset;
        std::string sweep_name;
        std::vector<double> sweep_values;
        std::vector<ResultRow> rows;                  // sorted by (sweep index, solver rank, trial)
        std::map<std::string, std::string> metadata;  // config hash, solver settings
    };

    struct RunOptions
    {
        std::size_t trials = 1;
        std::optional<std::vector<double>> sweep;     // overrides the preset's default sweep
        std::size_t threads = 0;                      // 0: hardware concurrency
    };

    // Master seed is config.seed.
    ExperimentResult run_experiment(const std::string &preset, const ScenarioConfig &config,
                                    const RunOptions &options);

    std::vector<double> default_sweep(const std::string &preset, const ScenarioConfig &config);

    // Perturbs the azimuth by error_deg with a random sign, clamped inside (-pi/2, pi/2).
    AnglePair inject_aoa_error(const AnglePair &truth, double error_deg, std::uint64_t seed);

    // Independent stream per (master seed, index).
    std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index);

    // Shortest round-trip decimal in scientific notation.
    std::string format_number(double value);

    std::string format_csv(const ExperimentResult &result);
    void emit_csv(const ExperimentResult &result, const std::filesystem::path &path);
    std::vector<ResultRow> parse_csv(const std::string &text);

    // metadata and sweep as a JSON object
    std::string format_metadata(const ExperimentResult &result);

    struct SummaryRow
    {
        double sweep = 0.0;
        std::string solver;
        double mean_watts = 0.0;
    };

    // Trial average per (sweep value, solver), in row order.
    std::vector<SummaryRow> summarize(const ExperimentResult &result);
}

#endif

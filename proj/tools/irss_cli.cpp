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

// Command-line front end over the irss C API.
#include "irss/irss.h"

#include <CLI11.hpp>

#include <cstdio>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace
{
    struct Failure
    {
        irss_status status;
    };

    void check(irss_status s)
    {
        if (s != IRSS_OK)
            throw Failure{s};
    }

    using ConfigPtr = std::unique_ptr<irss_config, decltype(&irss_config_free)>;
    using SolutionPtr = std::unique_ptr<irss_solution, decltype(&irss_solution_free)>;

    // --config wins; otherwise the built-in single- or three-radar defaults.
    ConfigPtr open_config(const std::string &path, const std::string &defaults)
    {
        irss_config *raw = nullptr;
        if (!path.empty())
            check(irss_config_load(path.c_str(), &raw));
        else
            check(irss_config_default(defaults.c_str(), &raw));
        return ConfigPtr(raw, &irss_config_free);
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"IRS-aided electromagnetic stealth simulator"};
    app.set_version_flag("--version", std::string(irss_version()));
    app.require_subcommand(1);

    std::string preset, config_path, defaults = "single", out_path, meta_path;
    std::size_t trials = 1, threads = 0;
    std::optional<std::uint64_t> seed;
    std::vector<double> sweep;
    auto *run = app.add_subcommand("run", "Run an experiment preset and write a CSV");
    run->add_option("preset", preset, "Preset name")
        ->required()
        ->check(CLI::IsMember({"power-vs-distance", "power-vs-elements", "power-vs-angle", "power-vs-aoa-error",
                               "power-vs-num-radars", "min-elements-validation", "estimation-pipeline"}));
    run->add_option("--config", config_path, "Scenario config (JSON)");
    run->add_option("--defaults", defaults, "Built-in config when --config is absent")
        ->check(CLI::IsMember({"single", "three"}));
    run->add_option("--trials", trials, "Monte-Carlo trials per sweep value")->check(CLI::PositiveNumber);
    run->add_option("--seed", seed, "Master seed (overrides the config)");
    run->add_option("--out", out_path, "Output CSV path")->required();
    run->add_option("--meta", meta_path, "Optional metadata JSON path");
    run->add_option("--sweep", sweep, "Sweep values overriding the preset default")->delimiter(',');
    run->add_option("--threads", threads, "Worker threads (0: all cores)");

    double zeta_bar = 0.8, beta_max = 1.0;
    std::size_t n2 = 200, realizations = 20;
    auto *minel = app.add_subcommand("min-elements", "Minimum IRS element count for full stealth");
    minel->add_option("--zeta-bar", zeta_bar, "Mean absorbing efficiency");
    minel->add_option("--n2", n2, "NIRS element count");
    minel->add_option("--beta-max", beta_max, "Maximum reflection amplitude");
    minel->add_option("--realizations", realizations, "Realization count I");

    std::string solver = "pgd";
    auto *solve = app.add_subcommand("solve", "Design the IRS reflection for one scenario");
    solve->add_option("--config", config_path, "Scenario config (JSON)");
    solve->add_option("--defaults", defaults, "Built-in config when --config is absent")
        ->check(CLI::IsMember({"single", "three"}));
    solve->add_option("--solver", solver, "pgd, lagrange, reverse-alignment, mmse, dft-codebook, random-phase, no-irs");
    solve->add_option("--seed", seed, "Seed for the NIRS phases (overrides the config)");

    CLI11_PARSE(app, argc, argv);

    try
    {
        if (*run)
        {
            ConfigPtr cfg = open_config(config_path, defaults);
            if (seed)
                check(irss_config_set_seed(cfg.get(), *seed));
            check(irss_run_experiment(cfg.get(), preset.c_str(), trials, sweep.empty() ? nullptr : sweep.data(),
                                      sweep.size(), threads, out_path.c_str(),
                                      meta_path.empty() ? nullptr : meta_path.c_str()));
            std::printf("wrote %s\n", out_path.c_str());
        }
        else if (*minel)
        {
            std::size_t n = 0;
            check(irss_min_irs_elements(zeta_bar, n2, beta_max, realizations, &n));
            std::printf("%zu\n", n);
        }
        else if (*solve)
        {
            ConfigPtr cfg = open_config(config_path, defaults);
            if (seed)
                check(irss_config_set_seed(cfg.get(), *seed));
            irss_solution *raw = nullptr;
            check(irss_solve(cfg.get(), solver.c_str(), &raw));
            SolutionPtr sol(raw, &irss_solution_free);
            const std::size_t n = irss_solution_size(sol.get());
            std::vector<double> re(n), im(n);
            check(irss_solution_theta(sol.get(), re.data(), im.data(), n));
            std::printf("solver %s\n", irss_solution_solver(sol.get()));
            std::printf("objective %.17g\n", irss_solution_objective(sol.get()));
            std::printf("iterations %zu\n", irss_solution_iterations(sol.get()));
            const double kkt = irss_solution_kkt_residual(sol.get());
            if (kkt >= 0.0)
                std::printf("kkt_residual %.17g\n", kkt);
            std::printf("theta (re im)\n");
            for (std::size_t i = 0; i < n; ++i)
                std::printf("%.17g %.17g\n", re[i], im[i]);
        }
    }
    catch (const Failure &f)
    {
        std::fprintf(stderr, "error (%s): %s\n", irss_status_string(f.status), irss_last_error());
        return static_cast<int>(f.status);
    }
    return 0;
}

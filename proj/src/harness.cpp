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

#include "irss/harness.hpp"

#include "irss/estimation.hpp"
#include "irss/optimizers.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <fstream>
#include <limits>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

namespace irss
{
    namespace
    {
        constexpr std::array<std::string_view, 7> solver_order{solver_no_irs, solver_random,  solver_dft,
                                                               solver_reverse, solver_mmse, solver_pgd_estimated,
                                                               solver_pgd};

        const std::array<std::string_view, 7> presets{"power-vs-distance", "power-vs-elements",
                                                      "power-vs-angle",    "power-vs-aoa-error",
                                                      "power-vs-num-radars", "min-elements-validation",
                                                      "estimation-pipeline"};

        const char *sweep_name_of(const std::string &preset)
        {
            if (preset == "power-vs-distance")
                return "distance_m";
            if (preset == "power-vs-elements" || preset == "min-elements-validation")
                return "n1";
            if (preset == "power-vs-angle")
                return "azimuth_deg";
            if (preset == "power-vs-aoa-error")
                return "aoa_error_deg";
            if (preset == "power-vs-num-radars")
                return "radars";
            return "sensing_noise_dbm";
        }

        std::vector<double> linspace_step(double first, double last, double step)
        {
            std::vector<double> v;
            const auto n = static_cast<long>(std::llround((last - first) / step));
            for (long i = 0; i <= n; ++i)
                v.push_back(first + static_cast<double>(i) * step);
            return v;
        }

        std::size_t as_count(double v, const char *what)
        {
            if (!(v >= 1.0) || v != std::floor(v))
                throw InvalidArgument(std::string(what) + " sweep values must be positive integers");
            return static_cast<std::size_t>(v);
        }

        Vec3 vec(const std::array<double, 3> &p) { return {p[0], p[1], p[2]}; }
        std::array<double, 3> arr(const Vec3 &v) { return {v.x(), v.y(), v.z()}; }

        // Config with one sweep value applied.
        ScenarioConfig apply_sweep(const std::string &preset, ScenarioConfig c, double v)
        {
            if (preset == "power-vs-distance")
            {
                if (!(v > 0.0))
                    throw InvalidArgument("distance sweep values must be positive");
                const Vec3 anchor = vec(c.radars.front().position);
                const double d = (vec(c.target.position) - anchor).norm();
                const double s = v / d;
                c.target.position = arr(anchor + s * (vec(c.target.position) - anchor));
                for (RadarConfig &r : c.radars)
                    r.position = arr(anchor + s * (vec(r.position) - anchor));
            }
            else if (preset == "power-vs-elements" || preset == "min-elements-validation")
            {
                const std::size_t n1 = as_count(v, "element");
                if (n1 % c.target.n1y != 0)
                    throw InvalidArgument("element sweep values must be multiples of n1y");
                c.target.n1x = n1 / c.target.n1y;
                if (preset == "min-elements-validation")
                    c.radars.resize(1);
            }
            else if (preset == "power-vs-angle")
            {
                const double az = deg2rad(v);
                if (!(std::abs(az) < pi / 2))
                    throw InvalidArgument("angle sweep values must lie in (-90, 90)");
                const Vec3 t = vec(c.target.position);
                const double d = (vec(c.radars.front().position) - t).norm();
                c.radars.front().position = arr(t + d * Vec3(std::sin(az), 0.0, -std::cos(az)));
            }
            else if (preset == "power-vs-aoa-error")
            {
                if (!(v >= 0.0))
                    throw InvalidArgument("AoA error sweep values must be nonnegative");
            }
            else if (preset == "power-vs-num-radars")
            {
                const std::size_t k = as_count(v, "radar count");
                if (k > c.radars.size())
                    throw InvalidArgument("radar count sweep exceeds the configured radars");
                c.radars.resize(k);
            }
            else if (preset == "estimation-pipeline")
            {
                c.target.sensing_noise_dbm = v;
            }
            return c;
        }

        struct Task
        {
            std::size_t sweep_index;
            std::size_t trial;
        };

        std::vector<ResultRow> run_trial(const std::string &preset, const ScenarioConfig &base, double v,
                                         std::size_t trial, std::uint64_t seed)
        {
            const ScenarioConfig cfg = apply_sweep(preset, base, v);
            const Scenario sc = build_scenario(cfg, trial_seed(seed, 0));
            const GainSet gains = beamforming_gains(sc);
            const ReflectionProblem truth = reflection_problem(sc);
            const std::size_t K = sc.radar_count();
            const double beta = sc.target.beta_max;

            std::vector<ResultRow> rows;
            auto emit = [&](std::string_view solver, const ComplexVec &theta) {
                rows.push_back({v, std::string(solver), trial, seed, sum_power(theta, sc, gains)});
            };
            const ComplexVec zero = ComplexVec::Zero(static_cast<Eigen::Index>(sc.target.n1()));

            if (preset == "min-elements-validation")
            {
                const QcqpInstance inst = build_instance(truth);
                emit(solver_no_irs, zero);
                const LinkTerm &l = truth.links.front();
                emit(solver_reverse, reverse_alignment(l.u, l.c, beta).theta);
                emit(solver_pgd, solve_pgd(inst).theta);
                return rows;
            }

            if (preset == "estimation-pipeline")
            {
                const QcqpInstance inst = build_instance(truth);
                emit(solver_no_irs, zero);
                ComplexVec estimated = zero;
                try
                {
                    const TargetKnowledge know =
                        estimate_target_knowledge(sc, cfg.snapshots, trial_seed(seed, 100));
                    estimated = solve_pgd(build_instance(know.problem)).theta;
                }
                catch (const EstimationFailure &)
                {
                }
                catch (const SingularMatrixError &)
                {
                }
                emit(solver_pgd_estimated, estimated);
                emit(solver_pgd, solve_pgd(inst).theta);
                return rows;
            }

            // Target-side knowledge: exact, or with injected AoA errors and exact gains.
            ReflectionProblem known = truth;
            if (preset == "power-vs-aoa-error")
            {
                std::vector<AnglePair> aoas;
                std::vector<double> g2;
                for (std::size_t k = 0; k < K; ++k)
                {
                    aoas.push_back(inject_aoa_error(link_geometry(sc, k).at_target, v, trial_seed(seed, 2 + k)));
                    g2.push_back(sc.radars[k].tx_power * std::norm(gains.g_tx[k]));
                }
                known = reflection_problem(sc.target, sc.wavelength, aoas, g2, g2);
            }
            const QcqpInstance inst = build_instance(known);

            emit(solver_no_irs, zero);
            emit(solver_random, random_phase(sc.target.n1(), beta, trial_seed(seed, 1)));
            emit(solver_dft, dft_codebook_search(inst).theta);
            if (K == 1)
            {
                const LinkTerm &l = known.links.front();
                emit(solver_reverse, reverse_alignment(l.u, l.c, beta).theta);
            }
            else
                emit(solver_mmse, mmse_auto(known).solution.theta);
            emit(solver_pgd, solve_pgd(inst).theta);
            return rows;
        }
    }

    std::size_t solver_rank(std::string_view solver)
    {
        const auto it = std::find(solver_order.begin(), solver_order.end(), solver);
        return static_cast<std::size_t>(it - solver_order.begin());
    }

    std::vector<std::string> preset_names() { return {presets.begin(), presets.end()}; }

    double ResultRow::power_db() const { return watts_to_db(power_watts); }

    std::vector<double> default_sweep(const std::string &preset, const ScenarioConfig &config)
    {
        const bool multi = config.radars.size() > 1;
        if (preset == "power-vs-distance")
            return linspace_step(100.0, 500.0, 50.0);
        if (preset == "power-vs-elements")
            return multi ? linspace_step(10.0, 100.0, 10.0) : linspace_step(2.0, 20.0, 2.0);
        if (preset == "min-elements-validation")
            return linspace_step(2.0, 20.0, 2.0);
        if (preset == "power-vs-angle")
            return linspace_step(-60.0, 60.0, 5.0);
        if (preset == "power-vs-aoa-error")
            return linspace_step(0.0, 3.0, 0.5);
        if (preset == "power-vs-num-radars")
            return linspace_step(1.0, static_cast<double>(config.radars.size()), 1.0);
        if (preset == "estimation-pipeline")
            return linspace_step(-100.0, -40.0, 10.0);
        throw InvalidArgument("unknown preset '" + preset + "'");
    }

    ExperimentResult run_experiment(const std::string &preset, const ScenarioConfig &config,
                                    const RunOptions &options)
    {
        if (std::find(presets.begin(), presets.end(), preset) == presets.end())
            throw InvalidArgument("unknown preset '" + preset + "'");
        if (options.trials < 1)
            throw InvalidArgument("need at least one trial");
        config.validate();

        ExperimentResult result;
        result.preset = preset;
        result.sweep_name = sweep_name_of(preset);
        result.sweep_values = options.sweep ? *options.sweep : default_sweep(preset, config);
        for (double v : result.sweep_values)
            if (!std::isfinite(v))
                throw InvalidArgument("sweep values must be finite");
        // Fails fast with a field path before any worker starts.
        for (double v : result.sweep_values)
            build_scenario(apply_sweep(preset, config, v), 0);

        std::vector<Task> tasks;
        for (std::size_t s = 0; s < result.sweep_values.size(); ++s)
            for (std::size_t t = 0; t < options.trials; ++t)
                tasks.push_back({s, t});
        std::vector<std::vector<ResultRow>> out(tasks.size());

        std::size_t threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
        threads = std::min(threads, tasks.size());
        std::atomic<std::size_t> next{0};
        std::exception_ptr error;
        std::mutex error_mutex;
        auto worker = [&] {
            for (std::size_t i = next++; i < tasks.size(); i = next++)
            {
                try
                {
                    const Task &task = tasks[i];
                    out[i] = run_trial(preset, config, result.sweep_values[task.sweep_index], task.trial,
                                       trial_seed(config.seed, task.trial));
                }
                catch (...)
                {
                    std::lock_guard lock(error_mutex);
                    if (!error)
                        error = std::current_exception();
                    next = tasks.size();
                }
            }
        };
        {
            std::vector<std::jthread> pool;
            for (std::size_t i = 1; i < threads; ++i)
                pool.emplace_back(worker);
            worker();
        }
        if (error)
            std::rethrow_exception(error);

        for (std::size_t s = 0; s < result.sweep_values.size(); ++s)
        {
            std::vector<ResultRow> group;
            for (std::size_t i = 0; i < tasks.size(); ++i)
                if (tasks[i].sweep_index == s)
                    group.insert(group.end(), out[i].begin(), out[i].end());
            std::stable_sort(group.begin(), group.end(), [](const ResultRow &a, const ResultRow &b) {
                const std::size_t ra = solver_rank(a.solver), rb = solver_rank(b.solver);
                return ra != rb ? ra < rb : a.trial < b.trial;
            });
            result.rows.insert(result.rows.end(), group.begin(), group.end());
        }

        const PgdOptions pgd;
        result.metadata["config_hash"] = config_hash(config);
        result.metadata["master_seed"] = std::to_string(config.seed);
        result.metadata["trials"] = std::to_string(options.trials);
        result.metadata["pgd_tol"] = format_number(pgd.tol);
        result.metadata["pgd_max_iter"] = std::to_string(pgd.max_iter);
        result.metadata["mmse_grid"] = "40 log-spaced points over [1e-12, 1e4] * s_max^2, widened x1e6 on infeasibility";
        result.metadata["dft_codebook"] = "phase-only columns at beta_max";
        if (preset == "estimation-pipeline")
        {
            const MusicOptions music;
            result.metadata["snapshots"] = std::to_string(config.snapshots);
            result.metadata["music_grid_deg"] = format_number(rad2deg(music.grid_step));
            result.metadata["music_refine_deg"] = format_number(rad2deg(music.refine_step));
        }
        if (preset == "min-elements-validation")
        {
            const std::size_t n2 = config.target.n2x * config.target.n2y;
            result.metadata["n1_min"] = std::to_string(
                min_irs_elements(config.zeta_bar(), n2, config.target.beta_max, config.target.realizations));
            result.metadata["realizations"] = std::to_string(config.target.realizations);
        }
        return result;
    }

    AnglePair inject_aoa_error(const AnglePair &truth, double error_deg, std::uint64_t seed)
    {
        if (!(error_deg >= 0.0))
            throw InvalidArgument("AoA error must be nonnegative");
        if (error_deg == 0.0)
            return truth;
        std::mt19937_64 rng(seed);
        const double sign = (rng() & 1U) ? 1.0 : -1.0;
        const double lim = pi / 2 - 1e-9;
        return {std::clamp(truth.azimuth + sign * deg2rad(error_deg), -lim, lim), truth.elevation};
    }

    std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index)
    {
        // splitmix64 on a per-index offset of the master seed
        std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::string format_number(double value)
    {
        char buf[64];
        const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::scientific);
        return std::string(buf, res.ptr);
    }

    std::string format_csv(const ExperimentResult &result)
    {
        std::string s = "sweep,solver,trial,seed,power_watts,power_db\n";
        for (const ResultRow &r : result.rows)
        {
            s += format_number(r.sweep);
            s += ',';
            s += r.solver;
            s += ',';
            s += std::to_string(r.trial);
            s += ',';
            s += std::to_string(r.seed);
            s += ',';
            s += format_number(r.power_watts);
            s += ',';
            s += format_number(r.power_db());
            s += '\n';
        }
        return s;
    }

    void emit_csv(const ExperimentResult &result, const std::filesystem::path &path)
    {
        std::ofstream f(path, std::ios::binary | std::ios::trunc);
        if (!f)
            throw IoError("cannot open " + path.string() + " for writing");
        const std::string text = format_csv(result);
        f.write(text.data(), static_cast<std::streamsize>(text.size()));
        f.flush();
        if (!f)
            throw IoError("failed writing " + path.string());
    }

    std::vector<ResultRow> parse_csv(const std::string &text)
    {
        std::istringstream in(text);
        std::string line;
        if (!std::getline(in, line) || line != "sweep,solver,trial,seed,power_watts,power_db")
            throw InvalidArgument("missing or unexpected CSV header");

        auto number = [](std::string_view field, auto &out) {
            const auto res = std::from_chars(field.data(), field.data() + field.size(), out);
            if (res.ec != std::errc() || res.ptr != field.data() + field.size())
                throw InvalidArgument("malformed CSV field '" + std::string(field) + "'");
        };

        std::vector<ResultRow> rows;
        std::size_t lineno = 1;
        while (std::getline(in, line))
        {
            ++lineno;
            if (line.empty())
                continue;
            std::vector<std::string_view> f;
            std::string_view rest(line);
            for (std::size_t pos; (pos = rest.find(',')) != std::string_view::npos; rest.remove_prefix(pos + 1))
                f.push_back(rest.substr(0, pos));
            f.push_back(rest);
            if (f.size() != 6)
                throw InvalidArgument("CSV line " + std::to_string(lineno) + " has " + std::to_string(f.size()) +
                                      " fields");
            ResultRow r;
            number(f[0], r.sweep);
            r.solver = std::string(f[1]);
            number(f[2], r.trial);
            number(f[3], r.seed);
            number(f[4], r.power_watts);
            rows.push_back(std::move(r));
        }
        return rows;
    }

    std::string format_metadata(const ExperimentResult &result)
    {
        nlohmann::json j;
        j["preset"] = result.preset;
        j["sweep_name"] = result.sweep_name;
        j["sweep_values"] = result.sweep_values;
        j["metadata"] = result.metadata;
        return j.dump(2) + "\n";
    }

    std::vector<SummaryRow> summarize(const ExperimentResult &result)
    {
        std::vector<SummaryRow> out;
        std::vector<std::size_t> counts;
        for (const ResultRow &r : result.rows)
        {
            if (out.empty() || out.back().sweep != r.sweep || out.back().solver != r.solver)
            {
                out.push_back({r.sweep, r.solver, 0.0});
                counts.push_back(0);
            }
            out.back().mean_watts += r.power_watts;
            ++counts.back();
        }
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i].mean_watts /= static_cast<double>(counts[i]);
        return out;
    }
}

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

#include "irss/irss.h"

#include "irss/config.hpp"
#include "irss/harness.hpp"
#include "irss/optimizers.hpp"

#include <fstream>
#include <new>
#include <string>

struct irss_config
{
    irss::ScenarioConfig config;
    std::string json;
};

struct irss_solution
{
    irss::ReflectionSolution solution;
};

namespace
{
    thread_local std::string last_error;

    irss_status status_of(irss::ErrorCode code) { return static_cast<irss_status>(static_cast<int>(code)); }

    template <typename F>
    irss_status guarded(F &&body)
    {
        try
        {
            last_error.clear();
            body();
            return IRSS_OK;
        }
        catch (const irss::Error &e)
        {
            last_error = e.what();
            return status_of(e.code());
        }
        catch (const std::bad_alloc &)
        {
            last_error = "out of memory";
            return IRSS_ERR_INTERNAL;
        }
        catch (const std::exception &e)
        {
            last_error = e.what();
            return IRSS_ERR_INTERNAL;
        }
        catch (...)
        {
            last_error = "unknown error";
            return IRSS_ERR_INTERNAL;
        }
    }

    void require(bool ok, const char *what)
    {
        if (!ok)
            throw irss::InvalidArgument(what);
    }

    irss::ReflectionSolution solve_named(const irss::ScenarioConfig &cfg, const std::string &solver)
    {
        using namespace irss;
        const Scenario sc = build_scenario(cfg, trial_seed(cfg.seed, 0));
        const ReflectionProblem problem = reflection_problem(sc);
        const QcqpInstance inst = build_instance(problem);
        const double beta = sc.target.beta_max;

        if (solver == "pgd")
            return solve_pgd(inst);
        if (solver == "lagrange")
        {
            const ReflectionSolution pgd = solve_pgd(inst);
            ReflectionSolution sol = pgd;
            sol.theta = lagrange_semiclosed(inst, *pgd.multipliers);
            sol.objective = inst.evaluate(sol.theta);
            sol.solver = "lagrange";
            const KktCertificate cert = kkt_certificate(inst, sol);
            sol.kkt_residual = cert.residual;
            return sol;
        }
        if (solver == "reverse-alignment")
        {
            if (problem.links.size() != 1)
                throw InvalidArgument("reverse-alignment needs a single-radar scenario");
            const LinkTerm &l = problem.links.front();
            ReflectionSolution sol = reverse_alignment(l.u, l.c, beta);
            sol.objective = inst.evaluate(sol.theta);
            return sol;
        }
        if (solver == "mmse")
            return mmse_auto(problem).solution;
        if (solver == "dft-codebook")
            return dft_codebook_search(inst);

        ReflectionSolution sol;
        if (solver == "random-phase")
            sol.theta = random_phase(sc.target.n1(), beta, trial_seed(cfg.seed, 1));
        else if (solver == "no-irs")
            sol.theta = ComplexVec::Zero(static_cast<Eigen::Index>(sc.target.n1()));
        else
            throw InvalidArgument("unknown solver '" + solver + "'");
        sol.solver = solver;
        sol.objective = inst.evaluate(sol.theta);
        return sol;
    }
}

extern "C" {

const char *irss_version(void) { return IRSS_VERSION_STRING; }

const char *irss_status_string(irss_status status)
{
    switch (status)
    {
    case IRSS_OK: return "ok";
    case IRSS_ERR_INVALID_ARGUMENT: return "invalid argument";
    case IRSS_ERR_CONFIG: return "configuration error";
    case IRSS_ERR_IO: return "I/O error";
    case IRSS_ERR_CONVERGENCE: return "convergence failure";
    case IRSS_ERR_SINGULAR: return "singular matrix";
    case IRSS_ERR_INFEASIBLE: return "infeasible";
    case IRSS_ERR_ESTIMATION: return "estimation failure";
    case IRSS_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char *irss_last_error(void) { return last_error.c_str(); }

irss_status irss_config_load(const char *path, irss_config **out)
{
    return guarded([&] {
        require(path && out, "null argument");
        *out = new irss_config{irss::load_config(path), {}};
    });
}

irss_status irss_config_from_json(const char *json, irss_config **out)
{
    return guarded([&] {
        require(json && out, "null argument");
        *out = new irss_config{irss::parse_config(json), {}};
    });
}

irss_status irss_config_default(const char *preset, irss_config **out)
{
    return guarded([&] {
        require(preset && out, "null argument");
        const std::string p(preset);
        if (p == "single")
            *out = new irss_config{irss::default_single_radar_config(), {}};
        else if (p == "three")
            *out = new irss_config{irss::default_three_radar_config(), {}};
        else
            throw irss::InvalidArgument("unknown default config '" + p + "' (use single or three)");
    });
}

irss_status irss_config_set_seed(irss_config *config, uint64_t seed)
{
    return guarded([&] {
        require(config, "null argument");
        config->config.seed = seed;
    });
}

irss_status irss_config_to_json(irss_config *config, const char **out)
{
    return guarded([&] {
        require(config && out, "null argument");
        config->json = irss::to_json(config->config);
        *out = config->json.c_str();
    });
}

void irss_config_free(irss_config *config) { delete config; }

irss_status irss_run_experiment(const irss_config *config, const char *preset, size_t trials, const double *sweep,
                                size_t sweep_len, size_t threads, const char *csv_path, const char *meta_path)
{
    return guarded([&] {
        require(config && preset && csv_path, "null argument");
        require(sweep || sweep_len == 0, "sweep is null but sweep_len is nonzero");
        irss::RunOptions opts;
        opts.trials = trials;
        opts.threads = threads;
        if (sweep && sweep_len)
            opts.sweep = std::vector<double>(sweep, sweep + sweep_len);
        const irss::ExperimentResult r = irss::run_experiment(preset, config->config, opts);
        irss::emit_csv(r, csv_path);
        if (meta_path)
        {
            std::ofstream meta(meta_path, std::ios::binary | std::ios::trunc);
            meta << irss::format_metadata(r);
            if (!meta)
                throw irss::IoError(std::string("failed writing ") + meta_path);
        }
    });
}

irss_status irss_min_irs_elements(double zeta_bar, size_t n2, double beta_max, size_t realizations, size_t *out)
{
    return guarded([&] {
        require(out, "null argument");
        *out = irss::min_irs_elements(zeta_bar, n2, beta_max, realizations);
    });
}

irss_status irss_solve(const irss_config *config, const char *solver, irss_solution **out)
{
    return guarded([&] {
        require(config && solver && out, "null argument");
        *out = new irss_solution{solve_named(config->config, solver)};
    });
}

size_t irss_solution_size(const irss_solution *solution)
{
    return solution ? static_cast<size_t>(solution->solution.theta.size()) : 0;
}

irss_status irss_solution_theta(const irss_solution *solution, double *re, double *im, size_t len)
{
    return guarded([&] {
        require(solution && re && im, "null argument");
        const irss::ComplexVec &t = solution->solution.theta;
        require(len >= static_cast<size_t>(t.size()), "output buffers are too short");
        for (Eigen::Index i = 0; i < t.size(); ++i)
        {
            re[i] = t[i].real();
            im[i] = t[i].imag();
        }
    });
}

double irss_solution_objective(const irss_solution *solution)
{
    return solution ? solution->solution.objective : 0.0;
}

const char *irss_solution_solver(const irss_solution *solution)
{
    return solution ? solution->solution.solver.c_str() : "";
}

size_t irss_solution_iterations(const irss_solution *solution)
{
    return solution ? solution->solution.iterations : 0;
}

double irss_solution_kkt_residual(const irss_solution *solution)
{
    return solution && solution->solution.kkt_residual ? *solution->solution.kkt_residual : -1.0;
}

void irss_solution_free(irss_solution *solution) { delete solution; }
}

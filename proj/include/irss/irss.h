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

/* C interface to the irss core. All handles are opaque; every call returns an irss_status and
 * leaves a thread-local message retrievable with irss_last_error(). */
#ifndef IRSS_IRSS_H
#define IRSS_IRSS_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(IRSS_BUILDING_LIBRARY)
#    define IRSS_API __declspec(dllexport)
#  else
#    define IRSS_API __declspec(dllimport)
#  endif
#else
#  define IRSS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum irss_status
{
    IRSS_OK = 0,
    IRSS_ERR_INVALID_ARGUMENT = 1,
    IRSS_ERR_CONFIG = 2,
    IRSS_ERR_IO = 3,
    IRSS_ERR_CONVERGENCE = 4,
    IRSS_ERR_SINGULAR = 5,
    IRSS_ERR_INFEASIBLE = 6,
    IRSS_ERR_ESTIMATION = 7,
    IRSS_ERR_INTERNAL = 8
} irss_status;

typedef struct irss_config irss_config;
typedef struct irss_solution irss_solution;

IRSS_API const char *irss_version(void);
IRSS_API const char *irss_status_string(irss_status status);
IRSS_API const char *irss_last_error(void);

IRSS_API irss_status irss_config_load(const char *path, irss_config **out);
IRSS_API irss_status irss_config_from_json(const char *json, irss_config **out);
/* preset: "single" or "three" */
IRSS_API irss_status irss_config_default(const char *preset, irss_config **out);
IRSS_API irss_status irss_config_set_seed(irss_config *config, uint64_t seed);
/* Canonical JSON; the returned string is owned by the config and valid until the next call on it. */
IRSS_API irss_status irss_config_to_json(irss_config *config, const char **out);
IRSS_API void irss_config_free(irss_config *config);

/* Runs a preset and writes the CSV to csv_path. sweep may be NULL (preset default). threads 0 means
 * hardware concurrency. meta_path, when not NULL, receives the run metadata as JSON. */
IRSS_API irss_status irss_run_experiment(const irss_config *config, const char *preset, size_t trials,
                                         const double *sweep, size_t sweep_len, size_t threads,
                                         const char *csv_path, const char *meta_path);

IRSS_API irss_status irss_min_irs_elements(double zeta_bar, size_t n2, double beta_max, size_t realizations,
                                           size_t *out);

/* solver: pgd, lagrange, reverse-alignment, mmse, dft-codebook, random-phase, no-irs.
 * Uses NIRS phases drawn from the config seed. */
IRSS_API irss_status irss_solve(const irss_config *config, const char *solver, irss_solution **out);
IRSS_API size_t irss_solution_size(const irss_solution *solution);
IRSS_API irss_status irss_solution_theta(const irss_solution *solution, double *re, double *im, size_t len);
IRSS_API double irss_solution_objective(const irss_solution *solution);
IRSS_API const char *irss_solution_solver(const irss_solution *solution);
IRSS_API size_t irss_solution_iterations(const irss_solution *solution);
/* Negative when no certificate is attached. */
IRSS_API double irss_solution_kkt_residual(const irss_solution *solution);
IRSS_API void irss_solution_free(irss_solution *solution);

#ifdef __cplusplus
}
#endif

#endif

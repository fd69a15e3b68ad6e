// teraris - RIS-assisted NOMA-MIMO link simulation for terahertz bands
// Copyright (C) 2026 The teraris authors
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

#pragma once

#include "teraris/montecarlo.hpp"

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

namespace teraris::app
{

enum ExitCode : int
{
    exit_ok = 0,
    exit_config_error = 1,
    exit_runtime_error = 2,
    exit_validation_failure = 3
};

/// `target_rate,scheme,user,outage,stderr`, one row per (grid point, scheme, user).
std::string outage_csv(const SweepResult &result);

/// `tx_power_dbm,scheme,sum_rate,stderr`, one row per (grid point, scheme).
std::string sumrate_csv(const SweepResult &result);

/// Writes via a temporary file in the same directory followed by a rename.
void write_atomic(const std::filesystem::path &path, const std::string &content);

struct ValidationOptions
{
    double tolerance_sigmas = 3.0;   // closed form vs Monte Carlo, in standard errors
    std::int64_t mc_trials = 20000; // per oracle case
    std::uint64_t seed = 1;
    int pa_requests = 10000;
};

struct ValidationCheck
{
    std::string name;
    bool passed = false;
    std::string detail;
};

struct ValidationReport
{
    std::vector<ValidationCheck> checks;
    bool passed() const;
};

/// Closed-form ergodic capacity against its Monte Carlo oracle on the scenario's
/// default covariance and on random covariances, plus power-allocation branch checks.
ValidationReport run_validation(const ScenarioConfig &cfg, const ValidationOptions &options);

/// Entry point of the `teraris` tool. Returns one of ExitCode.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace teraris::app

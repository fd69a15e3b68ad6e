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

#include "teraris/noma_link.hpp"
#include "teraris/power_allocation.hpp"
#include "teraris/rng.hpp"
#include "teraris/scenario.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace teraris
{

/// A series in a sweep: one of the PA schemes on the configured scenario, or the
/// non-RIS non-THz baseline running `baseline.scheme`.
enum class Scheme
{
    fixed,
    fair,
    improved_fair,
    baseline
};

std::string to_string(Scheme scheme);
std::optional<Scheme> parse_scheme(const std::string &name);

/// Scenario with deterministic channels precomputed; shared read-only by all trials.
struct PreparedScenario
{
    ScenarioConfig config;
    ComplexMatrix far_channel;
    ComplexMatrix near_channel;
    double far_gain = 0.0;  // ‖H‖^2 without fading
    double near_gain = 0.0;
    LinkBudget lb;
};

PreparedScenario prepare_scenario(const ScenarioConfig &cfg);

/// Channel gains ‖H‖^2 of one realization, already assigned to SIC roles.
struct TrialGains
{
    double far = 0.0;
    double near = 0.0;
};

TrialGains draw_trial_gains(const PreparedScenario &scenario, RandomEngine &rng);

struct TrialOutcome
{
    bool near_outage = false;
    bool far_outage = false;
    double sum_rate = 0.0; // C_n + C_m, bits/s/Hz
};

TrialOutcome evaluate_trial(const TrialGains &gains, PaScheme scheme, const RateTargets &targets,
                            const LinkBudget &lb, double fixed_alpha_far);

/// Draws one fading realization, allocates power per instantaneous CSI and evaluates
/// capacities and outage events.
TrialOutcome run_trial(const PreparedScenario &scenario, PaScheme scheme, const RateTargets &targets,
                       RandomEngine &rng);

enum class SweepVariable
{
    target_rate,
    tx_power_dbm
};

struct SweepSpec
{
    SweepVariable variable = SweepVariable::target_rate;
    std::vector<double> grid;
    std::int64_t trials = 100000;
    std::vector<Scheme> schemes;
    std::uint64_t seed = 1;
    int workers = 0;
};

void validate(const SweepSpec &spec);

struct Estimate
{
    double mean = 0.0;
    double std_error = 0.0;
};

struct SeriesPoint
{
    Estimate near_outage;
    Estimate far_outage;
    Estimate sum_rate;
};

struct SweepSeries
{
    Scheme scheme = Scheme::fixed;
    std::vector<SeriesPoint> points;
};

struct SweepResult
{
    SweepVariable variable = SweepVariable::target_rate;
    std::vector<double> grid;
    std::vector<SweepSeries> series;
    ScenarioConfig scenario;
    std::uint64_t seed = 0;
    std::int64_t trials = 0;

    const SweepSeries &series_for(Scheme scheme) const;
};

/// Outage versus target rate with R_n = R_m = grid value at the configured power.
SweepResult run_outage_sweep(const SweepSpec &spec, const ScenarioConfig &cfg);

/// Mean sum rate versus transmit power (dBm) at R_n = R_m = sweep.sumrate_target_rate.
SweepResult run_sumrate_sweep(const SweepSpec &spec, const ScenarioConfig &cfg);

/// Sweep specs populated from the scenario's [sweep] section.
SweepSpec default_outage_spec(const ScenarioConfig &cfg);
SweepSpec default_sumrate_spec(const ScenarioConfig &cfg);

} // namespace teraris

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

#include <optional>
#include <string>

namespace teraris
{

enum class PaScheme
{
    fixed,
    fair,         // basic fair PA: infeasible far user gets all power
    improved_fair // infeasible far user gets none
};

std::string to_string(PaScheme scheme);
std::optional<PaScheme> parse_pa_scheme(const std::string &name);

struct PaRequest
{
    double far_gain = 0.0; // ‖H_m‖^2
    LinkBudget lb{};
    double target_rate_far = 0.0; // R_m, bits/s/Hz
};

struct PaResult
{
    PowerAllocation allocation = PowerAllocation::two_user(1.0);
    bool feasible_far = false;
    PaScheme scheme = PaScheme::fixed;
};

/// ξ = 2^{R_m} - 1.
double target_sinr(double target_rate);

/// Minimum far-user share meeting R_m, ξ(p g + σ^2) / (p (1 + ξ) g), before clipping.
/// +inf when p g = 0 and ξ > 0.
double required_far_share(const PaRequest &req);

PaResult fixed_pa(double alpha_far);
PaResult fair_pa(const PaRequest &req);
PaResult improved_fair_pa(const PaRequest &req);

/// Dispatches on `scheme`; `fixed_alpha_far` is only read by the fixed scheme.
PaResult allocate(PaScheme scheme, const PaRequest &req, double fixed_alpha_far);

struct IterativePaOptions
{
    double xi_escalation = 1.01;
    int max_iterations = 1000;
};

/// Loop form of the fair algorithms, step by step as in their pseudocode. Kept for
/// conformance checks; it converges to the same split as fair_pa / improved_fair_pa.
PaResult iterative_fair_pa(const PaRequest &req, PaScheme scheme, IterativePaOptions options = {});

} // namespace teraris

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

#include "teraris/power_allocation.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace teraris
{

std::string to_string(PaScheme scheme)
{
    switch (scheme)
    {
    case PaScheme::fixed:
        return "fixed";
    case PaScheme::fair:
        return "fair";
    case PaScheme::improved_fair:
        return "improved-fair";
    }
    return "unknown";
}

std::optional<PaScheme> parse_pa_scheme(const std::string &name)
{
    if (name == "fixed")
        return PaScheme::fixed;
    if (name == "fair")
        return PaScheme::fair;
    if (name == "improved-fair" || name == "improved_fair")
        return PaScheme::improved_fair;
    return std::nullopt;
}

double target_sinr(double target_rate)
{
    if (!(target_rate >= 0.0))
        throw std::domain_error("target_sinr: target rate must be >= 0");
    return std::exp2(target_rate) - 1.0;
}

namespace
{

void check(const PaRequest &req)
{
    if (!(req.far_gain >= 0.0) || !std::isfinite(req.far_gain))
        throw std::domain_error("PaRequest: far_gain must be >= 0");
    if (!(req.target_rate_far >= 0.0))
        throw std::domain_error("PaRequest: target_rate_far must be >= 0");
    validate(req.lb);
}

PaResult split(double alpha_far, bool feasible, PaScheme scheme)
{
    return {PowerAllocation::two_user(alpha_far), feasible, scheme};
}

} // namespace

double required_far_share(const PaRequest &req)
{
    check(req);
    const double xi = target_sinr(req.target_rate_far);
    if (xi == 0.0)
        return 0.0;
    const double pg = req.lb.tx_power_w * req.far_gain;
    if (pg == 0.0)
        return std::numeric_limits<double>::infinity();
    return xi * (pg + req.lb.noise_power_w) / (pg * (1.0 + xi));
}

PaResult fixed_pa(double alpha_far)
{
    if (!(alpha_far >= 0.0 && alpha_far <= 1.0))
        throw std::domain_error("fixed_pa: alpha_far must lie in [0, 1]");
    return split(alpha_far, true, PaScheme::fixed);
}

PaResult fair_pa(const PaRequest &req)
{
    const double a = required_far_share(req);
    if (a > 1.0)
        return split(1.0, false, PaScheme::fair);
    return split(a, true, PaScheme::fair);
}

PaResult improved_fair_pa(const PaRequest &req)
{
    const double a = required_far_share(req);
    if (a > 1.0)
        return split(0.0, false, PaScheme::improved_fair);
    return split(a, true, PaScheme::improved_fair);
}

PaResult allocate(PaScheme scheme, const PaRequest &req, double fixed_alpha_far)
{
    switch (scheme)
    {
    case PaScheme::fixed:
        return fixed_pa(fixed_alpha_far);
    case PaScheme::fair:
        return fair_pa(req);
    case PaScheme::improved_fair:
        return improved_fair_pa(req);
    }
    throw std::invalid_argument("allocate: unknown scheme");
}

PaResult iterative_fair_pa(const PaRequest &req, PaScheme scheme, IterativePaOptions options)
{
    if (scheme == PaScheme::fixed)
        throw std::invalid_argument("iterative_fair_pa: only the fair schemes have a loop form");
    if (options.max_iterations < 1 || !(options.xi_escalation > 1.0))
        throw std::invalid_argument("iterative_fair_pa: bad options");
    check(req);

    const double p = req.lb.tx_power_w;
    const double g = req.far_gain;
    const double s2 = req.lb.noise_power_w;
    const double target = req.target_rate_far;

    double xi = target_sinr(target);
    double am = 0.5;
    double an = 0.5;
    double cm = 0.0;
    for (int escalation = 0; escalation < options.max_iterations; ++escalation)
    {
        int steps = 0;
        while (g * p * am - g * p * an < s2 && steps++ < options.max_iterations)
        {
            const double prev_am = am, prev_an = an;
            const double num = xi * (p * g + s2);
            const double den = p * (1.0 + xi) * g;
            if (scheme == PaScheme::fair)
            {
                if (!(num <= den))
                {
                    am = 1.0;
                    an = 0.0;
                }
                else
                {
                    am = den > 0.0 ? num / den : 0.0;
                    an = 1.0 - am;
                }
            }
            else if (num <= den)
            {
                am = den > 0.0 ? num / den : 0.0;
                an = 1.0 - am;
            }
            else
            {
                am = 0.0;
                an = 1.0;
            }
            cm = std::log2(1.0 + p * am * g / (p * g * an + s2));
            if (steps > 1 && am == prev_am && an == prev_an)
                break; // fixed point, later passes change nothing
        }
        if (!(cm < target - rate_tolerance))
            return split(am, true, scheme);
        xi *= options.xi_escalation;
    }
    return split(am, false, scheme);
}

} // namespace teraris

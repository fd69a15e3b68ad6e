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

#include "teraris/noma_link.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace teraris
{

PowerAllocation::PowerAllocation(std::vector<double> coefficients) : coefficients_(std::move(coefficients))
{
    if (coefficients_.empty())
        throw std::invalid_argument("PowerAllocation: at least one coefficient is required");
    double sum = 0.0;
    for (double a : coefficients_)
    {
        if (!(a >= 0.0 && a <= 1.0))
            throw std::invalid_argument("PowerAllocation: coefficient outside [0, 1]: " + std::to_string(a));
        sum += a;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw std::invalid_argument("PowerAllocation: coefficients sum to " + std::to_string(sum) + ", not 1");
}

PowerAllocation PowerAllocation::two_user(double alpha_far)
{
    return PowerAllocation({alpha_far, 1.0 - alpha_far});
}

double PowerAllocation::interference_share(std::size_t k) const
{
    if (k >= coefficients_.size())
        throw std::out_of_range("PowerAllocation: user index " + std::to_string(k) + " out of range");
    return std::accumulate(coefficients_.begin() + static_cast<std::ptrdiff_t>(k) + 1, coefficients_.end(), 0.0);
}

void validate(const LinkBudget &lb)
{
    if (!(lb.tx_power_w >= 0.0) || !std::isfinite(lb.tx_power_w))
        throw std::domain_error("tx_power_w must be >= 0");
    if (!(lb.noise_power_w > 0.0) || !std::isfinite(lb.noise_power_w))
        throw std::domain_error("noise_power_w must be > 0");
}

double channel_gain(const ComplexMatrix &channel)
{
    return channel.squaredNorm();
}

double sinr_cross(double gain_n, const PowerAllocation &pa, std::size_t m, const LinkBudget &lb)
{
    const double rest = pa.interference_share(m);
    const double pg = lb.tx_power_w * gain_n;
    return pg * pa[m] / (pg * rest + lb.noise_power_w);
}

double sinr_own(double gain_k, const PowerAllocation &pa, std::size_t k, const LinkBudget &lb)
{
    // Same expression; only the meaning of the gain differs.
    return sinr_cross(gain_k, pa, k, lb);
}

SinrReport two_user_sinr(double gain_far, double gain_near, const PowerAllocation &pa, const LinkBudget &lb)
{
    if (pa.user_count() != 2)
        throw std::invalid_argument("two_user_sinr: allocation must have two users");
    return {sinr_own(gain_far, pa, 0, lb), sinr_cross(gain_near, pa, 0, lb), sinr_own(gain_near, pa, 1, lb)};
}

double capacity(double sinr)
{
    if (sinr < 0.0)
        throw std::domain_error("capacity: negative SINR");
    return std::log2(1.0 + sinr);
}

TwoUserCapacities capacities(const SinrReport &sinr)
{
    return {capacity(sinr.far_own), capacity(sinr.near_cross), capacity(sinr.near_own)};
}

OutageFlags outage_indicators(const TwoUserCapacities &caps, const RateTargets &targets, bool far_message_present)
{
    if (targets.near < 0.0 || targets.far < 0.0)
        throw std::domain_error("outage_indicators: negative target rate");
    const bool sic_fail = far_message_present && caps.near_cross < targets.far - rate_tolerance;
    const bool own_fail = caps.near_own < targets.near - rate_tolerance;
    return {sic_fail || own_fail, caps.far_own < targets.far - rate_tolerance};
}

} // namespace teraris

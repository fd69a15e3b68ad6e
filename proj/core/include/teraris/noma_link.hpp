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

#include "teraris/common.hpp"

#include <span>
#include <vector>

namespace teraris
{

/// Power coefficients α_k in SIC order: index 0 is the weakest (far) user, the last
/// index the strongest. Coefficients lie in [0, 1] and sum to 1 within 1e-12.
class PowerAllocation
{
public:
    explicit PowerAllocation(std::vector<double> coefficients);

    /// Two-user split (α_m, α_n) = (alpha_far, 1 - alpha_far).
    static PowerAllocation two_user(double alpha_far);

    std::size_t user_count() const noexcept { return coefficients_.size(); }
    double operator[](std::size_t k) const { return coefficients_.at(k); }
    std::span<const double> coefficients() const noexcept { return coefficients_; }

    /// Σ_{l > k} α_l, the power of messages still undecoded when user k is decoded.
    double interference_share(std::size_t k) const;

    double far() const { return coefficients_.front(); }
    double near() const { return coefficients_.back(); }

private:
    std::vector<double> coefficients_;
};

struct LinkBudget
{
    double tx_power_w = 1.0;
    double noise_power_w = 1e-12;
};

void validate(const LinkBudget &lb);

/// SINRs of a two-user pair: far user's own message, near user decoding the far
/// message (SIC step) and near user's own message.
struct SinrReport
{
    double far_own = 0.0;
    double near_cross = 0.0;
    double near_own = 0.0;
};

struct RateTargets
{
    double near = 0.0; // R_n
    double far = 0.0;  // R_m
};

struct TwoUserCapacities
{
    double far_own = 0.0;    // C_m
    double near_cross = 0.0; // C_{n->m}
    double near_own = 0.0;   // C_n
};

struct OutageFlags
{
    bool near = false;
    bool far = false;
};

/// ‖H‖^2, the squared Frobenius norm trace(H H^H).
double channel_gain(const ComplexMatrix &channel);

/// ζ_{n->m}: SINR at the user with gain `gain_n` when decoding message m.
double sinr_cross(double gain_n, const PowerAllocation &pa, std::size_t m, const LinkBudget &lb);

/// ζ_k of user k decoding its own message; messages after k in SIC order interfere.
double sinr_own(double gain_k, const PowerAllocation &pa, std::size_t k, const LinkBudget &lb);

SinrReport two_user_sinr(double gain_far, double gain_near, const PowerAllocation &pa, const LinkBudget &lb);

/// log2(1 + sinr).
double capacity(double sinr);

TwoUserCapacities capacities(const SinrReport &sinr);

/// Near user is in outage when it fails the SIC step or its own rate, far user
/// when it fails its own rate. With `far_message_present == false` (α_m = 0) nothing
/// is superposed for the far user and the SIC step is skipped.
OutageFlags outage_indicators(const TwoUserCapacities &caps, const RateTargets &targets,
                              bool far_message_present = true);

} // namespace teraris

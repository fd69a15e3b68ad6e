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

#include "teraris/channel_model.hpp"
#include "teraris/power_allocation.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace teraris
{

/// Geometric identity of the two users. The SIC role (weak/strong) is decided per
/// realization unless `SicOrder::geometric` is configured.
enum class User
{
    far,
    near
};

enum class PhaseProfile
{
    coherent, // co-phased for the target user's centre antennas
    zero,
    random,
    explicit_list
};

enum class SicOrder
{
    instantaneous, // weaker ‖H_k‖^2 in this realization decodes first
    geometric      // far user always takes the weak role
};

/// Inclusive arithmetic grid start, start + step, ..., <= stop.
struct Grid
{
    double start = 0.0;
    double stop = 0.0;
    double step = 1.0;

    std::vector<double> values() const;
    static Grid parse(const std::string &text); // "start:stop:step"
    std::string to_string() const;
    bool operator==(const Grid &) const = default;
};

struct ChannelSettings
{
    double frequency_hz = 0.3e12;
    double absorption_coeff = 0.0033;
    double path_loss_exponent = 2.0;
    bool misalignment_enabled = true;
    MisalignmentParams misalignment{};
    int ray_count = 3;
    std::vector<double> nlos_gains{0.1, 0.05};
    std::vector<double> nlos_delays_s{2.1503e-9, 4.0521e-9};
    int bs_antennas = 16;
    int user_antennas = 16;
    double element_spacing_wavelengths = 0.5;
    bool operator==(const ChannelSettings &) const = default;
};

struct RisSettings
{
    int element_count = 200;
    double reflection_coeff = 1.0;
    PhaseProfile phase_profile = PhaseProfile::coherent;
    User phase_target = User::far;
    std::uint64_t phase_seed = 7;
    std::vector<double> phase_shifts; // used by PhaseProfile::explicit_list
    double bs_distance_m = 100.0;
    bool operator==(const RisSettings &) const = default;
};

struct UserPlacement
{
    double bs_distance_m = 0.0;
    double ris_distance_m = 0.0;
    bool operator==(const UserPlacement &) const = default;
};

struct UserSettings
{
    UserPlacement far{500.0, 150.0};
    UserPlacement near{250.0, 250.0};
    bool operator==(const UserSettings &) const = default;
};

struct FadingSettings
{
    bool enabled = true;
    double shape_m = 1.0;
    FadingMode mode = FadingMode::per_link;
    bool operator==(const FadingSettings &) const = default;
};

struct NomaSettings
{
    SicOrder sic_order = SicOrder::instantaneous;
    bool operator==(const NomaSettings &) const = default;
};

struct LinkSettings
{
    double tx_power_dbm = 30.0;
    double bandwidth_hz = 10e6;
    double noise_figure_db = 10.0;
    double thermal_noise_dbm_hz = -174.0;
    std::optional<double> noise_power_dbm; // overrides the thermal-noise formula

    double effective_noise_dbm() const;
    bool operator==(const LinkSettings &) const = default;
};

struct PowerSettings
{
    double fixed_alpha_far = 0.8;
    bool operator==(const PowerSettings &) const = default;
};

struct SweepSettings
{
    std::uint64_t seed = 1;
    int trials = 100000;
    int workers = 0; // 0 = hardware concurrency
    Grid outage_grid{0.5, 6.0, 0.5};
    Grid sumrate_grid{0.0, 30.0, 2.0};
    double sumrate_target_rate = 5.0;
    bool operator==(const SweepSettings &) const = default;
};

/// Reference non-RIS, non-THz system used for the sum-rate comparison.
struct BaselineSettings
{
    double frequency_hz = 3.5e9;
    double path_loss_exponent = 3.0;
    int bs_antennas = 1;
    int user_antennas = 1;
    PaScheme scheme = PaScheme::fair;
    bool operator==(const BaselineSettings &) const = default;
};

struct ScenarioConfig
{
    ChannelSettings channel;
    RisSettings ris;
    UserSettings users;
    FadingSettings fading;
    NomaSettings noma;
    LinkSettings link;
    PowerSettings power;
    SweepSettings sweep;
    BaselineSettings baseline;

    bool operator==(const ScenarioConfig &) const = default;

    const UserPlacement &placement(User user) const { return user == User::far ? users.far : users.near; }
    double wavelength_m() const { return speed_of_light / channel.frequency_hz; }
    LinkBudget link_budget() const;
    MultiRayParams multiray() const;
    FadingModel fading_model() const { return FadingModel{fading.shape_m}; }
};

/// Checks every field against its module precondition. Throws ConfigError naming the field.
void validate(const ScenarioConfig &cfg);

/// Scenario variant without RIS or THz effects: R = 0, Rayleigh fading, the baseline
/// carrier and path-loss exponent, no absorption, no misalignment, single ray.
ScenarioConfig non_ris_non_thz_baseline(const ScenarioConfig &cfg);

std::string to_string(User user);
std::string to_string(PhaseProfile profile);
std::string to_string(SicOrder order);
std::string to_string(FadingMode mode);

} // namespace teraris

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

#include "teraris/scenario.hpp"

#include "teraris/config.hpp"

#include <charconv>
#include <cmath>

namespace teraris
{

namespace
{

void require(bool ok, const char *field, const char *constraint, double value)
{
    if (!ok)
        throw ConfigError(field, constraint, format_number(value));
}

bool finite(double x)
{
    return std::isfinite(x);
}

void check_grid(const Grid &g, const char *field, bool non_negative)
{
    if (!(finite(g.start) && finite(g.stop) && finite(g.step)))
        throw ConfigError(field, "values must be finite", g.to_string());
    if (!(g.step > 0.0))
        throw ConfigError(field, "step must be > 0", g.to_string());
    if (g.stop < g.start)
        throw ConfigError(field, "stop must be >= start", g.to_string());
    if (non_negative && g.start < 0.0)
        throw ConfigError(field, "values must be >= 0", g.to_string());
    if ((g.stop - g.start) / g.step > 1e6)
        throw ConfigError(field, "at most 1e6 grid points", g.to_string());
}

} // namespace

std::vector<double> Grid::values() const
{
    std::vector<double> v;
    if (!(step > 0.0) || stop < start)
        return v;
    const auto n = static_cast<long long>(std::floor((stop - start) / step + 1e-9)) + 1;
    v.reserve(static_cast<std::size_t>(n));
    for (long long k = 0; k < n; ++k)
        v.push_back(start + static_cast<double>(k) * step);
    return v;
}

Grid Grid::parse(const std::string &text)
{
    std::vector<double> parts;
    std::size_t pos = 0;
    while (true)
    {
        const std::size_t colon = text.find(':', pos);
        const std::string token = text.substr(pos, colon == std::string::npos ? std::string::npos : colon - pos);
        double v = 0.0;
        const char *first = token.data();
        const char *last = token.data() + token.size();
        while (first < last && *first == ' ')
            ++first;
        while (last > first && last[-1] == ' ')
            --last;
        const auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc() || ptr != last || first == last)
            throw ConfigError("grid", "expected start:stop:step or a single value", text);
        parts.push_back(v);
        if (colon == std::string::npos)
            break;
        pos = colon + 1;
    }
    if (parts.size() == 1)
        return {parts[0], parts[0], 1.0};
    if (parts.size() == 3)
        return {parts[0], parts[1], parts[2]};
    throw ConfigError("grid", "expected start:stop:step or a single value", text);
}

std::string Grid::to_string() const
{
    return format_number(start) + ":" + format_number(stop) + ":" + format_number(step);
}

double LinkSettings::effective_noise_dbm() const
{
    if (noise_power_dbm)
        return *noise_power_dbm;
    return thermal_noise_dbm_hz + 10.0 * std::log10(bandwidth_hz) + noise_figure_db;
}

LinkBudget ScenarioConfig::link_budget() const
{
    return {dbm_to_watt(link.tx_power_dbm), dbm_to_watt(link.effective_noise_dbm())};
}

MultiRayParams ScenarioConfig::multiray() const
{
    return {channel.ray_count, channel.nlos_gains, channel.nlos_delays_s};
}

void validate(const ScenarioConfig &cfg)
{
    const auto &ch = cfg.channel;
    require(finite(ch.frequency_hz) && ch.frequency_hz > 0.0, "channel.frequency_hz", "must be > 0", ch.frequency_hz);
    require(finite(ch.absorption_coeff) && ch.absorption_coeff >= 0.0, "channel.absorption_coeff", "must be >= 0",
            ch.absorption_coeff);
    require(finite(ch.path_loss_exponent) && ch.path_loss_exponent > 0.0, "channel.path_loss_exponent",
            "must be > 0", ch.path_loss_exponent);
    require(finite(ch.misalignment.aperture_radius_m) && ch.misalignment.aperture_radius_m > 0.0,
            "channel.aperture_radius_m", "must be > 0", ch.misalignment.aperture_radius_m);
    require(finite(ch.misalignment.beamwidth_m) && ch.misalignment.beamwidth_m > 0.0, "channel.beamwidth_m",
            "must be > 0", ch.misalignment.beamwidth_m);
    require(finite(ch.misalignment.pointing_error_m) && ch.misalignment.pointing_error_m >= 0.0,
            "channel.pointing_error_m", "must be >= 0", ch.misalignment.pointing_error_m);
    if (ch.misalignment_enabled)
    {
        // Huge aperture/beam ratios overflow the equivalent beam width.
        try
        {
            misalignment_gain(ch.misalignment);
        }
        catch (const std::domain_error &)
        {
            throw ConfigError("channel.beamwidth_m", "gives a non-finite equivalent beam width",
                              format_number(ch.misalignment.beamwidth_m));
        }
    }
    require(ch.ray_count >= 1, "channel.ray_count", "must be >= 1", ch.ray_count);
    const auto nlos = static_cast<std::size_t>(ch.ray_count - 1);
    require(ch.nlos_gains.size() == nlos, "channel.nlos_gains", "must have ray_count - 1 entries",
            static_cast<double>(ch.nlos_gains.size()));
    require(ch.nlos_delays_s.size() == nlos, "channel.nlos_delays_s", "must have ray_count - 1 entries",
            static_cast<double>(ch.nlos_delays_s.size()));
    for (double g : ch.nlos_gains)
        require(finite(g), "channel.nlos_gains", "must be finite", g);
    for (double t : ch.nlos_delays_s)
        require(finite(t) && t >= 0.0, "channel.nlos_delays_s", "must be >= 0", t);
    require(ch.bs_antennas >= 1, "channel.bs_antennas", "must be >= 1", ch.bs_antennas);
    require(ch.user_antennas >= 1, "channel.user_antennas", "must be >= 1", ch.user_antennas);
    require(finite(ch.element_spacing_wavelengths) && ch.element_spacing_wavelengths > 0.0,
            "channel.element_spacing_wavelengths", "must be > 0", ch.element_spacing_wavelengths);

    const auto &ris = cfg.ris;
    require(ris.element_count >= 0, "ris.element_count", "must be >= 0", ris.element_count);
    require(ris.reflection_coeff >= 0.0 && ris.reflection_coeff <= 1.0, "ris.reflection_coeff", "must lie in [0, 1]",
            ris.reflection_coeff);
    require(finite(ris.bs_distance_m) && ris.bs_distance_m > 0.0, "ris.bs_distance_m", "must be > 0",
            ris.bs_distance_m);
    if (ris.phase_profile == PhaseProfile::explicit_list)
        require(ris.phase_shifts.size() == static_cast<std::size_t>(ris.element_count), "ris.phase_shifts",
                "must have element_count entries", static_cast<double>(ris.phase_shifts.size()));
    for (double phi : ris.phase_shifts)
        require(finite(phi), "ris.phase_shifts", "must be finite", phi);

    const auto &u = cfg.users;
    require(finite(u.far.bs_distance_m) && u.far.bs_distance_m > 0.0, "users.far_bs_distance_m", "must be > 0",
            u.far.bs_distance_m);
    require(finite(u.far.ris_distance_m) && u.far.ris_distance_m > 0.0, "users.far_ris_distance_m", "must be > 0",
            u.far.ris_distance_m);
    require(finite(u.near.bs_distance_m) && u.near.bs_distance_m > 0.0, "users.near_bs_distance_m", "must be > 0",
            u.near.bs_distance_m);
    require(finite(u.near.ris_distance_m) && u.near.ris_distance_m > 0.0, "users.near_ris_distance_m",
            "must be > 0", u.near.ris_distance_m);

    require(finite(cfg.fading.shape_m) && cfg.fading.shape_m >= 0.5, "fading.shape_m", "must be >= 0.5",
            cfg.fading.shape_m);

    const auto &link = cfg.link;
    require(finite(link.tx_power_dbm), "link.tx_power_dbm", "must be finite", link.tx_power_dbm);
    require(finite(link.bandwidth_hz) && link.bandwidth_hz > 0.0, "link.bandwidth_hz", "must be > 0",
            link.bandwidth_hz);
    require(finite(link.noise_figure_db), "link.noise_figure_db", "must be finite", link.noise_figure_db);
    require(finite(link.thermal_noise_dbm_hz), "link.thermal_noise_dbm_hz", "must be finite",
            link.thermal_noise_dbm_hz);
    if (link.noise_power_dbm)
        require(finite(*link.noise_power_dbm), "link.noise_power_dbm", "must be finite", *link.noise_power_dbm);

    require(cfg.power.fixed_alpha_far >= 0.0 && cfg.power.fixed_alpha_far <= 1.0, "power.fixed_alpha_far",
            "must lie in [0, 1]", cfg.power.fixed_alpha_far);

    const auto &sw = cfg.sweep;
    require(sw.trials >= 1, "sweep.trials", "must be >= 1", sw.trials);
    require(sw.workers >= 0, "sweep.workers", "must be >= 0", sw.workers);
    check_grid(sw.outage_grid, "sweep.outage_grid", true);
    check_grid(sw.sumrate_grid, "sweep.sumrate_grid", false);
    require(finite(sw.sumrate_target_rate) && sw.sumrate_target_rate >= 0.0, "sweep.sumrate_target_rate",
            "must be >= 0", sw.sumrate_target_rate);

    const auto &b = cfg.baseline;
    require(finite(b.frequency_hz) && b.frequency_hz > 0.0, "baseline.frequency_hz", "must be > 0", b.frequency_hz);
    require(finite(b.path_loss_exponent) && b.path_loss_exponent > 0.0, "baseline.path_loss_exponent",
            "must be > 0", b.path_loss_exponent);
    require(b.bs_antennas >= 1, "baseline.bs_antennas", "must be >= 1", b.bs_antennas);
    require(b.user_antennas >= 1, "baseline.user_antennas", "must be >= 1", b.user_antennas);
}

ScenarioConfig non_ris_non_thz_baseline(const ScenarioConfig &cfg)
{
    ScenarioConfig out = cfg;
    out.channel.frequency_hz = cfg.baseline.frequency_hz;
    out.channel.absorption_coeff = 0.0;
    out.channel.path_loss_exponent = cfg.baseline.path_loss_exponent;
    out.channel.misalignment_enabled = false;
    out.channel.ray_count = 1;
    out.channel.nlos_gains.clear();
    out.channel.nlos_delays_s.clear();
    out.channel.bs_antennas = cfg.baseline.bs_antennas;
    out.channel.user_antennas = cfg.baseline.user_antennas;
    out.ris.element_count = 0;
    out.ris.phase_profile = PhaseProfile::zero;
    out.ris.phase_shifts.clear();
    out.fading.enabled = true;
    out.fading.shape_m = 1.0;
    return out;
}

std::string to_string(User user)
{
    return user == User::far ? "far" : "near";
}

std::string to_string(PhaseProfile profile)
{
    switch (profile)
    {
    case PhaseProfile::coherent:
        return "coherent";
    case PhaseProfile::zero:
        return "zero";
    case PhaseProfile::random:
        return "random";
    case PhaseProfile::explicit_list:
        return "explicit";
    }
    return "unknown";
}

std::string to_string(SicOrder order)
{
    return order == SicOrder::instantaneous ? "instantaneous" : "geometric";
}

std::string to_string(FadingMode mode)
{
    return mode == FadingMode::per_link ? "per-link" : "per-entry";
}

} // namespace teraris

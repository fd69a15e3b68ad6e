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

#include "teraris/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <sstream>

namespace teraris
{

std::string format_number(double value)
{
    if (std::isnan(value))
        return "nan";
    if (std::isinf(value))
        return value > 0 ? "inf" : "-inf";
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    if (ec != std::errc())
        throw std::runtime_error("format_number: conversion failed");
    return std::string(buf, ptr);
}

namespace
{

std::string trim(const std::string &s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string &field, const std::string &text)
{
    double v = 0.0;
    const char *first = text.data();
    const char *last = first + text.size();
    if (first != last && *first == '+')
        ++first;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || first == last || !std::isfinite(v))
        throw ConfigError(field, "expected a finite number", text);
    return v;
}

template <typename Int>
Int parse_integer(const std::string &field, const std::string &text)
{
    Int v{};
    const char *first = text.data();
    const char *last = first + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || first == last)
        throw ConfigError(field, "expected an integer", text);
    return v;
}

bool parse_bool(const std::string &field, const std::string &text)
{
    if (text == "true" || text == "on" || text == "yes" || text == "1")
        return true;
    if (text == "false" || text == "off" || text == "no" || text == "0")
        return false;
    throw ConfigError(field, "expected true or false", text);
}

std::vector<double> parse_list(const std::string &field, const std::string &text)
{
    std::vector<double> out;
    if (trim(text).empty())
        return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(parse_double(field, trim(item)));
    if (!text.empty() && text.back() == ',')
        throw ConfigError(field, "trailing comma in list", text);
    return out;
}

std::string format_list(const std::vector<double> &v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
    {
        if (i)
            s += ", ";
        s += format_number(v[i]);
    }
    return s;
}

std::string format_bool(bool b)
{
    return b ? "true" : "false";
}

struct Field
{
    std::string key; // "section.name"
    std::function<void(ScenarioConfig &, const std::string &)> set;
    std::function<std::string(const ScenarioConfig &)> get;
};

template <typename Member>
Field number(std::string key, Member member)
{
    return {key,
            [member, key](ScenarioConfig &c, const std::string &v) { member(c) = parse_double(key, v); },
            [member](const ScenarioConfig &c) { return format_number(member(const_cast<ScenarioConfig &>(c))); }};
}

template <typename Member>
Field integer(std::string key, Member member)
{
    return {key,
            [member, key](ScenarioConfig &c, const std::string &v) {
                using T = std::remove_reference_t<decltype(member(c))>;
                member(c) = parse_integer<T>(key, v);
            },
            [member](const ScenarioConfig &c) { return std::to_string(member(const_cast<ScenarioConfig &>(c))); }};
}

template <typename Member>
Field boolean(std::string key, Member member)
{
    return {key, [member, key](ScenarioConfig &c, const std::string &v) { member(c) = parse_bool(key, v); },
            [member](const ScenarioConfig &c) { return format_bool(member(const_cast<ScenarioConfig &>(c))); }};
}

template <typename Member>
Field list(std::string key, Member member)
{
    return {key, [member, key](ScenarioConfig &c, const std::string &v) { member(c) = parse_list(key, v); },
            [member](const ScenarioConfig &c) { return format_list(member(const_cast<ScenarioConfig &>(c))); }};
}

template <typename Member>
Field grid(std::string key, Member member)
{
    return {key,
            [member, key](ScenarioConfig &c, const std::string &v) {
                try
                {
                    member(c) = Grid::parse(v);
                }
                catch (const ConfigError &)
                {
                    throw ConfigError(key, "expected start:stop:step or a single value", v);
                }
            },
            [member](const ScenarioConfig &c) { return member(const_cast<ScenarioConfig &>(c)).to_string(); }};
}

template <typename Enum, typename Member>
Field choice(std::string key, Member member, std::vector<std::pair<std::string, Enum>> names)
{
    return {key,
            [member, key, names](ScenarioConfig &c, const std::string &v) {
                for (const auto &[n, e] : names)
                    if (n == v)
                    {
                        member(c) = e;
                        return;
                    }
                std::string allowed;
                for (const auto &[n, e] : names)
                    allowed += (allowed.empty() ? "" : "|") + n;
                throw ConfigError(key, "expected one of " + allowed, v);
            },
            [member, names](const ScenarioConfig &c) {
                const Enum e = member(const_cast<ScenarioConfig &>(c));
                for (const auto &[n, x] : names)
                    if (x == e)
                        return n;
                return std::string("?");
            }};
}

#define TERARIS_M(expr) [](ScenarioConfig & c) -> auto & { return c.expr; }

const std::vector<Field> &fields()
{
    static const std::vector<Field> table = {
        number("channel.frequency_hz", TERARIS_M(channel.frequency_hz)),
        number("channel.absorption_coeff", TERARIS_M(channel.absorption_coeff)),
        number("channel.path_loss_exponent", TERARIS_M(channel.path_loss_exponent)),
        boolean("channel.misalignment", TERARIS_M(channel.misalignment_enabled)),
        number("channel.aperture_radius_m", TERARIS_M(channel.misalignment.aperture_radius_m)),
        number("channel.beamwidth_m", TERARIS_M(channel.misalignment.beamwidth_m)),
        number("channel.pointing_error_m", TERARIS_M(channel.misalignment.pointing_error_m)),
        integer("channel.ray_count", TERARIS_M(channel.ray_count)),
        list("channel.nlos_gains", TERARIS_M(channel.nlos_gains)),
        list("channel.nlos_delays_s", TERARIS_M(channel.nlos_delays_s)),
        integer("channel.bs_antennas", TERARIS_M(channel.bs_antennas)),
        integer("channel.user_antennas", TERARIS_M(channel.user_antennas)),
        number("channel.element_spacing_wavelengths", TERARIS_M(channel.element_spacing_wavelengths)),

        integer("ris.element_count", TERARIS_M(ris.element_count)),
        number("ris.reflection_coeff", TERARIS_M(ris.reflection_coeff)),
        choice<PhaseProfile>("ris.phase_profile", TERARIS_M(ris.phase_profile),
                             {{"coherent", PhaseProfile::coherent},
                              {"zero", PhaseProfile::zero},
                              {"random", PhaseProfile::random},
                              {"explicit", PhaseProfile::explicit_list}}),
        choice<User>("ris.phase_target", TERARIS_M(ris.phase_target), {{"far", User::far}, {"near", User::near}}),
        integer("ris.phase_seed", TERARIS_M(ris.phase_seed)),
        list("ris.phase_shifts", TERARIS_M(ris.phase_shifts)),
        number("ris.bs_distance_m", TERARIS_M(ris.bs_distance_m)),

        number("users.far_bs_distance_m", TERARIS_M(users.far.bs_distance_m)),
        number("users.far_ris_distance_m", TERARIS_M(users.far.ris_distance_m)),
        number("users.near_bs_distance_m", TERARIS_M(users.near.bs_distance_m)),
        number("users.near_ris_distance_m", TERARIS_M(users.near.ris_distance_m)),

        boolean("fading.enabled", TERARIS_M(fading.enabled)),
        number("fading.shape_m", TERARIS_M(fading.shape_m)),
        choice<FadingMode>("fading.mode", TERARIS_M(fading.mode),
                           {{"per-link", FadingMode::per_link}, {"per-entry", FadingMode::per_entry}}),

        choice<SicOrder>("noma.sic_order", TERARIS_M(noma.sic_order),
                         {{"instantaneous", SicOrder::instantaneous}, {"geometric", SicOrder::geometric}}),

        number("link.tx_power_dbm", TERARIS_M(link.tx_power_dbm)),
        number("link.bandwidth_hz", TERARIS_M(link.bandwidth_hz)),
        number("link.noise_figure_db", TERARIS_M(link.noise_figure_db)),
        number("link.thermal_noise_dbm_hz", TERARIS_M(link.thermal_noise_dbm_hz)),
        {"link.noise_power_dbm",
         [](ScenarioConfig &c, const std::string &v) {
             if (v == "auto")
                 c.link.noise_power_dbm.reset();
             else
                 c.link.noise_power_dbm = parse_double("link.noise_power_dbm", v);
         },
         [](const ScenarioConfig &c) {
             return c.link.noise_power_dbm ? format_number(*c.link.noise_power_dbm) : std::string("auto");
         }},

        number("power.fixed_alpha_far", TERARIS_M(power.fixed_alpha_far)),

        integer("sweep.seed", TERARIS_M(sweep.seed)),
        integer("sweep.trials", TERARIS_M(sweep.trials)),
        integer("sweep.workers", TERARIS_M(sweep.workers)),
        grid("sweep.outage_grid", TERARIS_M(sweep.outage_grid)),
        grid("sweep.sumrate_grid", TERARIS_M(sweep.sumrate_grid)),
        number("sweep.sumrate_target_rate", TERARIS_M(sweep.sumrate_target_rate)),

        number("baseline.frequency_hz", TERARIS_M(baseline.frequency_hz)),
        number("baseline.path_loss_exponent", TERARIS_M(baseline.path_loss_exponent)),
        integer("baseline.bs_antennas", TERARIS_M(baseline.bs_antennas)),
        integer("baseline.user_antennas", TERARIS_M(baseline.user_antennas)),
        choice<PaScheme>("baseline.scheme", TERARIS_M(baseline.scheme),
                         {{"fixed", PaScheme::fixed},
                          {"fair", PaScheme::fair},
                          {"improved-fair", PaScheme::improved_fair}}),
    };
    return table;
}

#undef TERARIS_M

} // namespace

ScenarioConfig parse_config(const std::string &text)
{
    std::map<std::string, const Field *> index;
    std::set<std::string> sections;
    for (const auto &f : fields())
    {
        index[f.key] = &f;
        sections.insert(f.key.substr(0, f.key.find('.')));
    }

    ScenarioConfig cfg;
    std::set<std::string> seen;
    std::string section;
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw))
    {
        ++line_no;
        const std::string where = "line " + std::to_string(line_no);
        std::string line = raw;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty())
            continue;
        if (line.front() == '[')
        {
            if (line.back() != ']')
                throw ConfigError(where, "malformed section header", raw);
            section = trim(line.substr(1, line.size() - 2));
            if (!sections.count(section))
                throw ConfigError(section, "unknown section", where);
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(where, "expected key = value", raw);
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (section.empty())
            throw ConfigError(key, "key outside of any section", where);
        const std::string full = section + "." + key;
        const auto it = index.find(full);
        if (it == index.end())
            throw ConfigError(full, "unknown key", where);
        if (!seen.insert(full).second)
            throw ConfigError(full, "duplicate key", where);
        it->second->set(cfg, value);
    }
    validate(cfg);
    return cfg;
}

ScenarioConfig load_config(const std::filesystem::path &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigError("--config", "file cannot be opened", path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string format_config(const ScenarioConfig &cfg)
{
    std::string out;
    std::string section;
    for (const auto &f : fields())
    {
        const auto dot = f.key.find('.');
        const std::string s = f.key.substr(0, dot);
        if (s != section)
        {
            if (!section.empty())
                out += "\n";
            out += "[" + s + "]\n";
            section = s;
        }
        out += f.key.substr(dot + 1) + " = " + f.get(cfg) + "\n";
    }
    return out;
}

} // namespace teraris

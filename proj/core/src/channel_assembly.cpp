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

#include "teraris/channel_assembly.hpp"

#include <cmath>

namespace teraris
{

namespace
{

double spacing_m(const ScenarioConfig &cfg)
{
    return cfg.channel.element_spacing_wavelengths * cfg.wavelength_m();
}

std::vector<double> bs_array(const ScenarioConfig &cfg)
{
    return ula_positions(cfg.channel.bs_antennas, spacing_m(cfg));
}

std::vector<double> user_array(const ScenarioConfig &cfg)
{
    return ula_positions(cfg.channel.user_antennas, spacing_m(cfg));
}

std::vector<double> ris_array(const ScenarioConfig &cfg)
{
    return ula_positions(cfg.ris.element_count, spacing_m(cfg));
}

RealMatrix bs_to_elements(const ScenarioConfig &cfg)
{
    return broadside_distances(cfg.ris.bs_distance_m, bs_array(cfg), ris_array(cfg));
}

RealMatrix elements_to_user(const ScenarioConfig &cfg, User user)
{
    return broadside_distances(cfg.placement(user).ris_distance_m, ris_array(cfg), user_array(cfg));
}

} // namespace

RealMatrix direct_distances(const ScenarioConfig &cfg, User user)
{
    return broadside_distances(cfg.placement(user).bs_distance_m, user_array(cfg), bs_array(cfg));
}

ComplexMatrix direct_channel_matrix(const ScenarioConfig &cfg, User user)
{
    const RealMatrix d = direct_distances(cfg, user);
    const MultiRayParams rays = cfg.multiray();
    ThzLinkParams link{cfg.channel.frequency_hz, cfg.channel.absorption_coeff, 1.0, cfg.channel.path_loss_exponent};
    ComplexMatrix h(d.rows(), d.cols());
    for (Eigen::Index i = 0; i < d.cols(); ++i)
        for (Eigen::Index j = 0; j < d.rows(); ++j)
        {
            link.distance_m = d(j, i);
            const Complex los = cfg.channel.misalignment_enabled ? los_attenuation(link, cfg.channel.misalignment)
                                                                 : los_attenuation(link);
            h(j, i) = multiray_response(los, rays, link.frequency_hz);
        }
    return h;
}

std::vector<double> ris_phase_shifts(const ScenarioConfig &cfg)
{
    const auto r = static_cast<std::size_t>(cfg.ris.element_count);
    std::vector<double> phases(r, 0.0);
    switch (cfg.ris.phase_profile)
    {
    case PhaseProfile::zero:
        break;
    case PhaseProfile::explicit_list:
        phases = cfg.ris.phase_shifts;
        break;
    case PhaseProfile::random:
    {
        RandomEngine rng = stream_engine(cfg.ris.phase_seed, 0);
        std::uniform_real_distribution<double> u(0.0, 2.0 * pi);
        for (double &p : phases)
            p = u(rng);
        break;
    }
    case PhaseProfile::coherent:
    {
        if (r == 0)
            break;
        // Cancel the travelled phase between the centre BS antenna and the target's centre antenna.
        const RealMatrix a = bs_to_elements(cfg);
        const RealMatrix b = elements_to_user(cfg, cfg.ris.phase_target);
        const Eigen::Index ci = a.rows() / 2;
        const Eigen::Index cj = b.cols() / 2;
        const double lambda = cfg.wavelength_m();
        for (std::size_t k = 0; k < r; ++k)
        {
            const auto e = static_cast<Eigen::Index>(k);
            const double cycles = (a(ci, e) + b(e, cj)) / lambda;
            phases[k] = 2.0 * pi * (cycles - std::floor(cycles));
        }
        break;
    }
    }
    return phases;
}

RisParams ris_params(const ScenarioConfig &cfg, User user)
{
    RisParams p;
    p.reflection_coeffs.assign(static_cast<std::size_t>(cfg.ris.element_count), cfg.ris.reflection_coeff);
    p.phase_shifts = ris_phase_shifts(cfg);
    p.bs_to_element_m = bs_to_elements(cfg);
    p.element_to_user_m = elements_to_user(cfg, user);
    return p;
}

ComplexMatrix ris_channel_matrix(const ScenarioConfig &cfg, User user)
{
    return ris_channel_matrix(ris_params(cfg, user), cfg.channel.frequency_hz, cfg.channel.absorption_coeff);
}

ComplexMatrix user_channel(const ScenarioConfig &cfg, User user)
{
    return combine_channels(direct_channel_matrix(cfg, user), ris_channel_matrix(cfg, user));
}

} // namespace teraris

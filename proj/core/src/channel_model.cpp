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

#include "teraris/channel_model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace teraris
{

namespace
{

[[noreturn]] void domain_fail(const std::string &what)
{
    throw std::domain_error(what);
}

bool finite_positive(double x)
{
    return std::isfinite(x) && x > 0.0;
}

} // namespace

void validate(const ThzLinkParams &link)
{
    if (!finite_positive(link.frequency_hz))
        domain_fail("frequency_hz must be > 0");
    if (!std::isfinite(link.absorption_coeff) || link.absorption_coeff < 0.0)
        domain_fail("absorption_coeff must be >= 0");
    if (!finite_positive(link.distance_m))
        domain_fail("distance_m must be > 0");
    if (!finite_positive(link.path_loss_exponent))
        domain_fail("path_loss_exponent must be > 0");
}

void validate(const MisalignmentParams &mis)
{
    if (!finite_positive(mis.aperture_radius_m))
        domain_fail("aperture_radius_m must be > 0");
    if (!finite_positive(mis.beamwidth_m))
        domain_fail("beamwidth_m must be > 0");
    if (!std::isfinite(mis.pointing_error_m) || mis.pointing_error_m < 0.0)
        domain_fail("pointing_error_m must be >= 0");
}

void validate(const MultiRayParams &rays)
{
    if (rays.ray_count < 1)
        domain_fail("ray_count must be >= 1");
    const auto nlos = static_cast<std::size_t>(rays.ray_count - 1);
    if (rays.nlos_gains.size() != nlos || rays.nlos_delays_s.size() != nlos)
        domain_fail("nlos_gains and nlos_delays_s must both have ray_count - 1 entries");
    for (std::size_t q = 0; q < nlos; ++q)
        if (!std::isfinite(rays.nlos_gains[q]) || !std::isfinite(rays.nlos_delays_s[q]))
            domain_fail("nlos_gains and nlos_delays_s must be finite");
}

void validate(const RisParams &ris)
{
    const auto r = static_cast<Eigen::Index>(ris.element_count());
    if (ris.phase_shifts.size() != ris.reflection_coeffs.size())
        domain_fail("phase_shifts must have one entry per element");
    for (double eta : ris.reflection_coeffs)
        if (!(eta >= 0.0 && eta <= 1.0))
            domain_fail("reflection_coeffs must lie in [0, 1]");
    for (double phi : ris.phase_shifts)
        if (!std::isfinite(phi))
            domain_fail("phase_shifts must be finite");
    if (r == 0)
        return;
    if (ris.bs_to_element_m.cols() != r || ris.element_to_user_m.rows() != r)
        domain_fail("distance matrices must be N x R and R x M");
    if (!(ris.bs_to_element_m.array() > 0.0).all() || !ris.bs_to_element_m.allFinite())
        domain_fail("bs_to_element_m distances must be > 0");
    if (!(ris.element_to_user_m.array() > 0.0).all() || !ris.element_to_user_m.allFinite())
        domain_fail("element_to_user_m distances must be > 0");
}

void validate(const FadingModel &model)
{
    if (!(model.shape_m >= 0.5) || !std::isfinite(model.shape_m))
        domain_fail("shape_m must be >= 0.5");
}

double misalignment_gain(const MisalignmentParams &mis)
{
    validate(mis);
    const double u = std::sqrt(pi) * mis.aperture_radius_m / (std::sqrt(2.0) * mis.beamwidth_m);
    const double erf_u = std::erf(u);
    // 1/w_e^2 is written out so that large u (e^{-u^2} underflow) stays finite.
    const double inv_we2 = 2.0 * u * std::exp(-u * u) / (mis.beamwidth_m * mis.beamwidth_m * std::sqrt(pi) * erf_u);
    if (!std::isfinite(inv_we2))
        domain_fail("beamwidth_m gives a non-finite equivalent beam width");
    const double le = mis.pointing_error_m;
    return erf_u * erf_u * std::exp(-2.0 * le * le * inv_we2);
}

Complex los_attenuation(const ThzLinkParams &link)
{
    validate(link);
    const double spreading = speed_of_light / (4.0 * pi * link.frequency_hz) *
                             std::pow(link.distance_m, -link.path_loss_exponent / 2.0);
    const double absorption = std::exp(-link.absorption_coeff * link.distance_m / 2.0);
    return {spreading * absorption, 0.0};
}

Complex los_attenuation(const ThzLinkParams &link, const MisalignmentParams &mis)
{
    return los_attenuation(link) * misalignment_gain(mis);
}

Complex multiray_response(Complex los, const MultiRayParams &rays, double frequency_hz)
{
    validate(rays);
    if (rays.ray_count == 1)
        return los;
    Complex sum{0.0, 0.0};
    for (std::size_t q = 0; q < rays.nlos_gains.size(); ++q)
        sum += rays.nlos_gains[q] * std::polar(1.0, -2.0 * pi * frequency_hz * rays.nlos_delays_s[q]);
    return los * (1.0 + std::sqrt(1.0 / (rays.ray_count - 1)) * sum);
}

Complex ris_element_gain(double reflection_coeff, double phase_shift, double bs_to_element_m,
                         double element_to_user_m, double frequency_hz, double absorption_coeff)
{
    if (!(bs_to_element_m > 0.0) || !(element_to_user_m > 0.0))
        domain_fail("ris_element_gain: distances must be > 0");
    const double lambda = speed_of_light / frequency_hz;
    const double path = bs_to_element_m + element_to_user_m;
    const double magnitude = reflection_coeff * lambda /
                             (8.0 * std::sqrt(pi * pi * pi) * bs_to_element_m * element_to_user_m) *
                             std::exp(-absorption_coeff * path / 2.0);
    // Reduce the travelled phase modulo one wavelength before scaling by 2π.
    const double cycles = path / lambda;
    const double frac = cycles - std::floor(cycles);
    return std::polar(magnitude, phase_shift - 2.0 * pi * frac);
}

ComplexMatrix ris_channel_matrix(const RisParams &ris, double frequency_hz, double absorption_coeff)
{
    validate(ris);
    const Eigen::Index n = ris.bs_to_element_m.rows();
    const Eigen::Index m = ris.element_to_user_m.cols();
    ComplexMatrix g = ComplexMatrix::Zero(m, n);
    const auto r_count = static_cast<Eigen::Index>(ris.element_count());
    for (Eigen::Index r = 0; r < r_count; ++r)
    {
        const auto ru = static_cast<std::size_t>(r);
        if (ris.reflection_coeffs[ru] == 0.0)
            continue;
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < m; ++j)
                g(j, i) += ris_element_gain(ris.reflection_coeffs[ru], ris.phase_shifts[ru], ris.bs_to_element_m(i, r),
                                            ris.element_to_user_m(r, j), frequency_hz, absorption_coeff);
    }
    return g;
}

ComplexMatrix combine_channels(const ComplexMatrix &direct, const ComplexMatrix &ris)
{
    if (direct.rows() != ris.rows() || direct.cols() != ris.cols())
        throw std::invalid_argument("combine_channels: dimension mismatch (" + std::to_string(direct.rows()) + "x" +
                                    std::to_string(direct.cols()) + " vs " + std::to_string(ris.rows()) + "x" +
                                    std::to_string(ris.cols()) + ")");
    return direct + ris;
}

double sample_nakagami(const FadingModel &model, RandomEngine &rng)
{
    std::gamma_distribution<double> gamma(model.shape_m, 1.0 / model.shape_m);
    return std::sqrt(gamma(rng));
}

ComplexMatrix apply_fading(const ComplexMatrix &channel, const FadingModel &model, FadingMode mode,
                           RandomEngine &rng)
{
    validate(model);
    if (mode == FadingMode::per_link)
        return channel * sample_nakagami(model, rng);

    std::gamma_distribution<double> gamma(model.shape_m, 1.0 / model.shape_m);
    ComplexMatrix out(channel.rows(), channel.cols());
    for (Eigen::Index i = 0; i < channel.cols(); ++i)
        for (Eigen::Index j = 0; j < channel.rows(); ++j)
            out(j, i) = channel(j, i) * std::sqrt(gamma(rng));
    return out;
}

std::vector<double> ula_positions(int count, double spacing_m)
{
    if (count < 0)
        throw std::invalid_argument("ula_positions: negative element count");
    std::vector<double> pos(static_cast<std::size_t>(count));
    const double centre = 0.5 * (count - 1);
    for (int k = 0; k < count; ++k)
        pos[static_cast<std::size_t>(k)] = (k - centre) * spacing_m;
    return pos;
}

RealMatrix broadside_distances(double separation_m, std::span<const double> a, std::span<const double> b)
{
    if (!(separation_m > 0.0))
        domain_fail("broadside_distances: separation must be > 0");
    RealMatrix d(static_cast<Eigen::Index>(a.size()), static_cast<Eigen::Index>(b.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            d(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = std::hypot(separation_m, a[i] - b[j]);
    return d;
}

} // namespace teraris

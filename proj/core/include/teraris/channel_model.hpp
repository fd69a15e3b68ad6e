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
#include "teraris/rng.hpp"

#include <span>
#include <vector>

namespace teraris
{

struct ThzLinkParams
{
    double frequency_hz = 0.3e12;
    double absorption_coeff = 0.0; // κ(f), 1/m
    double distance_m = 1.0;
    double path_loss_exponent = 2.0; // 2 = free space; Δ1 = c/(4πf) · d^(-η/2)
};

/// Receiver aperture radius a, beam width ώ and pointing error l_e, all in metres.
struct MisalignmentParams
{
    double aperture_radius_m = 0.1;
    double beamwidth_m = 0.2;
    double pointing_error_m = 0.05;
    bool operator==(const MisalignmentParams &) const = default;
};

/// LoS ray plus Q-1 single-bounce NLoS rays with gains β_q and relative delays τ_q.
struct MultiRayParams
{
    int ray_count = 1;
    std::vector<double> nlos_gains;
    std::vector<double> nlos_delays_s;
};

/// R passive elements. `bs_to_element_m` is N x R, `element_to_user_m` is R x M.
struct RisParams
{
    std::vector<double> reflection_coeffs;
    std::vector<double> phase_shifts;
    RealMatrix bs_to_element_m;
    RealMatrix element_to_user_m;

    std::size_t element_count() const noexcept { return reflection_coeffs.size(); }
};

/// Nakagami-m envelope with unit mean-square (Ω = 1).
struct FadingModel
{
    double shape_m = 1.0;
};

enum class FadingMode
{
    per_link, // one envelope per user link and realization, common to all entries
    per_entry // independent envelope for every antenna pair
};

void validate(const ThzLinkParams &link);
void validate(const MisalignmentParams &mis);
void validate(const MultiRayParams &rays);
void validate(const RisParams &ris);
void validate(const FadingModel &model);

/// Δ3 = erf(u)^2 · exp(-2 l_e^2 / w_e^2), the pointing-error gain in (0, 1].
double misalignment_gain(const MisalignmentParams &mis);

/// LoS amplitude Δ1·Δ2·Δ3 as a zero-phase complex value.
Complex los_attenuation(const ThzLinkParams &link, const MisalignmentParams &mis);

/// LoS amplitude Δ1·Δ2 without the misalignment term.
Complex los_attenuation(const ThzLinkParams &link);

/// Applies the multi-ray factor 1 + sqrt(1/(Q-1)) Σ β_q exp(-j2πfτ_q) to a LoS amplitude.
Complex multiray_response(Complex los, const MultiRayParams &rays, double frequency_hz);

/// Cascaded BS -> element -> user gain of one RIS element. Molecular absorption acts
/// over the reflected path r_ir + r_rj.
Complex ris_element_gain(double reflection_coeff, double phase_shift, double bs_to_element_m,
                         double element_to_user_m, double frequency_hz, double absorption_coeff);

/// M x N matrix with entry (j, i) = Σ_r ris_element_gain(r, i, j). Zero matrix when R = 0.
ComplexMatrix ris_channel_matrix(const RisParams &ris, double frequency_hz, double absorption_coeff);

/// Entrywise H_D + G_RIS. Throws std::invalid_argument on a dimension mismatch.
ComplexMatrix combine_channels(const ComplexMatrix &direct, const ComplexMatrix &ris);

/// Square root of a Gamma(m, 1/m) draw.
double sample_nakagami(const FadingModel &model, RandomEngine &rng);

/// Multiplies entry magnitudes by Nakagami envelopes; phases are kept.
ComplexMatrix apply_fading(const ComplexMatrix &channel, const FadingModel &model, FadingMode mode,
                           RandomEngine &rng);

// Array helpers

/// Positions of a centred uniform linear array along its axis.
std::vector<double> ula_positions(int count, double spacing_m);

/// Distances between two parallel broadside arrays separated by `separation_m`.
/// Result is a.size() x b.size().
RealMatrix broadside_distances(double separation_m, std::span<const double> a, std::span<const double> b);

} // namespace teraris

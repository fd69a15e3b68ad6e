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
#include "teraris/rng.hpp"

#include <cstdint>
#include <vector>

namespace teraris
{

/// Covariance R̃ of vec(H), so that vec(H) = R̃^{1/2} h̄ with h̄ ~ CN(0, I).
/// Hermitian within 1e-12 (relative to its largest entry) and positive semi-definite.
class WhitenedCovariance
{
public:
    explicit WhitenedCovariance(ComplexMatrix r);

    /// c · I of the given dimension (i.i.d. entries of power c).
    static WhitenedCovariance scaled_identity(Eigen::Index dimension, double c);

    const ComplexMatrix &matrix() const noexcept { return r_; }
    Eigen::Index dimension() const noexcept { return r_.rows(); }

private:
    ComplexMatrix r_;
};

/// X X^H / dim with X a dim x dim matrix of CN(0, 1) entries; full rank, distinct
/// eigenvalues with probability one.
WhitenedCovariance random_covariance(Eigen::Index dimension, RandomEngine &rng);

/// Real eigenvalues sorted in descending order. Values in [-1e-12·scale, 0) are clamped to 0.
struct EigenSpectrum
{
    std::vector<double> values;
};

EigenSpectrum eigen_spectrum(const ComplexMatrix &hermitian);

/// A' = p α_m R̃^H (signal) and B' = p Σ_{l>m} α_l R̃^H (residual interference).
struct EffectiveMatrices
{
    ComplexMatrix signal;
    ComplexMatrix interference;
};

EffectiveMatrices build_effective_matrices(const PowerAllocation &pa, const LinkBudget &lb,
                                           const WhitenedCovariance &cov, std::size_t m);

/// E[ln(1 + Σ_i λ_i |z_i|^2)] for z ~ CN(0, I): the partial-fraction sum
/// Σ_i λ_i^{n-1} e^{1/λ_i} E_1(1/λ_i) / Π_{j≠i}(λ_i - λ_j) over positive λ_i.
/// Eigenvalues closer than 1e-6 (relative) are merged and handled with their
/// multiplicity through the Erlang-mixture form of the same expansion.
double expected_log1p(const EigenSpectrum &spectrum);

/// Ergodic capacity (bits/s/Hz) E[log2(1 + A'‖h̄‖^2 / (B'‖h̄‖^2 + σ^2))] in closed form,
/// using eigenvalues of (A' + B')/σ^2 and B'/σ^2.
double closed_form_capacity(const ComplexMatrix &signal, const ComplexMatrix &interference,
                            const LinkBudget &lb);

struct McEstimate
{
    double mean = 0.0;
    double std_error = 0.0;
};

/// Monte Carlo estimate of the same expectation from h = L D^{1/2} h̄ (pivoted LDLT
/// factor of R̃). Independent of the eigen-decomposition route; used as the oracle.
McEstimate ergodic_capacity_mc_oracle(const PowerAllocation &pa, const LinkBudget &lb,
                                      const WhitenedCovariance &cov, std::size_t m, std::int64_t trials,
                                      std::uint64_t seed);

} // namespace teraris

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

#include "teraris/ergodic.hpp"

#include "teraris/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace teraris
{

namespace
{

constexpr double cluster_tolerance = 1e-6; // relative to the largest eigenvalue
constexpr double zero_threshold = 1e-13;   // relative to the largest eigenvalue

struct Cluster
{
    double value;
    int multiplicity;
};

std::vector<Cluster> cluster_positive(const std::vector<double> &descending)
{
    std::vector<Cluster> out;
    if (descending.empty() || !(descending.front() > 0.0))
        return out;
    const double top = descending.front();
    double sum = 0.0;
    double lead = 0.0;
    int count = 0;
    for (double v : descending)
    {
        if (v <= zero_threshold * top)
            break;
        if (count > 0 && lead - v > cluster_tolerance * top)
        {
            out.push_back({sum / count, count});
            count = 0;
            sum = 0.0;
        }
        if (count == 0)
            lead = v;
        sum += v;
        ++count;
    }
    if (count > 0)
        out.push_back({sum / count, count});
    return out;
}

// E[ln(1 + λ X)] for X ~ Gamma(k, 1).
double erlang_log_mean(int k, double lambda)
{
    const double x = 1.0 / lambda;
    double s = 0.0;
    for (int j = 1; j <= k; ++j)
        s += scaled_exp_integral_en(j, x);
    return s;
}

} // namespace

WhitenedCovariance::WhitenedCovariance(ComplexMatrix r) : r_(std::move(r))
{
    if (r_.rows() == 0 || r_.rows() != r_.cols())
        throw std::invalid_argument("WhitenedCovariance: matrix must be square and non-empty");
    if (!r_.allFinite())
        throw std::invalid_argument("WhitenedCovariance: non-finite entry");
    const double scale = std::max(r_.cwiseAbs().maxCoeff(), 1e-300);
    if ((r_ - r_.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale)
        throw std::invalid_argument("WhitenedCovariance: matrix is not Hermitian");
    // Symmetrize away rounding before the eigen check.
    r_ = (0.5 * (r_ + r_.adjoint())).eval();
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(r_, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-12 * scale)
        throw std::invalid_argument("WhitenedCovariance: matrix is not positive semi-definite");
}

WhitenedCovariance WhitenedCovariance::scaled_identity(Eigen::Index dimension, double c)
{
    if (!(c >= 0.0))
        throw std::invalid_argument("WhitenedCovariance: scale must be >= 0");
    return WhitenedCovariance(ComplexMatrix::Identity(dimension, dimension) * c);
}

WhitenedCovariance random_covariance(Eigen::Index dimension, RandomEngine &rng)
{
    if (dimension < 1)
        throw std::invalid_argument("random_covariance: dimension must be >= 1");
    std::normal_distribution<double> gauss(0.0, std::sqrt(0.5));
    ComplexMatrix x(dimension, dimension);
    for (Eigen::Index j = 0; j < dimension; ++j)
        for (Eigen::Index i = 0; i < dimension; ++i)
            x(i, j) = Complex(gauss(rng), gauss(rng));
    const ComplexMatrix r = x * x.adjoint() / static_cast<double>(dimension);
    return WhitenedCovariance(0.5 * (r + r.adjoint()));
}

EigenSpectrum eigen_spectrum(const ComplexMatrix &hermitian)
{
    if (hermitian.rows() != hermitian.cols())
        throw std::invalid_argument("eigen_spectrum: matrix must be square");
    EigenSpectrum s;
    if (hermitian.rows() == 0)
        return s;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(hermitian, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("eigen_spectrum: decomposition failed");
    const Eigen::VectorXd &ev = es.eigenvalues();
    const double scale = std::max(ev.cwiseAbs().maxCoeff(), 1e-300);
    s.values.assign(ev.data(), ev.data() + ev.size());
    for (double &v : s.values)
    {
        if (v < 0.0 && v >= -1e-12 * scale)
            v = 0.0;
        if (!std::isfinite(v))
            throw std::runtime_error("eigen_spectrum: non-finite eigenvalue");
    }
    std::sort(s.values.begin(), s.values.end(), std::greater<>());
    return s;
}

EffectiveMatrices build_effective_matrices(const PowerAllocation &pa, const LinkBudget &lb,
                                           const WhitenedCovariance &cov, std::size_t m)
{
    validate(lb);
    const ComplexMatrix rh = cov.matrix().adjoint();
    return {lb.tx_power_w * pa[m] * rh, lb.tx_power_w * pa.interference_share(m) * rh};
}

double expected_log1p(const EigenSpectrum &spectrum)
{
    const std::vector<Cluster> clusters = cluster_positive(spectrum.values);
    const std::size_t nc = clusters.size();
    double total = 0.0;
    for (std::size_t c = 0; c < nc; ++c)
    {
        const int mc = clusters[c].multiplicity;
        // Power series of F_c(y) = Π_{d≠c} (1 - ρ_d)^{-m_d} (1 + t_d y)^{-m_d} up to y^{m_c - 1};
        // its coefficients are the partial-fraction weights of the Gamma(k, λ_c) terms.
        std::vector<double> f(static_cast<std::size_t>(mc), 0.0);
        f[0] = 1.0;
        for (std::size_t d = 0; d < nc; ++d)
        {
            if (d == c)
                continue;
            const double rho = clusters[d].value / clusters[c].value;
            const double t = rho / (1.0 - rho);
            const int md = clusters[d].multiplicity;
            const double lead = std::pow(1.0 - rho, -md);
            // Binomial series of (1 + t y)^{-m_d}.
            std::vector<double> b(f.size());
            b[0] = 1.0;
            for (std::size_t j = 1; j < b.size(); ++j)
                b[j] = b[j - 1] * (-t) * (md + static_cast<double>(j) - 1.0) / static_cast<double>(j);
            std::vector<double> prod(f.size(), 0.0);
            for (std::size_t i = 0; i < f.size(); ++i)
                for (std::size_t j = 0; i + j < f.size(); ++j)
                    prod[i + j] += f[i] * b[j];
            for (double &v : prod)
                v *= lead;
            f.swap(prod);
        }
        for (int k = 1; k <= mc; ++k)
            total += f[static_cast<std::size_t>(mc - k)] * erlang_log_mean(k, clusters[c].value);
    }
    return total;
}

double closed_form_capacity(const ComplexMatrix &signal, const ComplexMatrix &interference, const LinkBudget &lb)
{
    validate(lb);
    if (signal.rows() != interference.rows() || signal.cols() != interference.cols())
        throw std::invalid_argument("closed_form_capacity: A' and B' differ in dimension");
    const double s2 = lb.noise_power_w;
    const double with_signal = expected_log1p(eigen_spectrum((signal + interference) / s2));
    const double without = expected_log1p(eigen_spectrum(interference / s2));
    return std::max(0.0, (with_signal - without) / std::log(2.0));
}

McEstimate ergodic_capacity_mc_oracle(const PowerAllocation &pa, const LinkBudget &lb,
                                      const WhitenedCovariance &cov, std::size_t m, std::int64_t trials,
                                      std::uint64_t seed)
{
    if (trials < 1)
        throw std::invalid_argument("ergodic_capacity_mc_oracle: trials must be >= 1");
    validate(lb);
    const Eigen::Index n = cov.dimension();

    // R̃ = P^T L D L^H P; h = P^T L D^{1/2} h̄ has covariance R̃.
    Eigen::LDLT<ComplexMatrix> ldlt(cov.matrix());
    if (ldlt.info() != Eigen::Success)
        throw std::runtime_error("ergodic_capacity_mc_oracle: LDLT failed");
    const Eigen::VectorXd dsqrt = ldlt.vectorD().real().cwiseMax(0.0).cwiseSqrt();
    ComplexMatrix factor = ComplexMatrix(ldlt.matrixL()) * dsqrt.asDiagonal();
    factor = ldlt.transpositionsP().transpose() * factor;
    const Eigen::VectorXcd diag = factor.diagonal();
    const bool diagonal = (factor - ComplexMatrix(diag.asDiagonal())).cwiseAbs().maxCoeff() == 0.0;

    const double p = lb.tx_power_w;
    const double a = p * pa[m];
    const double b = p * pa.interference_share(m);
    const double s2 = lb.noise_power_w;

    RandomEngine rng = stream_engine(seed, 0);
    std::normal_distribution<double> gauss(0.0, std::sqrt(0.5));
    Eigen::VectorXcd hbar(n);
    double mean = 0.0;
    double m2 = 0.0;
    for (std::int64_t t = 0; t < trials; ++t)
    {
        for (Eigen::Index i = 0; i < n; ++i)
            hbar(i) = Complex(gauss(rng), gauss(rng));
        const double g = diagonal ? diag.cwiseProduct(hbar).squaredNorm() : (factor * hbar).squaredNorm();
        const double c = std::log2(1.0 + a * g / (b * g + s2));
        // Welford update.
        const double delta = c - mean;
        mean += delta / static_cast<double>(t + 1);
        m2 += delta * (c - mean);
    }
    const double var = trials > 1 ? m2 / static_cast<double>(trials - 1) : 0.0;
    return {mean, std::sqrt(var / static_cast<double>(trials))};
}

} // namespace teraris

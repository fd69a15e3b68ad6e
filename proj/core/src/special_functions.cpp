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

#include "teraris/special_functions.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace teraris
{

namespace
{

constexpr double euler_gamma = 0.57721566490153286061;
constexpr double eps = std::numeric_limits<double>::epsilon();
constexpr double tiny = 1e-300;
constexpr int max_iterations = 10000;

void check_args(int n, double x)
{
    if (n < 1)
        throw std::domain_error("exp_integral_en: order n must be >= 1, got " + std::to_string(n));
    if (!(x > 0.0) || std::isinf(x))
        throw std::domain_error("exp_integral_en: argument must be positive and finite");
}

// e^x E_n(x) by the continued fraction (modified Lentz), valid for x > 1.
double scaled_continued_fraction(int n, double x)
{
    const double nm1 = n - 1;
    double b = x + n;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= max_iterations; ++i)
    {
        const double a = -i * (nm1 + i);
        b += 2.0;
        d = 1.0 / (a * d + b);
        c = b + a / c;
        const double del = c * d;
        h *= del;
        if (std::abs(del - 1.0) < eps)
            return h;
    }
    throw std::runtime_error("exp_integral_en: continued fraction did not converge");
}

// Power series for E_n(x), 0 < x <= 1.
double series(int n, double x)
{
    const int nm1 = n - 1;
    double ans = nm1 != 0 ? 1.0 / nm1 : -std::log(x) - euler_gamma;
    double fact = 1.0;
    for (int i = 1; i <= max_iterations; ++i)
    {
        fact *= -x / i;
        double del;
        if (i != nm1)
            del = -fact / (i - nm1);
        else
        {
            double psi = -euler_gamma;
            for (int ii = 1; ii <= nm1; ++ii)
                psi += 1.0 / ii;
            del = fact * (-std::log(x) + psi);
        }
        ans += del;
        if (std::abs(del) < std::abs(ans) * eps)
            return ans;
    }
    throw std::runtime_error("exp_integral_en: series did not converge");
}

} // namespace

double exp_integral_en(int n, double x)
{
    check_args(n, x);
    if (x > 1.0)
        return scaled_continued_fraction(n, x) * std::exp(-x);
    return series(n, x);
}

double scaled_exp_integral_en(int n, double x)
{
    check_args(n, x);
    if (x > 1.0)
        return scaled_continued_fraction(n, x);
    return series(n, x) * std::exp(x);
}

double exp_integral_e1(double x)
{
    if (!(x > 0.0))
        throw std::domain_error("exp_integral_e1: argument must be positive");
    return exp_integral_en(1, x);
}

} // namespace teraris

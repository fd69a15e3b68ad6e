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

// Reference implementations for tests. Built only on Boost.Math so they share no
// code path with the library under test.

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <cmath>

namespace teraris::oracle
{

/// E_1(x) by double-exponential quadrature. Below 1 the integral is taken in
/// log t, where the integrand exp(-e^u) is smooth.
inline double quad_e1(double x)
{
    using boost::math::quadrature::exp_sinh;
    using boost::math::quadrature::tanh_sinh;
    if (x >= 1.0)
    {
        exp_sinh<double> es;
        const double tail = es.integrate([x](double s) { return std::exp(-s) / (x + s); }, 0.0,
                                         std::numeric_limits<double>::infinity(), 1e-15);
        return std::exp(-x) * tail;
    }
    exp_sinh<double> es;
    const double from_one = std::exp(-1.0) * es.integrate([](double s) { return std::exp(-s) / (1.0 + s); }, 0.0,
                                                          std::numeric_limits<double>::infinity(), 1e-15);
    tanh_sinh<double> ts;
    const double head = ts.integrate([](double u) { return std::exp(-std::exp(u)); }, std::log(x), 0.0, 1e-15);
    return head + from_one;
}

/// CDF of a unit-power Nakagami-m envelope: P(m, m x^2).
inline double nakagami_cdf(double x, double m)
{
    if (x <= 0.0)
        return 0.0;
    return boost::math::gamma_p(m, m * x * x);
}

} // namespace teraris::oracle

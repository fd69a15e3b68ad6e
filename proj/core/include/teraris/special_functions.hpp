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

namespace teraris
{

/// Exponential integral E_1(x) = ∫_x^∞ e^{-t}/t dt for x > 0.
/// Power series for x <= 1, modified Lentz continued fraction above.
/// Relative error is below 1e-13 on (0, 700]. Throws std::domain_error for x <= 0.
double exp_integral_e1(double x);

/// Generalised exponential integral E_n(x) = ∫_1^∞ e^{-xt}/t^n dt, n >= 1, x > 0.
double exp_integral_en(int n, double x);

/// e^x · E_n(x). Stays finite for large x where E_n underflows.
double scaled_exp_integral_en(int n, double x);

} // namespace teraris

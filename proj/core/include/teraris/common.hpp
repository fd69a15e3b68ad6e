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

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

namespace teraris
{

using Complex = std::complex<double>;

// Dense complex matrix carrying H_D, G_RIS and H. Rows index receive antennas,
// columns index transmit antennas.
using ComplexMatrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;

inline constexpr double speed_of_light = 299792458.0; // m/s
inline constexpr double pi = 3.14159265358979323846;

// Rates within this distance of a target are treated as meeting it.
inline constexpr double rate_tolerance = 1e-9; // bits/s/Hz

/// Thrown when a scenario or configuration value violates its constraint.
/// `field()` is the dotted config key (e.g. "channel.frequency_hz").
class ConfigError : public std::runtime_error
{
public:
    ConfigError(std::string field, const std::string &constraint, const std::string &value)
        : std::runtime_error(field + ": " + constraint + " (got " + value + ")"),
          field_(std::move(field))
    {
    }

    const std::string &field() const noexcept { return field_; }

private:
    std::string field_;
};

double dbm_to_watt(double dbm);
double watt_to_dbm(double watt);

} // namespace teraris

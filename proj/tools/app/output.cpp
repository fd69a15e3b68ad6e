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

#include "app.hpp"

#include "teraris/config.hpp"

#include <fstream>
#include <random>
#include <stdexcept>
#include <system_error>

namespace teraris::app
{

std::string outage_csv(const SweepResult &result)
{
    std::string csv = "target_rate,scheme,user,outage,stderr\n";
    for (std::size_t p = 0; p < result.grid.size(); ++p)
        for (const auto &series : result.series)
        {
            const SeriesPoint &pt = series.points[p];
            const std::string prefix = format_number(result.grid[p]) + "," + to_string(series.scheme) + ",";
            csv += prefix + "near," + format_number(pt.near_outage.mean) + "," + format_number(pt.near_outage.std_error) +
                   "\n";
            csv += prefix + "far," + format_number(pt.far_outage.mean) + "," + format_number(pt.far_outage.std_error) +
                   "\n";
        }
    return csv;
}

std::string sumrate_csv(const SweepResult &result)
{
    std::string csv = "tx_power_dbm,scheme,sum_rate,stderr\n";
    for (std::size_t p = 0; p < result.grid.size(); ++p)
        for (const auto &series : result.series)
        {
            const Estimate &e = series.points[p].sum_rate;
            csv += format_number(result.grid[p]) + "," + to_string(series.scheme) + "," + format_number(e.mean) + "," +
                   format_number(e.std_error) + "\n";
        }
    return csv;
}

void write_atomic(const std::filesystem::path &path, const std::string &content)
{
    const std::filesystem::path dir = path.has_parent_path() ? path.parent_path() : std::filesystem::path(".");
    std::filesystem::create_directories(dir);
    std::random_device rd;
    const std::filesystem::path tmp = dir / ("." + path.filename().string() + "." + std::to_string(rd()) + ".tmp");
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw std::runtime_error("cannot write " + tmp.string());
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out)
            throw std::runtime_error("write failed: " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec)
    {
        std::filesystem::remove(tmp);
        throw std::runtime_error("cannot rename onto " + path.string() + ": " + ec.message());
    }
}

} // namespace teraris::app

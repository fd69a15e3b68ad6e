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

#include "teraris/scenario.hpp"

#include <filesystem>
#include <string>

namespace teraris
{

/// Parses the INI-style scenario format (see docs/config_format.md). Absent keys keep
/// their defaults; unknown sections or keys and invalid values throw ConfigError.
/// The result is validated.
ScenarioConfig parse_config(const std::string &text);
ScenarioConfig load_config(const std::filesystem::path &path);

/// Serializes every field, so that parse_config(format_config(c)) == c.
std::string format_config(const ScenarioConfig &cfg);

/// Shortest round-trip decimal form, independent of the C++ locale.
std::string format_number(double value);

} // namespace teraris

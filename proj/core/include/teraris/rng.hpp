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

#include <cstdint>
#include <random>

namespace teraris
{

using RandomEngine = std::mt19937_64;

std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Independent engine for stream `stream` of a master seed. Trial t of a sweep always
/// uses stream t, so results do not depend on how trials are spread over workers.
RandomEngine stream_engine(std::uint64_t master_seed, std::uint64_t stream) noexcept;

} // namespace teraris

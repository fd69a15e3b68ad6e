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

#include "teraris/channel_model.hpp"
#include "teraris/scenario.hpp"

namespace teraris
{

/// M x N distances from BS antenna i (column) to user antenna j (row).
RealMatrix direct_distances(const ScenarioConfig &cfg, User user);

/// Deterministic direct channel H_D for `user`; fading is applied separately.
ComplexMatrix direct_channel_matrix(const ScenarioConfig &cfg, User user);

/// Element distances and phase shifts of the configured RIS as seen by `user`.
RisParams ris_params(const ScenarioConfig &cfg, User user);

ComplexMatrix ris_channel_matrix(const ScenarioConfig &cfg, User user);

/// H_D + G_RIS before fading.
ComplexMatrix user_channel(const ScenarioConfig &cfg, User user);

/// Phase shifts for the configured profile (length R).
std::vector<double> ris_phase_shifts(const ScenarioConfig &cfg);

} // namespace teraris

// Copyright 2026 The geocover Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "geocover/config_system.hpp"

namespace geocover {

std::int64_t conflict_weight(const ConfigurationSystem& sys, const Configuration& cfg,
                             const FamilySubset& view) {
  std::int64_t w = 0;
  for (int i : view.indices) {
    if (sys.conflicts(cfg, i)) w += view.family->weight(i);
  }
  return w;
}

std::vector<std::int64_t> conflict_weights_serial(
    const ConfigurationSystem& sys, const std::vector<Configuration>& cfgs,
    const FamilySubset& view) {
  std::vector<std::int64_t> out(cfgs.size(), 0);
  for (std::size_t c = 0; c < cfgs.size(); ++c) {
    out[c] = conflict_weight(sys, cfgs[c], view);
  }
  return out;
}

std::vector<std::int64_t> conflict_weights(const ConfigurationSystem& sys,
                                           const std::vector<Configuration>& cfgs,
                                           const FamilySubset& view) {
  std::vector<std::int64_t> out(cfgs.size(), 0);
  const std::int64_t n = static_cast<std::int64_t>(cfgs.size());
#pragma omp parallel for schedule(dynamic, 2)
  for (std::int64_t c = 0; c < n; ++c) {
    out[c] = conflict_weight(sys, cfgs[c], view);
  }
  return out;
}

}  // namespace geocover

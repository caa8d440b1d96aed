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

#ifndef GEOCOVER_CONFIG_SYSTEM_HPP_
#define GEOCOVER_CONFIG_SYSTEM_HPP_

#include <any>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "geocover/family.hpp"
#include "geocover/rational.hpp"

namespace geocover {

/// A canonical region together with the objects that define it.
struct Configuration {
  IndexSet defining;  // sorted, size bounded by the system's defining_bound()
  std::any region;    // geometry-specific payload owned by the producing system
};

/// An object/region system: a family of geometric objects together with a
/// canonical decomposition of the space not covered by any chosen subset.
///
/// Contract, for every host set H (a sorted subset of object indices):
///   * zero_regions(H) is deterministic, every configuration has its defining
///     set inside H, and no object of H conflicts with it;
///   * every point not covered by the union of H lies in the region of some
///     returned configuration (completeness), and locate() finds one;
///   * an object that contains a point of a configuration's region conflicts
///     with that configuration.
class ConfigurationSystem {
 public:
  virtual ~ConfigurationSystem() = default;

  /// Maximum size of a defining set.
  virtual int defining_bound() const = 0;

  virtual std::vector<Configuration> zero_regions(const IndexSet& hosts) const = 0;

  /// Whether the object meets the configuration's region or displaces one of
  /// its defining objects under the system's tie-breaking.
  virtual bool conflicts(const Configuration& cfg, int object) const = 0;

  /// Configuration of zero_regions(hosts) whose region contains the point,
  /// for a point not covered by the union of hosts; nullopt if covered.
  /// Coordinate count matches the system's ambient dimension.
  virtual std::optional<Configuration> locate(std::span<const Rational> point,
                                              const IndexSet& hosts) const = 0;
};

/// Total weight of the subset objects conflicting with cfg. Zero means cfg is
/// a 0-region with respect to the whole subset.
std::int64_t conflict_weight(const ConfigurationSystem& sys, const Configuration& cfg,
                             const FamilySubset& view);

/// Conflict weights for a batch of configurations. The parallel variant
/// splits the batch across threads; entries are independent, so the result
/// is identical to the serial reference.
std::vector<std::int64_t> conflict_weights(const ConfigurationSystem& sys,
                                           const std::vector<Configuration>& cfgs,
                                           const FamilySubset& view);
std::vector<std::int64_t> conflict_weights_serial(
    const ConfigurationSystem& sys, const std::vector<Configuration>& cfgs,
    const FamilySubset& view);

}  // namespace geocover

#endif  // GEOCOVER_CONFIG_SYSTEM_HPP_

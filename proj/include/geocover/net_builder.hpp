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

#ifndef GEOCOVER_NET_BUILDER_HPP_
#define GEOCOVER_NET_BUILDER_HPP_

#include <optional>
#include <stdexcept>
#include <string>

#include "geocover/config_system.hpp"

namespace geocover {

struct NetParams {
  /// Multiplier in the sample-size formula ceil(K * r * ln(max(r, 2))).
  /// Only affects sizes and retry counts, never correctness: candidate nets
  /// are verified and resampled until the check passes.
  double sample_constant = 4.0;
  int max_attempts = 64;
};

struct VerifyResult {
  bool ok = false;
  std::int64_t worst_weight = 0;
  std::optional<Configuration> witness;  // a maximally violating configuration
};

struct NetResult {
  IndexSet net;
  int attempts = 1;  // verification rounds used by the last stage
};

/// Raised when the resample budget runs out; carries the last failure.
class NetFailure : public std::runtime_error {
 public:
  NetFailure(int attempts, std::int64_t worst_weight, std::string what)
      : std::runtime_error(std::move(what)),
        attempts(attempts),
        worst_weight(worst_weight) {}
  int attempts;
  std::int64_t worst_weight;
};

/// Checks the net condition for R at parameter r: every configuration of
/// zero_regions(R) must have conflict weight at most W/r over the subset
/// (W = subset total weight). On success, completeness of the system makes R
/// a 1/r-net: every point whose weighted depth exceeds W/r is covered by R.
VerifyResult verify_net(const ConfigurationSystem& sys, const FamilySubset& view,
                        const IndexSet& net, const Rational& r);

/// Samples ceil(K * r * ln(max(r, 2))) multiset slots and retries until
/// verify_net passes. Requires 1 <= r <= subset weight.
NetResult likely_net(const ConfigurationSystem& sys, const FamilySubset& view,
                     const Rational& r, SplitRng& rng, const NetParams& params = {});

/// Two-level construction: a random size-round(r) sample, then one repair net
/// per surviving region whose conflict weight exceeds W/r. Verified before
/// returning. Requires 2 * defining_bound <= r <= subset weight.
NetResult two_level_net(const ConfigurationSystem& sys, const FamilySubset& view,
                        const Rational& r, SplitRng& rng,
                        const NetParams& params = {});

/// Net with r clamped into the construction's valid range. Parameters below
/// the floor are raised (a finer net is still a 1/r-net); parameters above
/// the subset weight degrade to the whole subset.
IndexSet net_clamped_subset(const ConfigurationSystem& sys, const FamilySubset& view,
                            Rational r, SplitRng& rng, bool two_level,
                            const NetParams& params = {});
IndexSet net_clamped(const ConfigurationSystem& sys, const WeightedFamily& family,
                     Rational r, SplitRng& rng, bool two_level,
                     const NetParams& params = {});

}  // namespace geocover

#endif  // GEOCOVER_NET_BUILDER_HPP_

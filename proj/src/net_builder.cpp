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

#include "geocover/net_builder.hpp"

#include <algorithm>
#include <cmath>

namespace geocover {
namespace {

std::int64_t sample_size(double k_const, const Rational& r) {
  double rd = r.to_double();
  double s = k_const * rd * std::log(std::max(rd, 2.0));
  return std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(s)));
}

}  // namespace

VerifyResult verify_net(const ConfigurationSystem& sys, const FamilySubset& view,
                        const IndexSet& net, const Rational& r) {
  const Rational threshold = Rational(static_cast<long>(view.total_weight())) / r;
  auto cfgs = sys.zero_regions(net);
  auto weights = conflict_weights(sys, cfgs, view);

  VerifyResult res;
  res.ok = true;
  int worst = -1;
  for (std::size_t i = 0; i < cfgs.size(); ++i) {
    if (worst < 0 || weights[i] > res.worst_weight) {
      res.worst_weight = weights[i];
      worst = static_cast<int>(i);
    }
    if (Rational(static_cast<long>(weights[i])) > threshold) res.ok = false;
  }
  if (!res.ok && worst >= 0) res.witness = cfgs[worst];
  return res;
}

NetResult likely_net(const ConfigurationSystem& sys, const FamilySubset& view,
                     const Rational& r, SplitRng& rng, const NetParams& params) {
  const std::int64_t total = view.total_weight();
  if (r < Rational(1) || Rational(static_cast<long>(total)) < r) {
    throw std::invalid_argument("likely_net: r out of range");
  }
  std::int64_t k = std::min(sample_size(params.sample_constant, r), total);

  std::int64_t last_worst = 0;
  for (int attempt = 1; attempt <= params.max_attempts; ++attempt) {
    IndexSet candidate = weighted_sample(view, k, rng);
    VerifyResult v = verify_net(sys, view, candidate, r);
    if (v.ok) return {std::move(candidate), attempt};
    last_worst = v.worst_weight;
  }
  throw NetFailure(params.max_attempts, last_worst,
                   "likely_net: verification failed for every sample; "
                   "sample constant too small for this instance");
}

NetResult two_level_net(const ConfigurationSystem& sys, const FamilySubset& view,
                        const Rational& r, SplitRng& rng, const NetParams& params) {
  const std::int64_t total = view.total_weight();
  const Rational w_total(static_cast<long>(total));
  if (r < Rational(2 * sys.defining_bound()) || w_total < r) {
    throw std::invalid_argument("two_level_net: r out of range");
  }

  std::int64_t last_worst = 0;
  for (int attempt = 1; attempt <= params.max_attempts; ++attempt) {
    std::int64_t k = std::min<std::int64_t>(
        std::max<std::int64_t>(1, mpz_get_si(r.round_half_up().get_mpz_t())), total);
    IndexSet net = weighted_sample(view, k, rng);

    // Repair every first-level region whose conflict set is heavy. Any repair
    // object conflicts with its region, so repaired regions cannot survive as
    // 0-regions of the final net.
    auto cfgs = sys.zero_regions(net);
    for (const Configuration& cfg : cfgs) {
      IndexSet conflict_set;
      std::int64_t w_y = 0;
      for (int i : view.indices) {
        if (sys.conflicts(cfg, i)) {
          conflict_set.push_back(i);
          w_y += view.family->weight(i);
        }
      }
      Rational j = Rational(static_cast<long>(w_y)) * r / w_total;
      if (j > Rational(1)) {
        FamilySubset sub = FamilySubset::of(*view.family, std::move(conflict_set));
        NetResult repair = likely_net(sys, sub, j, rng, params);
        net = index_set_union(net, repair.net);
      }
    }

    VerifyResult v = verify_net(sys, view, net, r);
    if (v.ok) return {std::move(net), attempt};
    last_worst = v.worst_weight;
  }
  throw NetFailure(params.max_attempts, last_worst,
                   "two_level_net: verification failed after repair");
}

IndexSet net_clamped_subset(const ConfigurationSystem& sys, const FamilySubset& view,
                            Rational r, SplitRng& rng, bool two_level,
                            const NetParams& params) {
  const Rational w_total(static_cast<long>(view.total_weight()));
  const Rational floor_r(two_level ? 2 * sys.defining_bound() : 1);
  if (w_total < floor_r || w_total < r) return view.indices;
  if (r < floor_r) r = floor_r;
  NetResult res = two_level ? two_level_net(sys, view, r, rng, params)
                            : likely_net(sys, view, r, rng, params);
  return std::move(res.net);
}

IndexSet net_clamped(const ConfigurationSystem& sys, const WeightedFamily& family,
                     Rational r, SplitRng& rng, bool two_level,
                     const NetParams& params) {
  return net_clamped_subset(sys, FamilySubset::all(family), std::move(r), rng,
                            two_level, params);
}

}  // namespace geocover

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

#ifndef GEOCOVER_FAMILY_HPP_
#define GEOCOVER_FAMILY_HPP_

#include <cstdint>
#include <vector>

#include "geocover/rng.hpp"

namespace geocover {

/// Sorted set of object indices.
using IndexSet = std::vector<int>;

bool index_set_contains(const IndexSet& s, int i);
IndexSet index_set_union(const IndexSet& a, const IndexSet& b);

/// Positive integer weights over an indexed object family. A weight w acts as
/// w interchangeable copies of the object; the copies only matter for
/// sampling, every other operation collapses them onto the one index.
class WeightedFamily {
 public:
  explicit WeightedFamily(int n) : weights_(n, 1), total_(n) {}

  int size() const { return static_cast<int>(weights_.size()); }
  std::int64_t weight(int i) const { return weights_[i]; }
  std::int64_t total_weight() const { return total_; }

  void set_weight(int i, std::int64_t w);
  void double_weight(int i);
  void reset_weights();

 private:
  std::vector<std::int64_t> weights_;
  std::int64_t total_;
};

/// A family restricted to a subset of its indices.
struct FamilySubset {
  const WeightedFamily* family = nullptr;
  IndexSet indices;  // sorted

  static FamilySubset all(const WeightedFamily& f);
  static FamilySubset of(const WeightedFamily& f, IndexSet indices);

  int count() const { return static_cast<int>(indices.size()); }
  std::int64_t total_weight() const;
};

/// Draws k multiset slots uniformly without replacement from the
/// total_weight() slots of the subset and returns the distinct object indices
/// hit (copies of one object collapse). Deterministic given the stream.
/// Requires 0 <= k <= subset total weight.
IndexSet weighted_sample(const FamilySubset& view, std::int64_t k, SplitRng& rng);

}  // namespace geocover

#endif  // GEOCOVER_FAMILY_HPP_

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

#include "geocover/family.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>
#include <stdexcept>

namespace geocover {

namespace {
// Weights stay well below this; doubling past it signals a runaway loop.
constexpr std::int64_t kWeightCap = std::int64_t{1} << 62;
}  // namespace

bool index_set_contains(const IndexSet& s, int i) {
  return std::binary_search(s.begin(), s.end(), i);
}

IndexSet index_set_union(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

void WeightedFamily::set_weight(int i, std::int64_t w) {
  if (w < 1) throw std::invalid_argument("weight must be >= 1");
  total_ += w - weights_[i];
  weights_[i] = w;
}

void WeightedFamily::double_weight(int i) {
  if (weights_[i] > kWeightCap / 2 || total_ > kWeightCap) {
    throw std::overflow_error("object weight overflow during reweighting");
  }
  total_ += weights_[i];
  weights_[i] *= 2;
}

void WeightedFamily::reset_weights() {
  std::fill(weights_.begin(), weights_.end(), 1);
  total_ = size();
}

FamilySubset FamilySubset::all(const WeightedFamily& f) {
  FamilySubset v;
  v.family = &f;
  v.indices.resize(f.size());
  std::iota(v.indices.begin(), v.indices.end(), 0);
  return v;
}

FamilySubset FamilySubset::of(const WeightedFamily& f, IndexSet indices) {
  assert(std::is_sorted(indices.begin(), indices.end()));
  FamilySubset v;
  v.family = &f;
  v.indices = std::move(indices);
  return v;
}

std::int64_t FamilySubset::total_weight() const {
  std::int64_t w = 0;
  for (int i : indices) w += family->weight(i);
  return w;
}

IndexSet weighted_sample(const FamilySubset& view, std::int64_t k, SplitRng& rng) {
  const std::int64_t total = view.total_weight();
  if (k < 0 || k > total) {
    throw std::invalid_argument("weighted_sample: k out of range");
  }
  if (k == 0) return {};

  // Floyd's algorithm: k distinct slot positions in [0, total).
  std::set<std::int64_t> slots;
  for (std::int64_t j = total - k; j < total; ++j) {
    std::int64_t t = static_cast<std::int64_t>(
        rng.below(static_cast<std::uint64_t>(j) + 1));
    if (!slots.insert(t).second) slots.insert(j);
  }

  // Map slots to object indices via the running prefix of weights.
  IndexSet out;
  auto it = slots.begin();
  std::int64_t prefix = 0;
  for (int idx : view.indices) {
    prefix += view.family->weight(idx);
    bool hit = false;
    while (it != slots.end() && *it < prefix) {
      hit = true;
      ++it;
    }
    if (hit) out.push_back(idx);
    if (it == slots.end()) break;
  }
  return out;  // ascending by construction
}

}  // namespace geocover

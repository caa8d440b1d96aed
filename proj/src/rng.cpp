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

#include "geocover/rng.hpp"

#include <cassert>

namespace geocover {

std::uint64_t SplitRng::below(std::uint64_t bound) {
  assert(bound > 0);
  if (bound == 1) return 0;
  // Rejection sampling over the largest multiple of bound.
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t v;
  do {
    v = next();
  } while (v >= limit);
  return v % bound;
}

Rational SplitRng::rational(long lo, long hi, long denom) {
  assert(denom > 0 && lo <= hi);
  std::int64_t a = static_cast<std::int64_t>(lo) * denom;
  std::int64_t b = static_cast<std::int64_t>(hi) * denom;
  return Rational(static_cast<long>(range(a, b)), denom);
}

}  // namespace geocover

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

#ifndef GEOCOVER_RNG_HPP_
#define GEOCOVER_RNG_HPP_

#include <cstdint>
#include <random>

#include "geocover/rational.hpp"

namespace geocover {

/// Seeded deterministic random stream. Bounded draws use rejection sampling on
/// the raw 64-bit output, so sequences do not depend on the standard library's
/// distribution implementations. Child streams are derived from the root seed
/// by a fixed label hash, which keeps parallel phases reproducible.
class SplitRng {
 public:
  explicit SplitRng(std::uint64_t seed) : root_(seed), gen_(mix(seed)) {}

  std::uint64_t next() { return gen_(); }

  /// Uniform in [0, bound). bound > 0.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform in [lo, hi] inclusive.
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
                    below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  bool coin() { return (next() & 1u) != 0; }

  /// Uniform rational i/denom with i in [lo*denom, hi*denom].
  Rational rational(long lo, long hi, long denom);

  /// Independent stream derived from (root seed, label).
  SplitRng child(std::uint64_t label) const {
    return SplitRng(mix(root_ + mix(label + 0x9e3779b97f4a7c15ULL)));
  }

  std::uint64_t root_seed() const { return root_; }

 private:
  static std::uint64_t mix(std::uint64_t x) {
    // splitmix64 finalizer
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  std::uint64_t root_;
  std::mt19937_64 gen_;
};

}  // namespace geocover

#endif  // GEOCOVER_RNG_HPP_

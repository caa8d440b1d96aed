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

#ifndef GEOCOVER_COVER_HPP_
#define GEOCOVER_COVER_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "geocover/family.hpp"
#include "geocover/rational.hpp"

namespace geocover {

/// A demand point (or region) left uncovered by a candidate choice, reported
/// as the set of family objects containing it plus a printable location.
struct CoverWitness {
  IndexSet containing;
  std::string where;
};

/// Coverage demand abstracted as an uncovered-witness finder, so drivers stay
/// independent of the geometry and of whether the demand is finite.
class CoverProblem {
 public:
  virtual ~CoverProblem() = default;
  virtual int object_count() const = 0;
  /// Some uncovered demand witness, or nullopt when chosen covers everything.
  /// Deterministic: the same chosen set always yields the same witness.
  virtual std::optional<CoverWitness> uncovered_witness(
      const IndexSet& chosen) const = 0;
};

struct CoverResult {
  IndexSet chosen;
  std::int64_t guessed_c = 0;   // optimum guess at which the driver succeeded
  std::int64_t iterations = 0;  // net constructions / picks / search nodes
  bool valid = false;
};

struct ValidateResult {
  bool ok = false;
  std::optional<CoverWitness> witness;
};

ValidateResult validate_cover(const CoverProblem& problem, const IndexSet& chosen);

class InfeasibleError : public std::runtime_error {
 public:
  InfeasibleError(std::string what, CoverWitness w)
      : std::runtime_error(std::move(what)), witness(std::move(w)) {}
  CoverWitness witness;
};

/// Builds a 1/r-net of the family under its current weights.
using NetFn =
    std::function<IndexSet(const WeightedFamily&, const Rational& r, SplitRng&)>;

struct BgParams {
  /// Net rounds allowed per optimum guess: ceil(budget_constant * c' *
  /// log2(max(2, n/c'))). Exhaustion doubles the guess instead of failing.
  double budget_constant = 8.0;
};

/// Iterative reweighting driver. For each guess c' = 1, 2, 4, ... it resets
/// the weights, repeatedly builds a 1/(2c')-net, and doubles the weight of
/// every object containing the uncovered witness until some net covers the
/// demand. Weights are restored to 1 before returning.
CoverResult bg_cover(const CoverProblem& problem, WeightedFamily& family,
                     const NetFn& net_fn, SplitRng& rng, const BgParams& params = {});

/// Finite demand with an explicit membership matrix; shared by the greedy and
/// exact baselines and usable as a CoverProblem for the driver.
class FiniteCoverProblem : public CoverProblem {
 public:
  FiniteCoverProblem(int n_objects, int n_points,
                     const std::function<bool(int object, int point)>& covers,
                     std::vector<std::string> point_labels = {});

  int object_count() const override { return n_objects_; }
  int point_count() const { return n_points_; }
  int word_count() const { return words_; }
  bool covers(int object, int point) const {
    return (bits_[object][point >> 6] >> (point & 63)) & 1u;
  }
  /// Packed membership row of one object.
  const std::vector<std::uint64_t>& row(int object) const { return bits_[object]; }
  std::optional<CoverWitness> uncovered_witness(const IndexSet& chosen) const override;

 private:
  int n_objects_;
  int n_points_;
  int words_;
  std::vector<std::vector<std::uint64_t>> bits_;  // per object, packed points
  std::vector<std::string> labels_;
};

/// Picks the object covering the most uncovered points (ties: lowest index).
CoverResult greedy_cover(const FiniteCoverProblem& problem);

/// Optimal cover by branch and bound; among optima returns the
/// lexicographically smallest index set. Requires at most 26 objects.
CoverResult exact_cover(const FiniteCoverProblem& problem);

}  // namespace geocover

#endif  // GEOCOVER_COVER_HPP_

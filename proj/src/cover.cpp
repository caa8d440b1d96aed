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

#include "geocover/cover.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

namespace geocover {

ValidateResult validate_cover(const CoverProblem& problem, const IndexSet& chosen) {
  ValidateResult r;
  r.witness = problem.uncovered_witness(chosen);
  r.ok = !r.witness.has_value();
  return r;
}

CoverResult bg_cover(const CoverProblem& problem, WeightedFamily& family,
                     const NetFn& net_fn, SplitRng& rng, const BgParams& params) {
  const int n = problem.object_count();
  CoverResult result;

  if (!problem.uncovered_witness({})) {  // empty demand
    result.valid = true;
    return result;
  }

  for (std::int64_t guess = 1;; guess *= 2) {
    if (guess > n) {
      family.reset_weights();
      throw std::logic_error(
          "bg_cover: guess exceeded the family size; the input does not cover "
          "the demand or a net/membership routine is inconsistent");
    }
    family.reset_weights();
    double ratio = std::max(2.0, static_cast<double>(n) / static_cast<double>(guess));
    std::int64_t budget = static_cast<std::int64_t>(
        std::ceil(params.budget_constant * static_cast<double>(guess) *
                  std::log2(ratio)));
    for (std::int64_t round = 0; round < budget; ++round) {
      IndexSet net = net_fn(family, Rational(2 * static_cast<long>(guess)), rng);
      ++result.iterations;
      auto witness = problem.uncovered_witness(net);
      if (!witness) {
        family.reset_weights();
        result.chosen = std::move(net);
        result.guessed_c = guess;
        result.valid = true;
        return result;
      }
      if (witness->containing.empty()) {
        family.reset_weights();
        throw InfeasibleError("bg_cover: demand point covered by no object",
                              *witness);
      }
#ifndef NDEBUG
      // The witness evaded a 1/(2c')-net, so its depth is at most W/(2c').
      std::int64_t depth = 0;
      for (int i : witness->containing) depth += family.weight(i);
      assert(depth * 2 * guess <= family.total_weight() &&
             "net guarantee violated by an uncovered witness");
#endif
      for (int i : witness->containing) family.double_weight(i);
    }
  }
}

FiniteCoverProblem::FiniteCoverProblem(
    int n_objects, int n_points,
    const std::function<bool(int object, int point)>& covers,
    std::vector<std::string> point_labels)
    : n_objects_(n_objects),
      n_points_(n_points),
      words_((n_points + 63) / 64),
      bits_(n_objects, std::vector<std::uint64_t>(std::max(words_, 1), 0)),
      labels_(std::move(point_labels)) {
  for (int o = 0; o < n_objects; ++o) {
    for (int p = 0; p < n_points; ++p) {
      if (covers(o, p)) bits_[o][p >> 6] |= std::uint64_t{1} << (p & 63);
    }
  }
}

std::optional<CoverWitness> FiniteCoverProblem::uncovered_witness(
    const IndexSet& chosen) const {
  for (int w = 0; w < words_; ++w) {
    std::uint64_t covered = 0;
    for (int o : chosen) covered |= bits_[o][w];
    std::uint64_t mask = ~std::uint64_t{0};
    if (w == words_ - 1 && (n_points_ & 63) != 0) {
      mask = (std::uint64_t{1} << (n_points_ & 63)) - 1;
    }
    std::uint64_t missing = ~covered & mask;
    if (missing != 0) {
      int p = w * 64 + __builtin_ctzll(missing);  // lowest-index uncovered point
      CoverWitness wit;
      for (int o = 0; o < n_objects_; ++o) {
        if (covers(o, p)) wit.containing.push_back(o);
      }
      wit.where = p < static_cast<int>(labels_.size()) ? labels_[p]
                                                       : "point " + std::to_string(p);
      return wit;
    }
  }
  return std::nullopt;
}

namespace {

int popcount_and(const std::vector<std::uint64_t>& a,
                 const std::vector<std::uint64_t>& b) {
  int c = 0;
  for (std::size_t w = 0; w < a.size(); ++w) {
    c += __builtin_popcountll(a[w] & b[w]);
  }
  return c;
}

}  // namespace

CoverResult greedy_cover(const FiniteCoverProblem& problem) {
  const int n = problem.object_count();
  const int m = problem.point_count();
  CoverResult result;

  std::vector<std::uint64_t> uncovered(std::max(problem.word_count(), 1), 0);
  for (int p = 0; p < m; ++p) uncovered[p >> 6] |= std::uint64_t{1} << (p & 63);

  int remaining = m;
  while (remaining > 0) {
    int best = -1, best_gain = 0;
    for (int o = 0; o < n; ++o) {
      int gain = popcount_and(problem.row(o), uncovered);
      if (gain > best_gain) {
        best_gain = gain;
        best = o;
      }
    }
    if (best < 0) {
      auto witness = problem.uncovered_witness(result.chosen);
      throw InfeasibleError("greedy_cover: demand point covered by no object",
                            witness.value_or(CoverWitness{}));
    }
    result.chosen.push_back(best);
    for (int w = 0; w < problem.word_count(); ++w) {
      uncovered[w] &= ~problem.row(best)[w];
    }
    remaining -= best_gain;
    ++result.iterations;
  }
  std::sort(result.chosen.begin(), result.chosen.end());
  result.valid = true;
  return result;
}

namespace {

// True when a's sorted index sequence precedes b's: the lowest differing
// index belongs to a.
bool lex_less_mask(std::uint32_t a, std::uint32_t b) {
  std::uint32_t diff = a ^ b;
  if (diff == 0) return false;
  return (a >> __builtin_ctz(diff)) & 1u;
}

struct ExactSearch {
  const FiniteCoverProblem* problem;
  int n;
  std::uint32_t best_mask = 0;
  int best_size = 0;
  std::int64_t nodes = 0;

  std::vector<int> point_order;  // points by ascending cover count

  bool better(std::uint32_t mask, int size) const {
    if (size != best_size) return size < best_size;
    return lex_less_mask(mask, best_mask);
  }

  void search(std::vector<std::uint64_t>& uncovered, int remaining,
              std::uint32_t mask, int size) {
    ++nodes;
    if (remaining == 0) {
      if (better(mask, size)) {
        best_mask = mask;
        best_size = size;
      }
      return;
    }
    if (size + 1 > best_size) return;  // even one more object is too many
    // Cheapest completion estimate: cover everything left with the best single
    // remaining gain per pick.
    int max_gain = 0;
    for (int o = 0; o < n; ++o) {
      if (mask & (1u << o)) continue;
      max_gain = std::max(max_gain, popcount_and(problem->row(o), uncovered));
    }
    if (max_gain == 0) return;  // infeasible branch
    int lb = (remaining + max_gain - 1) / max_gain;
    if (size + lb > best_size) return;

    // Branch on an uncovered point with the fewest candidate objects.
    int pick = -1, pick_cands = n + 1;
    for (int p : point_order) {
      if (!(uncovered[p >> 6] >> (p & 63) & 1u)) continue;
      int cands = 0;
      for (int o = 0; o < n; ++o) {
        if (!(mask & (1u << o)) && problem->covers(o, p)) ++cands;
      }
      if (cands < pick_cands) {
        pick_cands = cands;
        pick = p;
        if (cands <= 1) break;
      }
    }
    if (pick < 0 || pick_cands == 0) return;

    for (int o = 0; o < n; ++o) {
      if ((mask & (1u << o)) || !problem->covers(o, pick)) continue;
      std::vector<std::uint64_t> next = uncovered;
      int gain = 0;
      for (std::size_t w = 0; w < next.size(); ++w) {
        gain += __builtin_popcountll(next[w] & problem->row(o)[w]);
        next[w] &= ~problem->row(o)[w];
      }
      search(next, remaining - gain, mask | (1u << o), size + 1);
    }
  }
};

}  // namespace

CoverResult exact_cover(const FiniteCoverProblem& problem) {
  const int n = problem.object_count();
  const int m = problem.point_count();
  if (n > 26) {
    throw std::invalid_argument("exact_cover: refusing more than 26 objects");
  }
  if (m == 0) {
    CoverResult r;
    r.valid = true;
    return r;
  }

  CoverResult greedy = greedy_cover(problem);  // throws if infeasible

  ExactSearch s;
  s.problem = &problem;
  s.n = n;
  s.best_size = static_cast<int>(greedy.chosen.size());
  s.best_mask = 0;
  for (int o : greedy.chosen) s.best_mask |= 1u << o;

  s.point_order.resize(m);
  for (int p = 0; p < m; ++p) s.point_order[p] = p;
  std::vector<int> cover_count(m, 0);
  for (int p = 0; p < m; ++p) {
    for (int o = 0; o < n; ++o) cover_count[p] += problem.covers(o, p);
  }
  std::stable_sort(s.point_order.begin(), s.point_order.end(),
                   [&](int a, int b) { return cover_count[a] < cover_count[b]; });

  std::vector<std::uint64_t> uncovered(std::max(problem.word_count(), 1), 0);
  for (int p = 0; p < m; ++p) uncovered[p >> 6] |= std::uint64_t{1} << (p & 63);
  s.search(uncovered, m, 0, 0);

  CoverResult result;
  for (int o = 0; o < n; ++o) {
    if (s.best_mask & (1u << o)) result.chosen.push_back(o);
  }
  result.iterations = s.nodes;
  result.valid = true;
  return result;
}

}  // namespace geocover

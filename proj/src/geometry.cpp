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

#include "geocover/geometry.hpp"

#include <cassert>

namespace geocover {

int PiecewiseLinear::piece_at(const Rational& x) const {
  assert(in_domain(x));
  // Last index i with xs[i] < x, so x lies in [xs[i], xs[i+1]].
  int lo = 0, hi = static_cast<int>(xs.size()) - 1;
  if (hi == 0) return 0;
  if (x == xs.front()) return 0;
  while (hi - lo > 1) {
    int mid = (lo + hi) / 2;
    if (xs[mid] < x) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

Rational PiecewiseLinear::eval(const Rational& x) const {
  int i = piece_at(x);
  if (xs.size() == 1) return ys[0];
  if (x == xs[i]) return ys[i];
  if (x == xs[i + 1]) return ys[i + 1];
  return ys[i] + (ys[i + 1] - ys[i]) * (x - xs[i]) / (xs[i + 1] - xs[i]);
}

Rational PiecewiseLinear::slope_left(const Rational& x) const {
  assert(x > x_min());
  int i = piece_at(x);  // left piece preferred at breakpoints
  return (ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i]);
}

Rational PiecewiseLinear::slope_right(const Rational& x) const {
  assert(x < x_max());
  int i = piece_at(x);
  if (x == xs[i + 1]) i += 1;  // interior breakpoint: take the right piece
  return (ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i]);
}

}  // namespace geocover

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

#ifndef GEOCOVER_GEOMETRY_HPP_
#define GEOCOVER_GEOMETRY_HPP_

#include <vector>

#include "geocover/rational.hpp"

namespace geocover {

struct Pt2 {
  Rational x, y;
  bool operator==(const Pt2& o) const { return x == o.x && y == o.y; }
};

struct Pt3 {
  Rational x, y, z;
  const Rational& operator[](int axis) const {
    return axis == 0 ? x : axis == 1 ? y : z;
  }
  Rational& operator[](int axis) { return axis == 0 ? x : axis == 1 ? y : z; }
  bool operator==(const Pt3& o) const { return x == o.x && y == o.y && z == o.z; }
};

/// Sign of the cross product (b-a) x (c-a): >0 left turn, <0 right turn, 0 collinear.
inline int orient2d(const Pt2& a, const Pt2& b, const Pt2& c) {
  Rational det = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return det.sign();
}

/// y of the line through p,q at x. Requires p.x != q.x.
inline Rational line_y_at(const Pt2& p, const Pt2& q, const Rational& x) {
  return p.y + (q.y - p.y) * (x - p.x) / (q.x - p.x);
}

/// Continuous piecewise-linear function given by breakpoints (xs strictly increasing).
/// A single breakpoint denotes a point domain.
struct PiecewiseLinear {
  std::vector<Rational> xs;
  std::vector<Rational> ys;

  const Rational& x_min() const { return xs.front(); }
  const Rational& x_max() const { return xs.back(); }
  bool in_domain(const Rational& x) const { return x >= x_min() && x <= x_max(); }

  /// Index of the piece [xs[i], xs[i+1]] containing x; prefers the left piece
  /// at interior breakpoints. x must be in the domain.
  int piece_at(const Rational& x) const;

  Rational eval(const Rational& x) const;

  /// Slope of the piece immediately left of x (x > x_min).
  Rational slope_left(const Rational& x) const;
  /// Slope of the piece immediately right of x (x < x_max).
  Rational slope_right(const Rational& x) const;

  void push_point(const Rational& x, const Rational& y) {
    xs.push_back(x);
    ys.push_back(y);
  }
};

}  // namespace geocover

#endif  // GEOCOVER_GEOMETRY_HPP_

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

#ifndef GEOCOVER_TRIANGLES2D_HPP_
#define GEOCOVER_TRIANGLES2D_HPP_

#include <optional>
#include <vector>

#include "geocover/config_system.hpp"
#include "geocover/cover.hpp"
#include "geocover/geometry.hpp"
#include "geocover/net_builder.hpp"

namespace geocover {

/// Closed triangle, vertices counterclockwise.
struct Triangle {
  Pt2 a, b, c;

  const Pt2& vertex(int k) const { return k == 0 ? a : k == 1 ? b : c; }
  /// Reorders to counterclockwise; throws on zero area.
  void normalize();
};

bool triangle_contains(const Triangle& t, const Pt2& p);

struct Frame {
  Rational x_lo, x_hi, y_lo, y_hi;
};

/// Bounding box of triangles and demand points, expanded by 1 on every side.
Frame default_frame(const std::vector<Triangle>& tris, const std::vector<Pt2>& points);

/// One cell of the vertical decomposition of the area outside the union:
/// a slab between consecutive event coordinates, cut by a bottom and a top
/// boundary (a triangle edge or the frame, marked by owner -1).
struct Trapezoid {
  Rational x_lo, x_hi;
  Rational y_bot_lo, y_bot_hi;  // bottom boundary at x_lo / x_hi
  Rational y_top_lo, y_top_hi;
  int bot_tri = -1, top_tri = -1;
  IndexSet defining;  // bottom, top, left and right event triangles; at most 4

  bool contains(const Pt2& p) const;  // closed
  std::vector<Pt2> corners() const;   // counterclockwise, duplicates removed
};

struct TrapDecomp {
  Frame frame;
  std::vector<Trapezoid> traps;  // ordered by slab, then bottom-up
};

/// Rejects inputs the decomposition cannot handle, naming the degeneracy:
/// duplicate vertices across triangles, a vertex on another triangle's edge,
/// or two arrangement vertices sharing an x coordinate.
void validate_general_position(const std::vector<Triangle>& tris);

/// Vertical-slab decomposition of frame minus the union of the chosen
/// triangles. Walls run at every vertex and edge-crossing x coordinate.
TrapDecomp complement_trapezoids(const std::vector<Triangle>& tris,
                                 const IndexSet& hosts, const Frame& frame);

/// Positive-area overlap between the closed triangle and the trapezoid.
/// Measure-zero contact along a carving edge does not count.
bool triangle_conflicts_trap(const Triangle& t, const Trapezoid& trap);

/// Configuration system with complement trapezoids as regions. Caches
/// pairwise edge crossings and bounding boxes of the full family up front.
class TriangleSystem : public ConfigurationSystem {
 public:
  TriangleSystem(const std::vector<Triangle>& tris, Frame frame);

  int defining_bound() const override { return 4; }
  std::vector<Configuration> zero_regions(const IndexSet& hosts) const override;
  bool conflicts(const Configuration& cfg, int tri) const override;
  std::optional<Configuration> locate(std::span<const Rational> point,
                                      const IndexSet& hosts) const override;

  const Frame& frame() const { return frame_; }
  TrapDecomp decompose(const IndexSet& hosts) const;

 private:
  struct Crossing {
    Rational x;
    int tri_a, tri_b;
  };
  struct BBox {
    Rational x_lo, x_hi, y_lo, y_hi;
  };

  const std::vector<Triangle>* tris_;
  Frame frame_;
  std::vector<Crossing> crossings_;  // all pairwise proper edge crossings
  std::vector<BBox> boxes_;
};

std::int64_t triangle_depth(const std::vector<Triangle>& tris, const Pt2& p,
                            const WeightedFamily& weights);

IndexSet triangle_net(const TriangleSystem& sys, const WeightedFamily& family,
                      const Rational& r, SplitRng& rng, bool two_level = true,
                      const NetParams& params = {});

FiniteCoverProblem triangle_finite_problem(const std::vector<Triangle>& tris,
                                           const std::vector<Pt2>& points);

/// Cover of the demand points via the reweighting driver.
CoverResult triangle_cover(const std::vector<Triangle>& tris,
                           const std::vector<Pt2>& points, WeightedFamily& family,
                           SplitRng& rng, const NetParams& net_params = {},
                           const BgParams& bg_params = {});

}  // namespace geocover

#endif  // GEOCOVER_TRIANGLES2D_HPP_

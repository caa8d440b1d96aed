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

#ifndef GEOCOVER_BOXES3D_HPP_
#define GEOCOVER_BOXES3D_HPP_

#include <optional>
#include <vector>

#include "geocover/config_system.hpp"
#include "geocover/cover.hpp"
#include "geocover/geometry.hpp"
#include "geocover/net_builder.hpp"

namespace geocover {

/// Closed axis-parallel cube of side exactly 1.
struct UnitCube {
  Pt3 mn;
  bool contains(const Pt3& q) const {
    for (int a = 0; a < 3; ++a) {
      if (q[a] < mn[a] || q[a] > mn[a] + Rational(1)) return false;
    }
    return true;
  }
};

/// Cubes sharing an interior half-integer grid point; their union boundary is
/// star-shaped as seen from it.
struct Cluster {
  Pt3 grid_point;
  IndexSet members;
};

/// Smallest half-integer point strictly interior to the cube (per axis).
Pt3 interior_grid_point(const UnitCube& c);

/// Assigns every cube to its interior grid point; clusters sorted by grid
/// point, members ascending.
std::vector<Cluster> grid_assign(const std::vector<UnitCube>& cubes);

/// An axis-parallel rectangle of the union boundary, carrying which cubes
/// carved its sides. Boundary ties between coincident coplanar faces go to
/// the lower cube index.
struct BoundaryRect {
  int axis;  // plane normal
  int dir;   // outward: +1 towards increasing axis coordinate
  Rational h;
  int u_axis, v_axis;
  Rational u_lo, u_hi, v_lo, v_hi;
  int face_cube = -1;
  IndexSet defining;  // face cube plus carving cubes; at most 5
};

/// Boundary of the union of the member cubes, one face at a time, as
/// interior-disjoint rectangles. apex must be interior to every member.
std::vector<BoundaryRect> cluster_boundary_rects(const std::vector<UnitCube>& cubes,
                                                 const Pt3& apex,
                                                 const IndexSet& members);

/// a*x + b*y + c*z + d >= 0, or > 0 when strict.
struct HalfSpace {
  Rational a, b, c, d;
  bool strict = false;
  Rational eval(const Pt3& q) const { return a * q.x + b * q.y + c * q.z + d; }
};

/// Points q whose segment to the apex crosses the rectangle strictly between
/// the endpoints, with the rectangle half-open toward its high u/v edges so
/// adjacent cones stay disjoint. Closure is the infinite cone beyond the
/// rectangle; the rectangle's own plane is excluded.
struct ConeRegion {
  Pt3 apex;
  BoundaryRect rect;
  std::vector<HalfSpace> halves;  // supporting plane (strict) + 4 sides
};

/// apex must be strictly on the inner side of the rectangle's plane.
ConeRegion cone_region(const Pt3& apex, const BoundaryRect& rect);
bool cone_contains(const ConeRegion& region, const Pt3& q);

/// Whether the closed cube meets the cone region. Exact: vertex enumeration
/// of the cube clipped by the closed half-spaces, then a strictness check on
/// each open side.
bool cube_conflicts_cone(const UnitCube& cube, const ConeRegion& region);

/// Configuration system of one cluster: objects are the member cubes, regions
/// the cone regions over the boundary rectangles of the chosen members.
class ClusterSystem : public ConfigurationSystem {
 public:
  ClusterSystem(const std::vector<UnitCube>& cubes, Pt3 apex, IndexSet members)
      : cubes_(&cubes), apex_(std::move(apex)), members_(std::move(members)) {}

  int defining_bound() const override { return 6; }
  std::vector<Configuration> zero_regions(const IndexSet& hosts) const override;
  bool conflicts(const Configuration& cfg, int cube) const override;
  std::optional<Configuration> locate(std::span<const Rational> point,
                                      const IndexSet& hosts) const override;

  const Pt3& apex() const { return apex_; }
  const IndexSet& members() const { return members_; }

 private:
  const std::vector<UnitCube>* cubes_;
  Pt3 apex_;
  IndexSet members_;
};

/// Region of the empty host set: all of space.
struct EverythingRegion {};

std::int64_t cube_depth(const std::vector<UnitCube>& cubes, const Pt3& q,
                        const WeightedFamily& weights);

/// 1/r-net assembled cluster by cluster: clusters whose weight reaches
/// W/(kGridConstant * r) contribute a net at the matching local parameter.
inline constexpr int kGridConstant = 125;  // grid points in a side-2 box
IndexSet unit_cube_net(const std::vector<UnitCube>& cubes,
                       const WeightedFamily& family, const Rational& r,
                       SplitRng& rng, bool two_level = true,
                       const NetParams& params = {});

FiniteCoverProblem cube_finite_problem(const std::vector<UnitCube>& cubes,
                                       const std::vector<Pt3>& points);

CoverResult cube_cover(const std::vector<UnitCube>& cubes,
                       const std::vector<Pt3>& points, WeightedFamily& family,
                       SplitRng& rng, const NetParams& net_params = {},
                       const BgParams& bg_params = {});

/// Exhaustive net check over the canonical witness grid: every facet
/// coordinate and every gap between consecutive ones, in all three axes.
/// Flags any cell of weighted depth strictly above W/r that no net cube
/// covers. Integer rank arithmetic throughout.
struct CubeNetCheck {
  bool ok = true;
  std::int64_t cells = 0;
  std::int64_t deep_cells = 0;
  std::optional<Pt3> violation;
};
CubeNetCheck check_cube_net_exhaustive(const std::vector<UnitCube>& cubes,
                                       const WeightedFamily& family,
                                       const IndexSet& net, const Rational& r);

}  // namespace geocover

#endif  // GEOCOVER_BOXES3D_HPP_

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

#ifndef GEOCOVER_TERRAIN_HPP_
#define GEOCOVER_TERRAIN_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "geocover/config_system.hpp"
#include "geocover/cover.hpp"
#include "geocover/geometry.hpp"
#include "geocover/net_builder.hpp"

namespace geocover {

/// An x-monotone polygonal chain: at least two vertices, x strictly increasing.
struct Chain {
  std::vector<Pt2> verts;

  const Rational& x_first() const { return verts.front().x; }
  const Rational& x_last() const { return verts.back().x; }
  int vertex_count() const { return static_cast<int>(verts.size()); }

  /// Chain height P(x); x must lie in [x_first, x_last].
  Rational height_at(const Rational& x) const;

  /// Throws std::invalid_argument naming the violated condition.
  void validate() const;
};

/// Whether guard g (a point on the chain) sees p: the segment gp never dips
/// strictly below the chain. Exact; requires x(p) within the chain's range.
bool sees(const Chain& chain, const Pt2& g, const Pt2& p);
/// sees() restricted to x(g) <= x(p).
bool sees_left(const Chain& chain, const Pt2& g, const Pt2& p);

/// Lowest y visible from g looking rightward, as a function of x on
/// [x(g), x_last]: a single scan maintaining the steepest blocking vertex.
/// For x >= x(g): g sees (x, y) iff y >= left_profile(x).
PiecewiseLinear left_profile(const Chain& chain, const Pt2& g);

enum class Side { kLeft, kRight };

/// One maximal interval of constant ownership. owner -1 means no guard sees
/// any point in the interval from the diagram's side.
struct DiagramPart {
  Rational lo, hi;
  bool lo_closed = true, hi_closed = true;
  int owner = -1;

  bool contains(const Rational& x) const {
    if (x < lo || x > hi) return false;
    if (x == lo && !lo_closed) return false;
    if (x == hi && !hi_closed) return false;
    return true;
  }
};

/// Partition of the chain's x-range by which guard owns each coordinate:
/// the owner attains the lexicographically least (visible height, guard x).
/// At most one unowned part, always leftmost.
struct OwnershipDiagram {
  std::vector<DiagramPart> parts;

  /// Owners in order, unowned excluded. A Davenport-Schinzel sequence: no
  /// immediate repeats, no a..b..a..b.
  std::vector<int> ownership_sequence() const;
  const DiagramPart* part_at(const Rational& x) const;
};

/// Region payload of a guarding configuration: one ownership interval plus
/// its neighbors. Lives in the coordinate frame of its side (the right side
/// works on the x-mirrored chain). Neighbor -2 means the interval touches the
/// end of the chain; -1 means the neighbor is unowned.
struct TerrainRegion {
  Rational lo, hi;
  bool lo_closed = true, hi_closed = true;
  int owner = -1;
  int left_nb = -2, right_nb = -2;
  Side side = Side::kLeft;
};

/// A chain plus guards standing on it (distinct positions), with cached
/// visibility profiles for both sides and per-guard visible chain intervals.
class TerrainInstance {
 public:
  TerrainInstance(Chain chain, std::vector<Pt2> guards);

  const Chain& chain() const { return chain_; }
  int guard_count() const { return static_cast<int>(guards_.size()); }
  const Pt2& guard(int i) const { return guards_[i]; }

  const Chain& side_chain(Side s) const {
    return s == Side::kLeft ? chain_ : mirrored_;
  }
  const Pt2& side_guard(Side s, int i) const {
    return s == Side::kLeft ? guards_[i] : mirrored_guards_[i];
  }
  const PiecewiseLinear& side_profile(Side s, int i) const {
    return s == Side::kLeft ? left_profiles_[i] : right_profiles_[i];
  }
  Pt2 to_side_frame(Side s, const Pt2& p) const {
    return s == Side::kLeft ? p : Pt2{-p.x, p.y};
  }

  /// Maximal closed x-intervals of the chain visible to guard i (both sides),
  /// in the original frame. May contain degenerate single-point intervals.
  const std::vector<std::pair<Rational, Rational>>& visible_intervals(int i) const {
    return visible_[i];
  }

  bool guard_sees_from(Side s, int i, const Pt2& p) const;
  bool guard_sees(int i, const Pt2& p) const {
    return guard_sees_from(Side::kLeft, i, p) || guard_sees_from(Side::kRight, i, p);
  }

 private:
  Chain chain_;
  Chain mirrored_;
  std::vector<Pt2> guards_;
  std::vector<Pt2> mirrored_guards_;
  std::vector<PiecewiseLinear> left_profiles_;
  std::vector<PiecewiseLinear> right_profiles_;
  std::vector<std::vector<std::pair<Rational, Rational>>> visible_;
};

/// Lower envelope of the guards' visibility profiles on the given side, ties
/// broken toward the smaller side-frame guard x.
OwnershipDiagram ownership_diagram(const TerrainInstance& inst, const IndexSet& hosts,
                                   Side side);

/// Guarding configuration system for one side. Objects are the guards
/// (indices into the instance); regions are ownership intervals.
class GuardSystem : public ConfigurationSystem {
 public:
  GuardSystem(const TerrainInstance& inst, Side side) : inst_(&inst), side_(side) {}

  int defining_bound() const override { return 3; }
  std::vector<Configuration> zero_regions(const IndexSet& hosts) const override;
  bool conflicts(const Configuration& cfg, int guard) const override;
  /// point = (x, y) in the original frame, on or above the chain.
  std::optional<Configuration> locate(std::span<const Rational> point,
                                      const IndexSet& hosts) const override;

  Side side() const { return side_; }
  const TerrainInstance& instance() const { return *inst_; }

 private:
  const TerrainInstance* inst_;
  Side side_;
};

/// Free-standing form of GuardSystem::conflicts, for direct testing.
bool guard_conflict(const TerrainInstance& inst, const TerrainRegion& region,
                    int guard);

/// Total weight of guards seeing p from the given side / from either side.
/// p is in the original frame.
std::int64_t side_depth(const TerrainInstance& inst, Side side, const Pt2& p,
                        const WeightedFamily& weights);
std::int64_t guard_depth(const TerrainInstance& inst, const Pt2& p,
                         const WeightedFamily& weights);

/// Leftmost-gap witness: an x whose chain point no chosen guard sees, or
/// nullopt when the chosen guards see the whole chain. Seeing every chain
/// point is equivalent to seeing everything above the chain.
std::optional<Rational> uncovered_chain_x(const TerrainInstance& inst,
                                          const IndexSet& chosen);

/// Whole-chain coverage demand for the reweighting driver.
class TerrainCoverProblem : public CoverProblem {
 public:
  explicit TerrainCoverProblem(const TerrainInstance& inst) : inst_(&inst) {}
  int object_count() const override { return inst_->guard_count(); }
  std::optional<CoverWitness> uncovered_witness(const IndexSet& chosen) const override;

 private:
  const TerrainInstance* inst_;
};

/// Finite demand equivalent to whole-chain coverage: endpoints of every
/// guard's visible intervals plus midpoints of consecutive endpoints.
std::vector<Pt2> chain_witness_points(const TerrainInstance& inst);
FiniteCoverProblem terrain_finite_problem(const TerrainInstance& inst);

/// 1/r-net of the visibility regions: union of side nets at parameter 2r.
IndexSet terrain_net(const TerrainInstance& inst, const WeightedFamily& family,
                     const Rational& r, SplitRng& rng, bool two_level = true,
                     const NetParams& params = {});

/// Constant-factor guard cover of the whole chain via the reweighting driver.
/// Throws InfeasibleError when even the full guard set leaves a gap.
CoverResult guard_cover(const TerrainInstance& inst, WeightedFamily& family,
                        SplitRng& rng, const NetParams& net_params = {},
                        const BgParams& bg_params = {});

}  // namespace geocover

#endif  // GEOCOVER_TERRAIN_HPP_

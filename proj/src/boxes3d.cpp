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

#include "geocover/boxes3d.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>
#include <tuple>

namespace geocover {

Pt3 interior_grid_point(const UnitCube& c) {
  Pt3 p;
  for (int a = 0; a < 3; ++a) {
    mpz_class j = (c.mn[a] * Rational(2)).floor() + 1;
    p[a] = Rational(j, mpz_class(2));
  }
  return p;
}

std::vector<Cluster> grid_assign(const std::vector<UnitCube>& cubes) {
  std::map<std::tuple<mpq_class, mpq_class, mpq_class>, IndexSet> groups;
  for (std::size_t i = 0; i < cubes.size(); ++i) {
    Pt3 p = interior_grid_point(cubes[i]);
    groups[{p.x.raw(), p.y.raw(), p.z.raw()}].push_back(static_cast<int>(i));
  }
  std::vector<Cluster> out;
  out.reserve(groups.size());
  for (auto& [key, members] : groups) {
    Cluster c;
    c.grid_point = {Rational(std::get<0>(key)), Rational(std::get<1>(key)),
                    Rational(std::get<2>(key))};
    c.members = std::move(members);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<BoundaryRect> cluster_boundary_rects(const std::vector<UnitCube>& cubes,
                                                 const Pt3& apex,
                                                 const IndexSet& members) {
  std::vector<BoundaryRect> rects;
  const Rational one(1);

  for (int i : members) {
    const UnitCube& c = cubes[i];
    assert(c.mn.x < apex.x && apex.x < c.mn.x + one && c.mn.y < apex.y &&
           apex.y < c.mn.y + one && c.mn.z < apex.z && apex.z < c.mn.z + one);
    for (int axis = 0; axis < 3; ++axis) {
      for (int dir : {-1, +1}) {
        const Rational h = dir < 0 ? c.mn[axis] : c.mn[axis] + one;
        const int ua = (axis + 1) % 3, va = (axis + 2) % 3;
        const Rational fu_lo = c.mn[ua], fu_hi = c.mn[ua] + one;
        const Rational fv_lo = c.mn[va], fv_hi = c.mn[va] + one;

        // Cubes covering the outward side of this face plane, plus coincident
        // same-direction faces of lower-index cubes.
        struct Obstacle {
          Rational u_lo, u_hi, v_lo, v_hi;
          int cube;
        };
        std::vector<Obstacle> obstacles;
        for (int j : members) {
          if (j == i) continue;
          const UnitCube& o = cubes[j];
          bool covers_outside;
          if (dir > 0) {
            covers_outside = o.mn[axis] <= h && h < o.mn[axis] + one;
          } else {
            covers_outside = o.mn[axis] < h && h <= o.mn[axis] + one;
          }
          bool coincident_tie =
              j < i && (dir > 0 ? o.mn[axis] + one == h : o.mn[axis] == h);
          if (!covers_outside && !coincident_tie) continue;
          Obstacle ob{max(fu_lo, o.mn[ua]), min(fu_hi, o.mn[ua] + one),
                      max(fv_lo, o.mn[va]), min(fv_hi, o.mn[va] + one), j};
          if (ob.u_lo < ob.u_hi && ob.v_lo < ob.v_hi) obstacles.push_back(ob);
        }

        // Slab decomposition of the face in u, then 1D complements in v.
        struct Bound {
          Rational x;
          int cause;  // -1: the face's own edge
        };
        std::vector<Bound> events{{fu_lo, -1}, {fu_hi, -1}};
        for (const Obstacle& ob : obstacles) {
          if (ob.u_lo > fu_lo) events.push_back({ob.u_lo, ob.cube});
          if (ob.u_hi < fu_hi) events.push_back({ob.u_hi, ob.cube});
        }
        std::sort(events.begin(), events.end(),
                  [](const Bound& a, const Bound& b) { return a.x < b.x; });
        events.erase(std::unique(events.begin(), events.end(),
                                 [](const Bound& a, const Bound& b) {
                                   return a.x == b.x;
                                 }),
                     events.end());

        for (std::size_t s = 0; s + 1 < events.size(); ++s) {
          const Rational& su = events[s].x;
          const Rational& eu = events[s + 1].x;
          // Obstacles spanning this whole slab, as v-intervals with causes.
          struct VInt {
            Rational lo, hi;
            int lo_cause, hi_cause;
          };
          std::vector<VInt> blocks;
          for (const Obstacle& ob : obstacles) {
            if (ob.u_lo <= su && eu <= ob.u_hi) {
              blocks.push_back({ob.v_lo, ob.v_hi, ob.cube, ob.cube});
            }
          }
          std::sort(blocks.begin(), blocks.end(), [](const VInt& a, const VInt& b) {
            return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
          });
          std::vector<VInt> merged;
          for (const VInt& b : blocks) {
            if (!merged.empty() && b.lo <= merged.back().hi) {
              if (b.hi > merged.back().hi) {
                merged.back().hi = b.hi;
                merged.back().hi_cause = b.hi_cause;
              }
            } else {
              merged.push_back(b);
            }
          }

          // Free v-intervals between the merged blocks.
          auto emit = [&](const Rational& vlo, const Rational& vhi, int lo_cause,
                          int hi_cause) {
            if (!(vlo < vhi)) return;
            BoundaryRect r;
            r.axis = axis;
            r.dir = dir;
            r.h = h;
            r.u_axis = ua;
            r.v_axis = va;
            r.u_lo = su;
            r.u_hi = eu;
            r.v_lo = vlo;
            r.v_hi = vhi;
            r.face_cube = i;
            for (int g : {i, events[s].cause, events[s + 1].cause, lo_cause,
                          hi_cause}) {
              if (g >= 0) r.defining.push_back(g);
            }
            std::sort(r.defining.begin(), r.defining.end());
            r.defining.erase(std::unique(r.defining.begin(), r.defining.end()),
                             r.defining.end());
            rects.push_back(std::move(r));
          };

          Rational cursor = fv_lo;
          int cursor_cause = -1;
          for (const VInt& b : merged) {
            emit(cursor, b.lo, cursor_cause, b.lo_cause);
            cursor = max(cursor, b.hi);
            cursor_cause = b.hi_cause;
          }
          emit(cursor, fv_hi, cursor_cause, -1);
        }
      }
    }
  }
  return rects;
}

ConeRegion cone_region(const Pt3& apex, const BoundaryRect& rect) {
  const int k = rect.axis;
  const Rational chi(rect.dir);
  const Rational depth = rect.h - apex[k];
  if ((chi * depth).sign() <= 0) {
    throw std::invalid_argument("cone_region: apex not inside the face plane");
  }

  ConeRegion region;
  region.apex = apex;
  region.rect = rect;

  auto make = [&](int coef_axis_1, Rational c1, int coef_axis_2, Rational c2,
                  Rational constant, bool strict) {
    HalfSpace hs;
    hs.a = hs.b = hs.c = Rational(0);
    hs.d = std::move(constant);
    Rational* coeffs[3] = {&hs.a, &hs.b, &hs.c};
    *coeffs[coef_axis_1] += c1;
    *coeffs[coef_axis_2] += c2;
    hs.strict = strict;
    return hs;
  };

  // Supporting plane, strictly beyond the rectangle: chi * (q_k - h) > 0.
  region.halves.push_back(make(k, chi, k, Rational(0), -chi * rect.h, true));

  // The segment from q to the apex meets the plane at
  //   c_u = p_u + (h - p_k)(q_u - p_u) / (q_k - p_k),
  // and chi*(q_k - p_k) > 0 beyond the plane, so each side condition clears
  // its denominator into one linear constraint. High edges are open.
  const int ua = rect.u_axis, va = rect.v_axis;
  const Rational pu = apex[ua], pv = apex[va], pk = apex[k];

  auto side = [&](int coord_axis, const Rational& p_coord, const Rational& bound,
                  bool upper) {
    // lower: c >= bound  ->  chi[(p_c - bound)(q_k - p_k) + depth (q_c - p_c)] >= 0
    // upper: c <  bound  ->  chi[(bound - p_c)(q_k - p_k) - depth (q_c - p_c)] > 0
    Rational ck = upper ? chi * (bound - p_coord) : chi * (p_coord - bound);
    Rational cc = upper ? -chi * depth : chi * depth;
    Rational constant = -ck * pk - cc * p_coord;
    return make(k, std::move(ck), coord_axis, std::move(cc), std::move(constant),
                upper);
  };
  region.halves.push_back(side(ua, pu, rect.u_lo, false));
  region.halves.push_back(side(ua, pu, rect.u_hi, true));
  region.halves.push_back(side(va, pv, rect.v_lo, false));
  region.halves.push_back(side(va, pv, rect.v_hi, true));
  return region;
}

bool cone_contains(const ConeRegion& region, const Pt3& q) {
  for (const HalfSpace& h : region.halves) {
    int s = h.eval(q).sign();
    if (h.strict ? s <= 0 : s < 0) return false;
  }
  return true;
}

namespace {

// Solves the 3x3 system given by three plane equalities; nullopt if singular.
std::optional<Pt3> plane_triple_point(const HalfSpace& p1, const HalfSpace& p2,
                                      const HalfSpace& p3) {
  const Rational det = p1.a * (p2.b * p3.c - p2.c * p3.b) -
                       p1.b * (p2.a * p3.c - p2.c * p3.a) +
                       p1.c * (p2.a * p3.b - p2.b * p3.a);
  if (det.sign() == 0) return std::nullopt;
  const Rational rx = -p1.d, ry = -p2.d, rz = -p3.d;
  Pt3 q;
  q.x = (rx * (p2.b * p3.c - p2.c * p3.b) - p1.b * (ry * p3.c - p2.c * rz) +
         p1.c * (ry * p3.b - p2.b * rz)) /
        det;
  q.y = (p1.a * (ry * p3.c - p2.c * rz) - rx * (p2.a * p3.c - p2.c * p3.a) +
         p1.c * (p2.a * rz - ry * p3.a)) /
        det;
  q.z = (p1.a * (p2.b * rz - ry * p3.b) - p1.b * (p2.a * rz - ry * p3.a) +
         rx * (p2.a * p3.b - p2.b * p3.a)) /
        det;
  return q;
}

}  // namespace

bool cube_conflicts_cone(const UnitCube& cube, const ConeRegion& region) {
  const Rational one(1);
  // Cheap reject: the cube never reaches past the supporting plane.
  if (region.rect.dir > 0) {
    if (cube.mn[region.rect.axis] + one <= region.rect.h) return false;
  } else {
    if (cube.mn[region.rect.axis] >= region.rect.h) return false;
  }
  // Cheap accept: a corner inside the region.
  for (int mask = 0; mask < 8; ++mask) {
    Pt3 corner{cube.mn.x + Rational(mask & 1), cube.mn.y + Rational((mask >> 1) & 1),
               cube.mn.z + Rational((mask >> 2) & 1)};
    if (cone_contains(region, corner)) return true;
  }

  // Full test: vertices of (cube ∩ closed cone) by plane-triple enumeration.
  std::vector<HalfSpace> planes;
  for (int a = 0; a < 3; ++a) {
    HalfSpace lo{Rational(0), Rational(0), Rational(0), Rational(0), false};
    HalfSpace hi = lo;
    (a == 0 ? lo.a : a == 1 ? lo.b : lo.c) = Rational(1);
    lo.d = -cube.mn[a];
    (a == 0 ? hi.a : a == 1 ? hi.b : hi.c) = Rational(-1);
    hi.d = cube.mn[a] + one;
    planes.push_back(lo);
    planes.push_back(hi);
  }
  for (const HalfSpace& h : region.halves) planes.push_back(h);

  std::vector<Pt3> verts;
  const int np = static_cast<int>(planes.size());
  for (int i = 0; i < np; ++i) {
    for (int j = i + 1; j < np; ++j) {
      for (int k = j + 1; k < np; ++k) {
        auto q = plane_triple_point(planes[i], planes[j], planes[k]);
        if (!q) continue;
        bool feasible = true;
        for (const HalfSpace& h : planes) {
          if (h.eval(*q).sign() < 0) {
            feasible = false;
            break;
          }
        }
        if (feasible) verts.push_back(*q);
      }
    }
  }
  if (verts.empty()) return false;

  // A point strictly inside every open side exists iff each open side is
  // strictly satisfiable over the closed intersection (average the
  // maximizers: all constraints are non-negative over the polytope).
  for (const HalfSpace& h : region.halves) {
    if (!h.strict) continue;
    bool positive = false;
    for (const Pt3& v : verts) {
      if (h.eval(v).sign() > 0) {
        positive = true;
        break;
      }
    }
    if (!positive) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// ClusterSystem

std::vector<Configuration> ClusterSystem::zero_regions(const IndexSet& hosts) const {
  std::vector<Configuration> out;
  if (hosts.empty()) {
    Configuration cfg;
    cfg.region = EverythingRegion{};
    out.push_back(std::move(cfg));
    return out;
  }
  auto rects = cluster_boundary_rects(*cubes_, apex_, hosts);
  out.reserve(rects.size());
  for (const BoundaryRect& r : rects) {
    Configuration cfg;
    cfg.defining = r.defining;
    cfg.region = cone_region(apex_, r);
    out.push_back(std::move(cfg));
  }
  return out;
}

bool ClusterSystem::conflicts(const Configuration& cfg, int cube) const {
  if (std::any_cast<EverythingRegion>(&cfg.region) != nullptr) return true;
  return cube_conflicts_cone((*cubes_)[cube],
                             std::any_cast<const ConeRegion&>(cfg.region));
}

std::optional<Configuration> ClusterSystem::locate(std::span<const Rational> point,
                                                   const IndexSet& hosts) const {
  assert(point.size() == 3);
  Pt3 q{point[0], point[1], point[2]};
  auto cfgs = zero_regions(hosts);
  for (const Configuration& cfg : cfgs) {
    if (std::any_cast<EverythingRegion>(&cfg.region) != nullptr) return cfg;
    if (cone_contains(std::any_cast<const ConeRegion&>(cfg.region), q)) return cfg;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

std::int64_t cube_depth(const std::vector<UnitCube>& cubes, const Pt3& q,
                        const WeightedFamily& weights) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < cubes.size(); ++i) {
    if (cubes[i].contains(q)) total += weights.weight(static_cast<int>(i));
  }
  return total;
}

IndexSet unit_cube_net(const std::vector<UnitCube>& cubes,
                       const WeightedFamily& family, const Rational& r,
                       SplitRng& rng, bool two_level, const NetParams& params) {
  if (r < Rational(1) || Rational(static_cast<long>(family.total_weight())) < r) {
    throw std::invalid_argument("unit_cube_net: r out of range");
  }
  const Rational w_total(static_cast<long>(family.total_weight()));
  auto clusters = grid_assign(cubes);
  IndexSet net;
  for (std::size_t ordinal = 0; ordinal < clusters.size(); ++ordinal) {
    const Cluster& cl = clusters[ordinal];
    FamilySubset view = FamilySubset::of(family, cl.members);
    const Rational w_p(static_cast<long>(view.total_weight()));
    // Only clusters heavy enough to matter: w_p >= W / (kGridConstant * r).
    if (w_p * Rational(kGridConstant) * r < w_total) continue;
    Rational r_p = Rational(kGridConstant) * r * w_p / w_total;
    SplitRng sub = rng.child(static_cast<std::uint64_t>(ordinal));
    ClusterSystem sys(cubes, cl.grid_point, cl.members);
    IndexSet part = net_clamped_subset(sys, view, r_p, sub, two_level, params);
    net = index_set_union(net, part);
  }
  return net;
}

FiniteCoverProblem cube_finite_problem(const std::vector<UnitCube>& cubes,
                                       const std::vector<Pt3>& points) {
  std::vector<std::string> labels;
  labels.reserve(points.size());
  for (const Pt3& p : points) {
    labels.push_back("point (" + p.x.str() + ", " + p.y.str() + ", " + p.z.str() +
                     ")");
  }
  return FiniteCoverProblem(
      static_cast<int>(cubes.size()), static_cast<int>(points.size()),
      [&](int o, int p) { return cubes[o].contains(points[p]); },
      std::move(labels));
}

CoverResult cube_cover(const std::vector<UnitCube>& cubes,
                       const std::vector<Pt3>& points, WeightedFamily& family,
                       SplitRng& rng, const NetParams& net_params,
                       const BgParams& bg_params) {
  FiniteCoverProblem problem = cube_finite_problem(cubes, points);
  IndexSet everyone(cubes.size());
  for (std::size_t i = 0; i < cubes.size(); ++i) everyone[i] = static_cast<int>(i);
  if (auto w = problem.uncovered_witness(everyone)) {
    throw InfeasibleError("cubes do not cover the demand", *w);
  }

  NetFn fn = [&cubes, &net_params](const WeightedFamily& fam, const Rational& r,
                                   SplitRng& stream) {
    Rational r_eff = min(r, Rational(static_cast<long>(fam.total_weight())));
    return unit_cube_net(cubes, fam, r_eff, stream, /*two_level=*/true, net_params);
  };
  return bg_cover(problem, family, fn, rng, bg_params);
}

// ---------------------------------------------------------------------------
// Exhaustive witness-grid net check

CubeNetCheck check_cube_net_exhaustive(const std::vector<UnitCube>& cubes,
                                       const WeightedFamily& family,
                                       const IndexSet& net, const Rational& r) {
  CubeNetCheck res;
  const int n = static_cast<int>(cubes.size());
  if (n == 0) return res;

  // Per-axis facet coordinates, ranked.
  std::vector<Rational> vals[3];
  for (int a = 0; a < 3; ++a) {
    vals[a].reserve(2 * n);
    for (const UnitCube& c : cubes) {
      vals[a].push_back(c.mn[a]);
      vals[a].push_back(c.mn[a] + Rational(1));
    }
    std::sort(vals[a].begin(), vals[a].end());
    vals[a].erase(std::unique(vals[a].begin(), vals[a].end()), vals[a].end());
  }
  auto rank = [&](int a, const Rational& v) {
    return static_cast<int>(std::lower_bound(vals[a].begin(), vals[a].end(), v) -
                            vals[a].begin());
  };
  // Expanded positions: even 2i = the coordinate vals[i], odd 2i+1 = the open
  // gap (vals[i], vals[i+1]). Cube [mn, mn+1] covers expanded [2 rank(mn),
  // 2 rank(mn+1)].
  int ecount[3];
  for (int a = 0; a < 3; ++a) ecount[a] = 2 * static_cast<int>(vals[a].size()) - 1;

  struct ERange {
    int lo[3], hi[3];
  };
  std::vector<ERange> ranges(n);
  for (int i = 0; i < n; ++i) {
    for (int a = 0; a < 3; ++a) {
      ranges[i].lo[a] = 2 * rank(a, cubes[i].mn[a]);
      ranges[i].hi[a] = 2 * rank(a, cubes[i].mn[a] + Rational(1));
    }
  }
  std::vector<bool> in_net(n, false);
  for (int i : net) in_net[i] = true;

  const std::int64_t w_total = family.total_weight();
  const mpz_class r_num = r.num(), r_den = r.den();
  // depth > W/r  <=>  depth * r_num > W * r_den
  const mpz_class rhs = mpz_class(static_cast<long>(w_total)) * r_den;

  const int ny = ecount[1], nz = ecount[2];
  std::vector<std::int64_t> depth(static_cast<std::size_t>(ny) * nz);
  std::vector<std::int64_t> covered(static_cast<std::size_t>(ny) * nz);

  for (int ex = 0; ex < ecount[0]; ++ex) {
    std::fill(depth.begin(), depth.end(), 0);
    std::fill(covered.begin(), covered.end(), 0);
    // 2D difference arrays over (y, z) for cubes covering this x position.
    for (int i = 0; i < n; ++i) {
      if (ex < ranges[i].lo[0] || ex > ranges[i].hi[0]) continue;
      const std::int64_t w = family.weight(i);
      const std::int64_t c = in_net[i] ? 1 : 0;
      const int ylo = ranges[i].lo[1], yhi = ranges[i].hi[1];
      const int zlo = ranges[i].lo[2], zhi = ranges[i].hi[2];
      auto bump = [&](int y, int z, std::int64_t dw, std::int64_t dc) {
        if (y >= ny || z >= nz) return;
        depth[static_cast<std::size_t>(y) * nz + z] += dw;
        covered[static_cast<std::size_t>(y) * nz + z] += dc;
      };
      bump(ylo, zlo, w, c);
      bump(yhi + 1, zlo, -w, -c);
      bump(ylo, zhi + 1, -w, -c);
      bump(yhi + 1, zhi + 1, w, c);
    }
    for (int y = 0; y < ny; ++y) {
      for (int z = 1; z < nz; ++z) {
        depth[static_cast<std::size_t>(y) * nz + z] +=
            depth[static_cast<std::size_t>(y) * nz + z - 1];
        covered[static_cast<std::size_t>(y) * nz + z] +=
            covered[static_cast<std::size_t>(y) * nz + z - 1];
      }
    }
    for (int z = 0; z < nz; ++z) {
      for (int y = 1; y < ny; ++y) {
        depth[static_cast<std::size_t>(y) * nz + z] +=
            depth[static_cast<std::size_t>(y - 1) * nz + z];
        covered[static_cast<std::size_t>(y) * nz + z] +=
            covered[static_cast<std::size_t>(y - 1) * nz + z];
      }
    }
    for (int y = 0; y < ny; ++y) {
      for (int z = 0; z < nz; ++z) {
        ++res.cells;
        const std::int64_t d = depth[static_cast<std::size_t>(y) * nz + z];
        if (d <= 0) continue;
        if (mpz_class(static_cast<long>(d)) * r_num <= rhs) continue;
        ++res.deep_cells;
        if (covered[static_cast<std::size_t>(y) * nz + z] == 0) {
          res.ok = false;
          if (!res.violation) {
            auto coord = [&](int a, int e) {
              if (e % 2 == 0) return vals[a][e / 2];
              return (vals[a][e / 2] + vals[a][e / 2 + 1]) / Rational(2);
            };
            res.violation = Pt3{coord(0, ex), coord(1, y), coord(2, z)};
          }
        }
      }
    }
  }
  return res;
}

}  // namespace geocover

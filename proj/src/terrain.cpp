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

#include "geocover/terrain.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

namespace geocover {

namespace {

// Appends a breakpoint, merging collinear extensions of the last piece.
void append_linear(PiecewiseLinear& f, const Rational& x, const Rational& y) {
  std::size_t n = f.xs.size();
  if (n >= 1 && f.xs.back() == x) {
    assert(f.ys.back() == y);
    return;
  }
  if (n >= 2) {
    Rational x0 = f.xs[n - 2], y0 = f.ys[n - 2];
    Rational x1 = f.xs[n - 1], y1 = f.ys[n - 1];
    if ((y - y1) * (x1 - x0) == (y1 - y0) * (x - x1)) {
      f.xs[n - 1] = x;
      f.ys[n - 1] = y;
      return;
    }
  }
  f.push_point(x, y);
}

}  // namespace

Rational Chain::height_at(const Rational& x) const {
  assert(x >= x_first() && x <= x_last());
  // Last vertex with verts[i].x <= x.
  int lo = 0, hi = vertex_count() - 1;
  while (hi - lo > 1) {
    int mid = (lo + hi) / 2;
    if (verts[mid].x <= x) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  if (x == verts[lo].x) return verts[lo].y;
  if (x == verts[hi].x) return verts[hi].y;
  return line_y_at(verts[lo], verts[hi], x);
}

void Chain::validate() const {
  if (vertex_count() < 2) {
    throw std::invalid_argument("chain needs at least 2 vertices");
  }
  for (int i = 1; i < vertex_count(); ++i) {
    if (!(verts[i - 1].x < verts[i].x)) {
      throw std::invalid_argument("non-monotone chain: x must strictly increase");
    }
  }
}

bool sees(const Chain& chain, const Pt2& g, const Pt2& p) {
  if (p.x < chain.x_first() || p.x > chain.x_last()) return false;
  if (p.y < chain.height_at(p.x)) return false;  // p itself dips below
  if (g.x == p.x) return true;
  const Pt2& a = g.x < p.x ? g : p;
  const Pt2& b = g.x < p.x ? p : g;
  for (const Pt2& v : chain.verts) {
    if (v.x <= a.x) continue;
    if (v.x >= b.x) break;
    if (line_y_at(a, b, v.x) < v.y) return false;
  }
  return true;
}

bool sees_left(const Chain& chain, const Pt2& g, const Pt2& p) {
  return g.x <= p.x && sees(chain, g, p);
}

PiecewiseLinear left_profile(const Chain& chain, const Pt2& g) {
  PiecewiseLinear f;
  f.push_point(g.x, g.y);
  if (g.x == chain.x_last()) return f;

  const auto& vs = chain.verts;
  const int n = chain.vertex_count();
  int j = 0;
  while (vs[j].x <= g.x) ++j;  // first vertex strictly right of g

  std::optional<Rational> blocker;  // steepest slope from g so far
  Rational cx = g.x, cy = g.y;
  for (int k = j; k < n; ++k) {
    const Pt2& b = vs[k];
    if (!blocker) {
      append_linear(f, b.x, b.y);
    } else {
      // max of the chain sub-edge and the blocking ray on [cx, b.x]
      Rational lc = g.y + *blocker * (cx - g.x);
      Rational lb = g.y + *blocker * (b.x - g.x);
      Rational dc = cy - lc, db = b.y - lb;
      int sc = dc.sign(), sb = db.sign();
      if (sc >= 0 && sb >= 0) {
        append_linear(f, b.x, b.y);
      } else if (sc <= 0 && sb <= 0) {
        append_linear(f, b.x, lb);
      } else {
        Rational w = cx + (b.x - cx) * dc / (dc - db);
        append_linear(f, w, g.y + *blocker * (w - g.x));
        if (sc > 0) {
          append_linear(f, b.x, lb);  // edge first, then the ray
        } else {
          append_linear(f, b.x, b.y);
        }
      }
    }
    Rational s = (b.y - g.y) / (b.x - g.x);
    if (!blocker || s >= *blocker) blocker = s;
    cx = b.x;
    cy = b.y;
  }
  return f;
}

std::vector<int> OwnershipDiagram::ownership_sequence() const {
  std::vector<int> seq;
  for (const DiagramPart& p : parts) {
    if (p.owner >= 0) seq.push_back(p.owner);
  }
  return seq;
}

const DiagramPart* OwnershipDiagram::part_at(const Rational& x) const {
  for (const DiagramPart& p : parts) {
    if (p.contains(x)) return &p;
  }
  return nullptr;
}

// ---------------------------------------------------------------------------
// Instance construction

TerrainInstance::TerrainInstance(Chain chain, std::vector<Pt2> guards)
    : chain_(std::move(chain)), guards_(std::move(guards)) {
  chain_.validate();
  mirrored_.verts.reserve(chain_.verts.size());
  for (auto it = chain_.verts.rbegin(); it != chain_.verts.rend(); ++it) {
    mirrored_.verts.push_back({-it->x, it->y});
  }

  std::set<Rational> seen_x;
  for (const Pt2& g : guards_) {
    if (g.x < chain_.x_first() || g.x > chain_.x_last() ||
        g.y != chain_.height_at(g.x)) {
      throw std::invalid_argument("guard not on the chain");
    }
    if (!seen_x.insert(g.x).second) {
      throw std::invalid_argument("duplicate guard position");
    }
    mirrored_guards_.push_back({-g.x, g.y});
  }

  const int m = guard_count();
  left_profiles_.reserve(m);
  right_profiles_.reserve(m);
  for (int i = 0; i < m; ++i) {
    left_profiles_.push_back(left_profile(chain_, guards_[i]));
    right_profiles_.push_back(left_profile(mirrored_, mirrored_guards_[i]));
  }

  // Visible chain intervals: where the profile meets the chain.
  auto equality_intervals = [](const Chain& c, const PiecewiseLinear& prof) {
    std::vector<std::pair<Rational, Rational>> out;
    if (prof.xs.size() == 1) {
      out.emplace_back(prof.xs[0], prof.xs[0]);  // the guard's own position
      return out;
    }
    std::vector<Rational> xs = prof.xs;
    for (const Pt2& v : c.verts) {
      if (v.x > prof.x_min() && v.x < prof.x_max()) xs.push_back(v.x);
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
      Rational du = prof.eval(xs[k]) - c.height_at(xs[k]);
      Rational dv = prof.eval(xs[k + 1]) - c.height_at(xs[k + 1]);
      if (du.sign() == 0 && dv.sign() == 0) {
        out.emplace_back(xs[k], xs[k + 1]);
      } else if (du.sign() == 0) {
        out.emplace_back(xs[k], xs[k]);
      } else if (dv.sign() == 0) {
        out.emplace_back(xs[k + 1], xs[k + 1]);
      }
    }
    // Merge touching intervals.
    std::vector<std::pair<Rational, Rational>> merged;
    for (auto& iv : out) {
      if (!merged.empty() && iv.first <= merged.back().second) {
        merged.back().second = max(merged.back().second, iv.second);
      } else {
        merged.push_back(iv);
      }
    }
    return merged;
  };

  visible_.resize(m);
  for (int i = 0; i < m; ++i) {
    auto left = equality_intervals(chain_, left_profiles_[i]);
    auto right_mirrored = equality_intervals(mirrored_, right_profiles_[i]);
    std::vector<std::pair<Rational, Rational>> right;
    for (auto it = right_mirrored.rbegin(); it != right_mirrored.rend(); ++it) {
      right.emplace_back(-it->second, -it->first);
    }
    std::vector<std::pair<Rational, Rational>> all;
    std::merge(left.begin(), left.end(), right.begin(), right.end(),
               std::back_inserter(all));
    for (auto& iv : all) {
      if (!visible_[i].empty() && iv.first <= visible_[i].back().second) {
        visible_[i].back().second = max(visible_[i].back().second, iv.second);
      } else {
        visible_[i].push_back(iv);
      }
    }
  }
}

bool TerrainInstance::guard_sees_from(Side s, int i, const Pt2& p) const {
  Pt2 q = to_side_frame(s, p);
  const Pt2& gp = side_guard(s, i);
  if (q.x < gp.x) return false;
  const PiecewiseLinear& prof = side_profile(s, i);
  if (q.x > prof.x_max()) return false;
  return q.y >= prof.eval(q.x);
}

// ---------------------------------------------------------------------------
// Ownership diagram: divide-and-conquer lower-envelope merge

namespace {

// Envelope piece: the winning guard and its profile restricted to [lo, hi].
// owner -1 marks the unowned prefix; its values are unused.
struct EnvPiece {
  Rational lo, hi;
  int owner;
  Rational ylo, yhi;
};
using Envelope = std::vector<EnvPiece>;

Rational piece_value(const EnvPiece& p, const Rational& x) {
  if (x == p.lo) return p.ylo;
  if (x == p.hi) return p.yhi;
  return p.ylo + (p.yhi - p.ylo) * (x - p.lo) / (p.hi - p.lo);
}

Envelope base_envelope(const TerrainInstance& inst, Side side, int guard,
                       const Rational& x0, const Rational& xn) {
  const PiecewiseLinear& prof = inst.side_profile(side, guard);
  Envelope e;
  if (prof.x_min() > x0) e.push_back({x0, prof.x_min(), -1, 0, 0});
  for (std::size_t i = 0; i + 1 < prof.xs.size(); ++i) {
    e.push_back({prof.xs[i], prof.xs[i + 1], guard, prof.ys[i], prof.ys[i + 1]});
  }
  if (e.empty()) e.push_back({x0, xn, -1, 0, 0});  // guard at the far end
  return e;
}

Envelope merge_envelopes(const Envelope& a, const Envelope& b,
                         const TerrainInstance& inst, Side side) {
  auto guard_x = [&](int g) -> const Rational& {
    return inst.side_guard(side, g).x;
  };
  Envelope out;
  auto emit = [&out](const Rational& lo, const Rational& hi, int owner,
                     const Rational& ylo, const Rational& yhi) {
    out.push_back({lo, hi, owner, ylo, yhi});
  };

  std::size_t ia = 0, ib = 0;
  Rational cur = a.front().lo;
  const Rational end = a.back().hi;
  while (cur < end) {
    while (a[ia].hi <= cur) ++ia;
    while (b[ib].hi <= cur) ++ib;
    const EnvPiece& pa = a[ia];
    const EnvPiece& pb = b[ib];
    Rational nxt = min(pa.hi, pb.hi);
    if (pa.owner < 0 && pb.owner < 0) {
      emit(cur, nxt, -1, 0, 0);
    } else if (pa.owner < 0) {
      emit(cur, nxt, pb.owner, piece_value(pb, cur), piece_value(pb, nxt));
    } else if (pb.owner < 0) {
      emit(cur, nxt, pa.owner, piece_value(pa, cur), piece_value(pa, nxt));
    } else {
      Rational au = piece_value(pa, cur), av = piece_value(pa, nxt);
      Rational bu = piece_value(pb, cur), bv = piece_value(pb, nxt);
      Rational du = au - bu, dv = av - bv;
      int su = du.sign(), sv = dv.sign();
      if (su == 0 && sv == 0) {
        bool a_wins = guard_x(pa.owner) < guard_x(pb.owner);
        emit(cur, nxt, a_wins ? pa.owner : pb.owner, au, av);
      } else if (su <= 0 && sv <= 0) {
        emit(cur, nxt, pa.owner, au, av);
      } else if (su >= 0 && sv >= 0) {
        emit(cur, nxt, pb.owner, bu, bv);
      } else {
        Rational w = cur + (nxt - cur) * du / (du - dv);
        Rational yw = au + (av - au) * (w - cur) / (nxt - cur);
        if (su < 0) {
          emit(cur, w, pa.owner, au, yw);
          emit(w, nxt, pb.owner, yw, bv);
        } else {
          emit(cur, w, pb.owner, bu, yw);
          emit(w, nxt, pa.owner, yw, av);
        }
      }
    }
    cur = nxt;
  }
  return out;
}

Envelope build_envelope(const TerrainInstance& inst, Side side,
                        const IndexSet& hosts, int lo, int hi, const Rational& x0,
                        const Rational& xn) {
  if (hi - lo == 1) return base_envelope(inst, side, hosts[lo], x0, xn);
  int mid = (lo + hi) / 2;
  Envelope a = build_envelope(inst, side, hosts, lo, mid, x0, xn);
  Envelope b = build_envelope(inst, side, hosts, mid, hi, x0, xn);
  return merge_envelopes(a, b, inst, side);
}

}  // namespace

OwnershipDiagram ownership_diagram(const TerrainInstance& inst, const IndexSet& hosts,
                                   Side side) {
  const Chain& chain = inst.side_chain(side);
  const Rational& x0 = chain.x_first();
  const Rational& xn = chain.x_last();
  OwnershipDiagram d;
  if (hosts.empty()) {
    d.parts.push_back({x0, xn, true, true, -1});
    return d;
  }

  Envelope env = build_envelope(inst, side, hosts, 0,
                                static_cast<int>(hosts.size()), x0, xn);

  // Group pieces into maximal same-owner runs.
  struct Run {
    std::size_t first, last;
  };
  std::vector<Run> runs;
  for (std::size_t i = 0; i < env.size(); ++i) {
    if (runs.empty() || env[runs.back().first].owner != env[i].owner) {
      runs.push_back({i, i});
    } else {
      runs.back().last = i;
    }
  }

  d.parts.resize(runs.size());
  for (std::size_t k = 0; k < runs.size(); ++k) {
    d.parts[k].lo = env[runs[k].first].lo;
    d.parts[k].hi = env[runs[k].last].hi;
    d.parts[k].owner = env[runs[k].first].owner;
    d.parts[k].lo_closed = d.parts[k].hi_closed = true;
  }

  // Resolve breakpoint ownership between adjacent runs.
  for (std::size_t k = 0; k + 1 < runs.size(); ++k) {
    int ol = d.parts[k].owner, orr = d.parts[k + 1].owner;
    bool left_wins;
    if (ol < 0) {
      left_wins = false;
    } else if (orr < 0) {
      left_wins = true;
    } else {
      const Rational& vl = env[runs[k].last].yhi;
      const Rational& vr = env[runs[k + 1].first].ylo;
      left_wins = vl < vr || (vl == vr && inst.side_guard(side, ol).x <
                                              inst.side_guard(side, orr).x);
    }
    d.parts[k].hi_closed = left_wins;
    d.parts[k + 1].lo_closed = !left_wins;
  }

  // The right end: a guard standing at the last vertex competes only there.
  int best = -1;
  Rational best_v;
  for (int g : hosts) {
    Rational v = inst.side_profile(side, g).eval(xn);
    if (best < 0 || v < best_v ||
        (v == best_v &&
         inst.side_guard(side, g).x < inst.side_guard(side, best).x)) {
      best = g;
      best_v = v;
    }
  }
  if (best >= 0 && best != d.parts.back().owner) {
    d.parts.back().hi_closed = false;
    d.parts.push_back({xn, xn, true, true, best});
  }
  return d;
}

// ---------------------------------------------------------------------------
// Guarding configuration system

namespace {

bool region_contains_x(const TerrainRegion& r, const Rational& x) {
  if (x < r.lo || x > r.hi) return false;
  if (x == r.lo && !r.lo_closed) return false;
  if (x == r.hi && !r.hi_closed) return false;
  return true;
}

// Whether d takes ownership from the owner somewhere inside the region's
// interval: d's profile is lexicographically below the owner's at some
// coordinate of the interval.
bool beats_inside(const TerrainInstance& inst, const TerrainRegion& reg, int d) {
  const Side side = reg.side;
  const Rational& dx = inst.side_guard(side, d).x;
  const PiecewiseLinear& dp = inst.side_profile(side, d);

  if (reg.owner < 0) {
    // Unowned interval: d owns every coordinate it can see at all.
    if (dx < reg.hi) return true;
    return dx == reg.hi && reg.hi_closed;
  }
  const Rational& bx = inst.side_guard(side, reg.owner).x;
  const PiecewiseLinear& bp = inst.side_profile(side, reg.owner);
  const bool d_precedes = dx < bx;

  Rational lo = max(reg.lo, dx);
  if (lo > reg.hi) return false;
  if (lo == reg.hi) {
    if (!(reg.hi_closed && (reg.hi > reg.lo || reg.lo_closed))) return false;
    Rational vd = dp.eval(lo), vb = bp.eval(lo);
    return vd < vb || (vd == vb && d_precedes);
  }

  std::vector<Rational> xs;
  xs.push_back(lo);
  for (const Rational& x : dp.xs) {
    if (x > lo && x < reg.hi) xs.push_back(x);
  }
  for (const Rational& x : bp.xs) {
    if (x > lo && x < reg.hi) xs.push_back(x);
  }
  xs.push_back(reg.hi);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
    Rational du = dp.eval(xs[k]) - bp.eval(xs[k]);
    Rational dv = dp.eval(xs[k + 1]) - bp.eval(xs[k + 1]);
    int su = du.sign(), sv = dv.sign();
    if (su < 0 || sv < 0) return true;
    if (su == 0 && sv == 0) {
      if (d_precedes) return true;
    } else if (su == 0) {
      if (d_precedes && region_contains_x(reg, xs[k])) return true;
    } else if (sv == 0) {
      if (d_precedes && region_contains_x(reg, xs[k + 1])) return true;
    }
  }
  return false;
}

// Owner of the coordinates immediately left of x among the candidate guards:
// lexicographically least (height at x, -slope from the left, guard x).
int germ_owner_left(const TerrainInstance& inst, Side side, const Rational& x,
                    const IndexSet& candidates) {
  int best = -1;
  Rational bv, bs, bx;
  for (int g : candidates) {
    const Rational& gx = inst.side_guard(side, g).x;
    if (!(gx < x)) continue;
    const PiecewiseLinear& prof = inst.side_profile(side, g);
    Rational v = prof.eval(x);
    Rational s = prof.slope_left(x);
    if (best < 0 || v < bv || (v == bv && (s > bs || (s == bs && gx < bx)))) {
      best = g;
      bv = v;
      bs = s;
      bx = gx;
    }
  }
  return best;
}

// Owner immediately right of x: least (height at x, slope to the right, guard x).
int germ_owner_right(const TerrainInstance& inst, Side side, const Rational& x,
                     const IndexSet& candidates) {
  int best = -1;
  Rational bv, bs, bx;
  for (int g : candidates) {
    const Rational& gx = inst.side_guard(side, g).x;
    if (!(gx <= x)) continue;
    const PiecewiseLinear& prof = inst.side_profile(side, g);
    Rational v = prof.eval(x);
    Rational s = prof.xs.size() == 1 ? Rational(0) : prof.slope_right(x);
    if (best < 0 || v < bv || (v == bv && (s < bs || (s == bs && gx < bx)))) {
      best = g;
      bv = v;
      bs = s;
      bx = gx;
    }
  }
  return best;
}

}  // namespace

bool guard_conflict(const TerrainInstance& inst, const TerrainRegion& reg, int d) {
  if (d == reg.owner || d == reg.left_nb || d == reg.right_nb) return false;
  if (beats_inside(inst, reg, d)) return true;

  // Displacing a neighbor: d owns coordinates immediately outside the
  // interval, relative to the defining guards plus d. A displaced unowned
  // neighbor counts as a conflict as well.
  const Side side = reg.side;
  const Chain& chain = inst.side_chain(side);
  IndexSet cands;
  for (int g : {reg.owner, reg.left_nb, reg.right_nb}) {
    if (g >= 0) cands.push_back(g);
  }
  cands.push_back(d);
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());

  if (reg.lo > chain.x_first() &&
      germ_owner_left(inst, side, reg.lo, cands) == d) {
    return true;
  }
  if (reg.hi < chain.x_last() &&
      germ_owner_right(inst, side, reg.hi, cands) == d) {
    return true;
  }
  return false;
}

std::vector<Configuration> GuardSystem::zero_regions(const IndexSet& hosts) const {
  OwnershipDiagram d = ownership_diagram(*inst_, hosts, side_);
  std::vector<Configuration> out;
  out.reserve(d.parts.size());
  const int np = static_cast<int>(d.parts.size());
  for (int k = 0; k < np; ++k) {
    const DiagramPart& p = d.parts[k];
    TerrainRegion reg;
    reg.lo = p.lo;
    reg.hi = p.hi;
    reg.lo_closed = p.lo_closed;
    reg.hi_closed = p.hi_closed;
    reg.owner = p.owner;
    reg.left_nb = k > 0 ? d.parts[k - 1].owner : -2;
    reg.right_nb = k + 1 < np ? d.parts[k + 1].owner : -2;
    reg.side = side_;

    Configuration cfg;
    for (int g : {reg.owner, reg.left_nb, reg.right_nb}) {
      if (g >= 0) cfg.defining.push_back(g);
    }
    std::sort(cfg.defining.begin(), cfg.defining.end());
    cfg.defining.erase(std::unique(cfg.defining.begin(), cfg.defining.end()),
                       cfg.defining.end());
    cfg.region = reg;
    out.push_back(std::move(cfg));
  }
  return out;
}

bool GuardSystem::conflicts(const Configuration& cfg, int guard) const {
  if (index_set_contains(cfg.defining, guard)) return false;
  return guard_conflict(*inst_, std::any_cast<const TerrainRegion&>(cfg.region),
                        guard);
}

std::optional<Configuration> GuardSystem::locate(std::span<const Rational> point,
                                                 const IndexSet& hosts) const {
  assert(point.size() == 2);
  Pt2 q = inst_->to_side_frame(side_, Pt2{point[0], point[1]});
  auto cfgs = zero_regions(hosts);
  for (const Configuration& cfg : cfgs) {
    const auto& reg = std::any_cast<const TerrainRegion&>(cfg.region);
    if (!region_contains_x(reg, q.x)) continue;
    if (reg.owner < 0) return cfg;
    if (q.y < inst_->side_profile(side_, reg.owner).eval(q.x)) return cfg;
    return std::nullopt;  // covered from this side
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Depth, chain coverage, covers

std::int64_t side_depth(const TerrainInstance& inst, Side side, const Pt2& p,
                        const WeightedFamily& weights) {
  std::int64_t total = 0;
  for (int i = 0; i < inst.guard_count(); ++i) {
    if (inst.guard_sees_from(side, i, p)) total += weights.weight(i);
  }
  return total;
}

std::int64_t guard_depth(const TerrainInstance& inst, const Pt2& p,
                         const WeightedFamily& weights) {
  std::int64_t total = 0;
  for (int i = 0; i < inst.guard_count(); ++i) {
    if (inst.guard_sees(i, p)) total += weights.weight(i);
  }
  return total;
}

std::optional<Rational> uncovered_chain_x(const TerrainInstance& inst,
                                          const IndexSet& chosen) {
  const Rational& x0 = inst.chain().x_first();
  const Rational& xn = inst.chain().x_last();

  std::vector<std::pair<Rational, Rational>> ivs;
  for (int i : chosen) {
    const auto& v = inst.visible_intervals(i);
    ivs.insert(ivs.end(), v.begin(), v.end());
  }
  std::sort(ivs.begin(), ivs.end());

  if (ivs.empty() || ivs.front().first > x0) return x0;
  Rational reach = ivs.front().second;
  for (std::size_t k = 1; k < ivs.size(); ++k) {
    if (ivs[k].first > reach) {
      return (reach + ivs[k].first) / Rational(2);  // inside the open gap
    }
    reach = max(reach, ivs[k].second);
  }
  if (reach < xn) return (reach + xn) / Rational(2);
  return std::nullopt;
}

namespace {

bool visible_set_contains(const TerrainInstance& inst, int guard, const Rational& x) {
  for (const auto& iv : inst.visible_intervals(guard)) {
    if (x < iv.first) return false;
    if (x <= iv.second) return true;
  }
  return false;
}

}  // namespace

std::optional<CoverWitness> TerrainCoverProblem::uncovered_witness(
    const IndexSet& chosen) const {
  auto x = uncovered_chain_x(*inst_, chosen);
  if (!x) return std::nullopt;
  CoverWitness w;
  for (int i = 0; i < inst_->guard_count(); ++i) {
    if (visible_set_contains(*inst_, i, *x)) w.containing.push_back(i);
  }
  w.where = "chain point x=" + x->str();
  return w;
}

std::vector<Pt2> chain_witness_points(const TerrainInstance& inst) {
  std::vector<Rational> xs;
  xs.push_back(inst.chain().x_first());
  xs.push_back(inst.chain().x_last());
  for (int i = 0; i < inst.guard_count(); ++i) {
    for (const auto& iv : inst.visible_intervals(i)) {
      xs.push_back(iv.first);
      xs.push_back(iv.second);
    }
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  std::vector<Pt2> pts;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    pts.push_back({xs[k], inst.chain().height_at(xs[k])});
    if (k + 1 < xs.size()) {
      Rational mid = (xs[k] + xs[k + 1]) / Rational(2);
      pts.push_back({mid, inst.chain().height_at(mid)});
    }
  }
  return pts;
}

FiniteCoverProblem terrain_finite_problem(const TerrainInstance& inst) {
  std::vector<Pt2> pts = chain_witness_points(inst);
  std::vector<std::string> labels;
  labels.reserve(pts.size());
  for (const Pt2& p : pts) labels.push_back("chain point x=" + p.x.str());
  return FiniteCoverProblem(
      inst.guard_count(), static_cast<int>(pts.size()),
      [&](int g, int p) { return visible_set_contains(inst, g, pts[p].x); },
      std::move(labels));
}

IndexSet terrain_net(const TerrainInstance& inst, const WeightedFamily& family,
                     const Rational& r, SplitRng& rng, bool two_level,
                     const NetParams& params) {
  Rational r2 = r * Rational(2);  // a 1/2r-net per side gives a 1/r-net overall
  GuardSystem left(inst, Side::kLeft);
  GuardSystem right(inst, Side::kRight);
  IndexSet a = net_clamped(left, family, r2, rng, two_level, params);
  IndexSet b = net_clamped(right, family, r2, rng, two_level, params);
  return index_set_union(a, b);
}

CoverResult guard_cover(const TerrainInstance& inst, WeightedFamily& family,
                        SplitRng& rng, const NetParams& net_params,
                        const BgParams& bg_params) {
  IndexSet everyone(inst.guard_count());
  for (int i = 0; i < inst.guard_count(); ++i) everyone[i] = i;
  if (auto gap = uncovered_chain_x(inst, everyone)) {
    CoverWitness w;
    w.where = "chain point x=" + gap->str();
    throw InfeasibleError("guards do not see the whole chain", std::move(w));
  }

  TerrainCoverProblem problem(inst);
  NetFn fn = [&inst, &net_params](const WeightedFamily& fam, const Rational& r,
                                  SplitRng& stream) {
    return terrain_net(inst, fam, r, stream, /*two_level=*/true, net_params);
  };
  return bg_cover(problem, family, fn, rng, bg_params);
}

}  // namespace geocover

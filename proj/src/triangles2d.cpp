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

#include "geocover/triangles2d.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace geocover {

void Triangle::normalize() {
  int o = orient2d(a, b, c);
  if (o == 0) throw std::invalid_argument("degenerate triangle");
  if (o < 0) std::swap(b, c);
}

bool triangle_contains(const Triangle& t, const Pt2& p) {
  return orient2d(t.a, t.b, p) >= 0 && orient2d(t.b, t.c, p) >= 0 &&
         orient2d(t.c, t.a, p) >= 0;
}

Frame default_frame(const std::vector<Triangle>& tris, const std::vector<Pt2>& points) {
  Frame f{0, 0, 0, 0};
  bool first = true;
  auto grow = [&](const Pt2& p) {
    if (first) {
      f = {p.x, p.x, p.y, p.y};
      first = false;
    } else {
      f.x_lo = min(f.x_lo, p.x);
      f.x_hi = max(f.x_hi, p.x);
      f.y_lo = min(f.y_lo, p.y);
      f.y_hi = max(f.y_hi, p.y);
    }
  };
  for (const Triangle& t : tris) {
    for (int k = 0; k < 3; ++k) grow(t.vertex(k));
  }
  for (const Pt2& p : points) grow(p);
  f.x_lo -= Rational(1);
  f.x_hi += Rational(1);
  f.y_lo -= Rational(1);
  f.y_hi += Rational(1);
  return f;
}

bool Trapezoid::contains(const Pt2& p) const {
  if (p.x < x_lo || p.x > x_hi) return false;
  Rational bot, top;
  if (p.x == x_lo) {
    bot = y_bot_lo;
    top = y_top_lo;
  } else if (p.x == x_hi) {
    bot = y_bot_hi;
    top = y_top_hi;
  } else {
    Rational t = (p.x - x_lo) / (x_hi - x_lo);
    bot = y_bot_lo + (y_bot_hi - y_bot_lo) * t;
    top = y_top_lo + (y_top_hi - y_top_lo) * t;
  }
  return p.y >= bot && p.y <= top;
}

std::vector<Pt2> Trapezoid::corners() const {
  std::vector<Pt2> c{{x_lo, y_bot_lo}, {x_hi, y_bot_hi}, {x_hi, y_top_hi},
                     {x_lo, y_top_lo}};
  std::vector<Pt2> out;
  for (const Pt2& p : c) {
    if (out.empty() || !(out.back() == p)) out.push_back(p);
  }
  if (out.size() > 1 && out.front() == out.back()) out.pop_back();
  return out;
}

namespace {

struct Edge {
  Pt2 p, q;  // p.x < q.x (no vertical edges in validated input)
  int tri;
};

std::vector<Edge> triangle_edges(const std::vector<Triangle>& tris,
                                 const IndexSet& hosts) {
  std::vector<Edge> edges;
  edges.reserve(hosts.size() * 3);
  for (int i : hosts) {
    const Triangle& t = tris[i];
    for (int k = 0; k < 3; ++k) {
      Pt2 a = t.vertex(k), b = t.vertex((k + 1) % 3);
      if (a.x > b.x) std::swap(a, b);
      edges.push_back({a, b, i});
    }
  }
  return edges;
}

// Proper interior crossing of two segments known to share no endpoint and to
// have no endpoint on the other segment.
std::optional<Pt2> proper_crossing(const Pt2& a, const Pt2& b, const Pt2& c,
                                   const Pt2& d) {
  Rational o1 = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  Rational o2 = (b.x - a.x) * (d.y - a.y) - (b.y - a.y) * (d.x - a.x);
  Rational o3 = (d.x - c.x) * (a.y - c.y) - (d.y - c.y) * (a.x - c.x);
  Rational o4 = (d.x - c.x) * (b.y - c.y) - (d.y - c.y) * (b.x - c.x);
  if (o1.sign() * o2.sign() >= 0 || o3.sign() * o4.sign() >= 0) return std::nullopt;
  Rational t = o3 / (o3 - o4);
  return Pt2{a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t};
}

bool on_segment(const Pt2& a, const Pt2& b, const Pt2& p) {
  if (orient2d(a, b, p) != 0) return false;
  return min(a.x, b.x) <= p.x && p.x <= max(a.x, b.x) &&
         min(a.y, b.y) <= p.y && p.y <= max(a.y, b.y);
}

}  // namespace

void validate_general_position(const std::vector<Triangle>& tris) {
  const int n = static_cast<int>(tris.size());
  for (const Triangle& t : tris) {
    if (orient2d(t.a, t.b, t.c) <= 0) {
      throw std::invalid_argument("triangle not counterclockwise or degenerate");
    }
  }
  // Vertex collisions and vertices on foreign edges.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      for (int k = 0; k < 3; ++k) {
        const Pt2& v = tris[i].vertex(k);
        for (int e = 0; e < 3; ++e) {
          const Pt2& a = tris[j].vertex(e);
          const Pt2& b = tris[j].vertex((e + 1) % 3);
          if (v == a || v == b) {
            throw std::invalid_argument("shared vertex across triangles");
          }
          if (on_segment(a, b, v)) {
            throw std::invalid_argument("vertex on another triangle's edge");
          }
        }
      }
    }
  }
  // Distinct x coordinates of all arrangement vertices.
  std::vector<Rational> xs;
  for (const Triangle& t : tris) {
    for (int k = 0; k < 3; ++k) xs.push_back(t.vertex(k).x);
  }
  IndexSet everyone(n);
  for (int i = 0; i < n; ++i) everyone[i] = i;
  auto edges = triangle_edges(tris, everyone);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (edges[i].tri == edges[j].tri) continue;
      if (auto c = proper_crossing(edges[i].p, edges[i].q, edges[j].p, edges[j].q)) {
        xs.push_back(c->x);
      }
    }
  }
  std::sort(xs.begin(), xs.end());
  for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
    if (xs[k] == xs[k + 1]) {
      throw std::invalid_argument(
          "duplicate x-coordinate among arrangement vertices");
    }
  }
}

namespace {

// Shared slab walk; crossing_events carries the pairwise edge crossings among
// the host triangles (vertex and frame events are added here).
TrapDecomp decompose_slabs(const std::vector<Triangle>& tris, const IndexSet& hosts,
                           const Frame& frame,
                           std::vector<std::pair<Rational, int>> events) {
  TrapDecomp out;
  out.frame = frame;

  events.emplace_back(frame.x_lo, -1);
  events.emplace_back(frame.x_hi, -1);
  for (int i : hosts) {
    for (int k = 0; k < 3; ++k) events.emplace_back(tris[i].vertex(k).x, i);
  }
  auto edges = triangle_edges(tris, hosts);
  std::sort(events.begin(), events.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  for (std::size_t s = 0; s + 1 < events.size(); ++s) {
    const Rational& lo = events[s].first;
    const Rational& hi = events[s + 1].first;
    if (!(lo < hi)) continue;
    Rational mid = (lo + hi) / Rational(2);

    struct Crossed {
      Rational y_mid, y_lo, y_hi;
      int tri;
    };
    std::vector<Crossed> crossed;
    for (const Edge& e : edges) {
      if (e.p.x <= lo && e.q.x >= hi) {
        crossed.push_back({line_y_at(e.p, e.q, mid), line_y_at(e.p, e.q, lo),
                           line_y_at(e.p, e.q, hi), e.tri});
      }
    }
    std::sort(crossed.begin(), crossed.end(),
              [](const Crossed& a, const Crossed& b) { return a.y_mid < b.y_mid; });

    // Cells between consecutive boundaries (frame bottom, edges..., frame top).
    const int cells = static_cast<int>(crossed.size()) + 1;
    for (int c = 0; c < cells; ++c) {
      Rational bot_mid = c == 0 ? frame.y_lo : crossed[c - 1].y_mid;
      Rational top_mid = c == cells - 1 ? frame.y_hi : crossed[c].y_mid;
      Pt2 rep{mid, (bot_mid + top_mid) / Rational(2)};
      bool inside = false;
      for (int i : hosts) {
        if (triangle_contains(tris[i], rep)) {
          inside = true;
          break;
        }
      }
      if (inside) continue;

      Trapezoid t;
      t.x_lo = lo;
      t.x_hi = hi;
      if (c == 0) {
        t.y_bot_lo = t.y_bot_hi = frame.y_lo;
        t.bot_tri = -1;
      } else {
        t.y_bot_lo = crossed[c - 1].y_lo;
        t.y_bot_hi = crossed[c - 1].y_hi;
        t.bot_tri = crossed[c - 1].tri;
      }
      if (c == cells - 1) {
        t.y_top_lo = t.y_top_hi = frame.y_hi;
        t.top_tri = -1;
      } else {
        t.y_top_lo = crossed[c].y_lo;
        t.y_top_hi = crossed[c].y_hi;
        t.top_tri = crossed[c].tri;
      }
      for (int g : {t.bot_tri, t.top_tri, events[s].second, events[s + 1].second}) {
        if (g >= 0) t.defining.push_back(g);
      }
      std::sort(t.defining.begin(), t.defining.end());
      t.defining.erase(std::unique(t.defining.begin(), t.defining.end()),
                       t.defining.end());
      out.traps.push_back(std::move(t));
    }
  }
  return out;
}

}  // namespace

TrapDecomp complement_trapezoids(const std::vector<Triangle>& tris,
                                 const IndexSet& hosts, const Frame& frame) {
  std::vector<std::pair<Rational, int>> crossing_events;
  auto edges = triangle_edges(tris, hosts);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (edges[i].tri == edges[j].tri) continue;
      if (auto c = proper_crossing(edges[i].p, edges[i].q, edges[j].p, edges[j].q)) {
        crossing_events.emplace_back(c->x, std::min(edges[i].tri, edges[j].tri));
      }
    }
  }
  return decompose_slabs(tris, hosts, frame, std::move(crossing_events));
}

namespace {

Rational polygon_area2(const std::vector<Pt2>& poly) {
  Rational a(0);
  const int n = static_cast<int>(poly.size());
  for (int i = 0; i < n; ++i) {
    const Pt2& p = poly[i];
    const Pt2& q = poly[(i + 1) % n];
    a += p.x * q.y - q.x * p.y;
  }
  return a;
}

// Keeps the part of poly on the left of directed line a->b.
std::vector<Pt2> clip_halfplane(const std::vector<Pt2>& poly, const Pt2& a,
                                const Pt2& b) {
  std::vector<Pt2> out;
  const int n = static_cast<int>(poly.size());
  for (int i = 0; i < n; ++i) {
    const Pt2& p = poly[i];
    const Pt2& q = poly[(i + 1) % n];
    Rational sp = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x);
    Rational sq = (b.x - a.x) * (q.y - a.y) - (b.y - a.y) * (q.x - a.x);
    if (sp.sign() >= 0) out.push_back(p);
    if (sp.sign() * sq.sign() < 0) {
      Rational t = sp / (sp - sq);
      out.push_back({p.x + (q.x - p.x) * t, p.y + (q.y - p.y) * t});
    }
  }
  return out;
}

}  // namespace

bool triangle_conflicts_trap(const Triangle& t, const Trapezoid& trap) {
  std::vector<Pt2> poly = trap.corners();
  if (poly.size() < 3) return false;
  for (int k = 0; k < 3 && poly.size() >= 3; ++k) {
    poly = clip_halfplane(poly, t.vertex(k), t.vertex((k + 1) % 3));
  }
  if (poly.size() < 3) return false;
  return polygon_area2(poly).sign() != 0;
}

// ---------------------------------------------------------------------------
// TriangleSystem

TriangleSystem::TriangleSystem(const std::vector<Triangle>& tris, Frame frame)
    : tris_(&tris), frame_(frame) {
  const int n = static_cast<int>(tris.size());
  IndexSet everyone(n);
  for (int i = 0; i < n; ++i) everyone[i] = i;
  auto edges = triangle_edges(tris, everyone);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (edges[i].tri == edges[j].tri) continue;
      if (auto c = proper_crossing(edges[i].p, edges[i].q, edges[j].p, edges[j].q)) {
        crossings_.push_back({c->x, std::min(edges[i].tri, edges[j].tri),
                              std::max(edges[i].tri, edges[j].tri)});
      }
    }
  }
  boxes_.reserve(n);
  for (const Triangle& t : tris) {
    BBox b{t.a.x, t.a.x, t.a.y, t.a.y};
    for (int k = 1; k < 3; ++k) {
      b.x_lo = min(b.x_lo, t.vertex(k).x);
      b.x_hi = max(b.x_hi, t.vertex(k).x);
      b.y_lo = min(b.y_lo, t.vertex(k).y);
      b.y_hi = max(b.y_hi, t.vertex(k).y);
    }
    boxes_.push_back(std::move(b));
  }
}

TrapDecomp TriangleSystem::decompose(const IndexSet& hosts) const {
  std::vector<bool> in_hosts(tris_->size(), false);
  for (int i : hosts) in_hosts[i] = true;
  std::vector<std::pair<Rational, int>> crossing_events;
  for (const Crossing& c : crossings_) {
    if (in_hosts[c.tri_a] && in_hosts[c.tri_b]) {
      crossing_events.emplace_back(c.x, c.tri_a);
    }
  }
  return decompose_slabs(*tris_, hosts, frame_, std::move(crossing_events));
}

std::vector<Configuration> TriangleSystem::zero_regions(const IndexSet& hosts) const {
  TrapDecomp d = decompose(hosts);
  std::vector<Configuration> out;
  out.reserve(d.traps.size());
  for (Trapezoid& t : d.traps) {
    Configuration cfg;
    cfg.defining = t.defining;
    cfg.region = std::move(t);
    out.push_back(std::move(cfg));
  }
  return out;
}

bool TriangleSystem::conflicts(const Configuration& cfg, int tri) const {
  const auto& trap = std::any_cast<const Trapezoid&>(cfg.region);
  const BBox& b = boxes_[tri];
  if (b.x_hi <= trap.x_lo || b.x_lo >= trap.x_hi) return false;
  Rational trap_y_lo = min(trap.y_bot_lo, trap.y_bot_hi);
  Rational trap_y_hi = max(trap.y_top_lo, trap.y_top_hi);
  if (b.y_hi <= trap_y_lo || b.y_lo >= trap_y_hi) return false;
  return triangle_conflicts_trap((*tris_)[tri], trap);
}

std::optional<Configuration> TriangleSystem::locate(std::span<const Rational> point,
                                                    const IndexSet& hosts) const {
  assert(point.size() == 2);
  Pt2 p{point[0], point[1]};
  auto cfgs = zero_regions(hosts);
  for (const Configuration& cfg : cfgs) {
    if (std::any_cast<const Trapezoid&>(cfg.region).contains(p)) return cfg;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

std::int64_t triangle_depth(const std::vector<Triangle>& tris, const Pt2& p,
                            const WeightedFamily& weights) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < tris.size(); ++i) {
    if (triangle_contains(tris[i], p)) total += weights.weight(static_cast<int>(i));
  }
  return total;
}

IndexSet triangle_net(const TriangleSystem& sys, const WeightedFamily& family,
                      const Rational& r, SplitRng& rng, bool two_level,
                      const NetParams& params) {
  return net_clamped(sys, family, r, rng, two_level, params);
}

FiniteCoverProblem triangle_finite_problem(const std::vector<Triangle>& tris,
                                           const std::vector<Pt2>& points) {
  std::vector<std::string> labels;
  labels.reserve(points.size());
  for (const Pt2& p : points) {
    labels.push_back("point (" + p.x.str() + ", " + p.y.str() + ")");
  }
  return FiniteCoverProblem(
      static_cast<int>(tris.size()), static_cast<int>(points.size()),
      [&](int o, int p) { return triangle_contains(tris[o], points[p]); },
      std::move(labels));
}

CoverResult triangle_cover(const std::vector<Triangle>& tris,
                           const std::vector<Pt2>& points, WeightedFamily& family,
                           SplitRng& rng, const NetParams& net_params,
                           const BgParams& bg_params) {
  FiniteCoverProblem problem = triangle_finite_problem(tris, points);
  IndexSet everyone(tris.size());
  for (std::size_t i = 0; i < tris.size(); ++i) everyone[i] = static_cast<int>(i);
  if (auto w = problem.uncovered_witness(everyone)) {
    throw InfeasibleError("triangles do not cover the demand", *w);
  }

  TriangleSystem sys(tris, default_frame(tris, points));
  NetFn fn = [&sys, &net_params](const WeightedFamily& fam, const Rational& r,
                                 SplitRng& stream) {
    return net_clamped(sys, fam, r, stream, /*two_level=*/true, net_params);
  };
  return bg_cover(problem, family, fn, rng, bg_params);
}

}  // namespace geocover

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

#include "geocover/instance.hpp"

#include <algorithm>
#include <sstream>

namespace geocover {

namespace {

std::vector<std::string> tokens_of(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) {
    line = line.substr(0, hash);
  }
  std::vector<std::string> toks;
  std::istringstream in{std::string(line)};
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

Rational parse_number(const std::string& tok, int line) {
  auto r = Rational::parse(tok);
  if (!r) throw ParseError(line, "bad number '" + tok + "'");
  return *r;
}

std::int64_t parse_int(const std::string& tok, int line) {
  Rational r = parse_number(tok, line);
  if (!r.is_integer()) throw ParseError(line, "expected an integer, got '" + tok + "'");
  return mpz_get_si(r.num().get_mpz_t());
}

void expect_args(const std::vector<std::string>& toks, std::size_t n, int line) {
  if (toks.size() != n + 1) {
    throw ParseError(line, "'" + toks[0] + "' expects " + std::to_string(n) +
                               " numbers");
  }
}

}  // namespace

Instance parse_instance(std::string_view text) {
  std::string kind;
  Chain chain;
  std::vector<Pt2> guards;                       // in record order, pre-merge
  std::vector<std::pair<int, std::int64_t>> weight_records;
  std::vector<UnitCube> cubes;
  std::vector<Triangle> tris;
  std::vector<Pt2> points2;
  std::vector<Pt3> points3;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    auto toks = tokens_of(line);
    if (toks.empty()) continue;
    const std::string& rec = toks[0];

    if (rec == "kind") {
      if (!kind.empty()) throw ParseError(line_no, "duplicate kind record");
      if (toks.size() != 2 ||
          (toks[1] != "terrain" && toks[1] != "cubes" && toks[1] != "triangles")) {
        throw ParseError(line_no, "kind must be terrain, cubes, or triangles");
      }
      kind = toks[1];
      continue;
    }
    if (kind.empty()) throw ParseError(line_no, "first record must be 'kind'");

    if (kind == "terrain") {
      if (rec == "chain") {
        if (!chain.verts.empty()) throw ParseError(line_no, "duplicate chain record");
        if (toks.size() < 5 || (toks.size() - 1) % 2 != 0) {
          throw ParseError(line_no, "'chain' expects an even list of at least 4 numbers");
        }
        for (std::size_t k = 1; k + 1 < toks.size(); k += 2) {
          chain.verts.push_back(
              {parse_number(toks[k], line_no), parse_number(toks[k + 1], line_no)});
        }
      } else if (rec == "guard") {
        expect_args(toks, 2, line_no);
        guards.push_back(
            {parse_number(toks[1], line_no), parse_number(toks[2], line_no)});
      } else if (rec == "weight") {
        expect_args(toks, 2, line_no);
        int idx = static_cast<int>(parse_int(toks[1], line_no));
        std::int64_t w = parse_int(toks[2], line_no);
        if (w < 1) throw ParseError(line_no, "weight must be >= 1");
        weight_records.emplace_back(idx, w);
      } else {
        throw ParseError(line_no, "unknown terrain record '" + rec + "'");
      }
    } else if (kind == "cubes") {
      if (rec == "cube") {
        expect_args(toks, 3, line_no);
        cubes.push_back({{parse_number(toks[1], line_no),
                          parse_number(toks[2], line_no),
                          parse_number(toks[3], line_no)}});
      } else if (rec == "point") {
        expect_args(toks, 3, line_no);
        points3.push_back({parse_number(toks[1], line_no),
                           parse_number(toks[2], line_no),
                           parse_number(toks[3], line_no)});
      } else {
        throw ParseError(line_no, "unknown cubes record '" + rec + "'");
      }
    } else {  // triangles
      if (rec == "tri") {
        expect_args(toks, 6, line_no);
        Triangle t{{parse_number(toks[1], line_no), parse_number(toks[2], line_no)},
                   {parse_number(toks[3], line_no), parse_number(toks[4], line_no)},
                   {parse_number(toks[5], line_no), parse_number(toks[6], line_no)}};
        t.normalize();  // throws on degenerate input
        tris.push_back(t);
      } else if (rec == "point") {
        expect_args(toks, 2, line_no);
        points2.push_back(
            {parse_number(toks[1], line_no), parse_number(toks[2], line_no)});
      } else {
        throw ParseError(line_no, "unknown triangles record '" + rec + "'");
      }
    }
  }

  if (kind.empty()) throw ParseError(line_no, "missing 'kind' record");

  if (kind == "terrain") {
    chain.validate();  // names the violated invariant
    // Apply weight records to guard records, then merge duplicates.
    std::vector<std::int64_t> w(guards.size(), 1);
    for (auto [idx, wt] : weight_records) {
      if (idx < 0 || idx >= static_cast<int>(guards.size())) {
        throw std::invalid_argument("weight record for nonexistent guard " +
                                    std::to_string(idx));
      }
      w[idx] = wt;
    }
    TerrainData data;
    data.chain = std::move(chain);
    for (std::size_t k = 0; k < guards.size(); ++k) {
      auto it = std::find_if(data.guards.begin(), data.guards.end(),
                             [&](const Pt2& g) { return g == guards[k]; });
      if (it == data.guards.end()) {
        data.guards.push_back(guards[k]);
        data.weights.push_back(w[k]);
      } else {
        data.weights[it - data.guards.begin()] += w[k];
      }
    }
    // Constructing the instance validates guards against the chain.
    TerrainInstance probe(data.chain, data.guards);
    return data;
  }
  if (kind == "cubes") {
    CubesData data;
    data.cubes = std::move(cubes);
    data.points = std::move(points3);
    return data;
  }
  TrianglesData data;
  data.tris = std::move(tris);
  data.points = std::move(points2);
  validate_general_position(data.tris);
  return data;
}

std::string print_instance(const Instance& inst) {
  std::ostringstream out;
  if (const auto* t = std::get_if<TerrainData>(&inst)) {
    out << "kind terrain\nchain";
    for (const Pt2& v : t->chain.verts) out << ' ' << v.x.str() << ' ' << v.y.str();
    out << '\n';
    for (const Pt2& g : t->guards) {
      out << "guard " << g.x.str() << ' ' << g.y.str() << '\n';
    }
    for (std::size_t i = 0; i < t->weights.size(); ++i) {
      if (t->weights[i] != 1) {
        out << "weight " << i << ' ' << t->weights[i] << '\n';
      }
    }
  } else if (const auto* c = std::get_if<CubesData>(&inst)) {
    out << "kind cubes\n";
    for (const UnitCube& u : c->cubes) {
      out << "cube " << u.mn.x.str() << ' ' << u.mn.y.str() << ' ' << u.mn.z.str()
          << '\n';
    }
    for (const Pt3& p : c->points) {
      out << "point " << p.x.str() << ' ' << p.y.str() << ' ' << p.z.str() << '\n';
    }
  } else {
    const auto& g = std::get<TrianglesData>(inst);
    out << "kind triangles\n";
    for (const Triangle& t : g.tris) {
      out << "tri " << t.a.x.str() << ' ' << t.a.y.str() << ' ' << t.b.x.str() << ' '
          << t.b.y.str() << ' ' << t.c.x.str() << ' ' << t.c.y.str() << '\n';
    }
    for (const Pt2& p : g.points) {
      out << "point " << p.x.str() << ' ' << p.y.str() << '\n';
    }
  }
  return out.str();
}

const char* instance_kind(const Instance& inst) {
  if (std::holds_alternative<TerrainData>(inst)) return "terrain";
  if (std::holds_alternative<CubesData>(inst)) return "cubes";
  return "triangles";
}

int instance_object_count(const Instance& inst) {
  if (const auto* t = std::get_if<TerrainData>(&inst)) {
    return static_cast<int>(t->guards.size());
  }
  if (const auto* c = std::get_if<CubesData>(&inst)) {
    return static_cast<int>(c->cubes.size());
  }
  return static_cast<int>(std::get<TrianglesData>(inst).tris.size());
}

int instance_demand_count(const Instance& inst) {
  if (const auto* t = std::get_if<TerrainData>(&inst)) {
    return t->chain.vertex_count();
  }
  if (const auto* c = std::get_if<CubesData>(&inst)) {
    return static_cast<int>(c->points.size());
  }
  return static_cast<int>(std::get<TrianglesData>(inst).points.size());
}

WeightedFamily instance_family(const Instance& inst) {
  WeightedFamily f(instance_object_count(inst));
  if (const auto* t = std::get_if<TerrainData>(&inst)) {
    for (std::size_t i = 0; i < t->weights.size(); ++i) {
      f.set_weight(static_cast<int>(i), t->weights[i]);
    }
  }
  return f;
}

}  // namespace geocover

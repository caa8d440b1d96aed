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

#ifndef GEOCOVER_INSTANCE_HPP_
#define GEOCOVER_INSTANCE_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "geocover/boxes3d.hpp"
#include "geocover/terrain.hpp"
#include "geocover/triangles2d.hpp"

namespace geocover {

/// Terrain instance data. Guards with identical positions are merged at
/// parse time, summing their weights.
struct TerrainData {
  Chain chain;
  std::vector<Pt2> guards;
  std::vector<std::int64_t> weights;
};

struct CubesData {
  std::vector<UnitCube> cubes;
  std::vector<Pt3> points;
};

struct TrianglesData {
  std::vector<Triangle> tris;
  std::vector<Pt2> points;
};

using Instance = std::variant<TerrainData, CubesData, TrianglesData>;

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line(line) {}
  int line;
};

/// Line-oriented instance format, '#' starts a comment:
///   kind terrain|cubes|triangles
///   terrain:   chain x0 y0 x1 y1 ...   guard x y   weight i w
///   cubes:     cube x y z              point x y z
///   triangles: tri x1 y1 x2 y2 x3 y3   point x y
/// Numbers are exact: optional sign, decimal, or a/b.
Instance parse_instance(std::string_view text);

/// Canonical text form; parse_instance(print_instance(i)) reproduces i.
std::string print_instance(const Instance& inst);

const char* instance_kind(const Instance& inst);
int instance_object_count(const Instance& inst);
int instance_demand_count(const Instance& inst);
/// Family over the instance objects; terrain guard weights applied.
WeightedFamily instance_family(const Instance& inst);

}  // namespace geocover

#endif  // GEOCOVER_INSTANCE_HPP_

// Copyright 2026 The volfrac Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>

#include "volfrac/hex.hpp"
#include "volfrac/vec3.hpp"

namespace volfrac {

/// Oriented plane. The kept side of a clip is (x - point) . normal <= 0, so
/// with an outward normal the kept volume is the solid's side.
struct Plane {
  Point3 point;
  Vec3 normal{0, 0, 1};

  /// Normalizes `normal`; it must be nonzero.
  static Plane through(const Point3& point, const Vec3& normal);

  double signed_distance(const Point3& x) const { return dot(x - point, normal); }
  Plane flipped() const { return {point, -normal}; }
};

struct Tetrahedron {
  std::array<Point3, 4> v;

  double signed_volume() const { return triple(v[1] - v[0], v[2] - v[0], v[3] - v[0]) / 6.0; }
};

/// Vertex indices of the six Kuhn tetrahedra. All share the 0-6 diagonal, so
/// each quad face is split along the diagonal joining its lowest and highest
/// reference corners and neighbouring hexes triangulate shared faces alike.
inline constexpr std::array<std::array<int, 4>, 6> kKuhnTets{{{0, 1, 2, 6},
                                                             {0, 5, 1, 6},
                                                             {0, 2, 3, 6},
                                                             {0, 3, 7, 6},
                                                             {0, 4, 5, 6},
                                                             {0, 7, 4, 6}}};

std::array<Tetrahedron, 6> hex_to_tets(const HexCorners& c);

/// Sum of the signed volumes of the Kuhn tetrahedra.
double tet_decomposition_volume(const HexCorners& c);

/// Volume of {x in t : (x - p.point) . p.normal <= 0}. Vertices with
/// |signed distance| <= snap_tolerance are placed on the plane.
double clipped_tet_volume(const Tetrahedron& t, const Plane& p, double snap_tolerance);

/// As above with the snap tolerance 1e-12 times the tetrahedron's longest edge.
double clipped_tet_volume(const Tetrahedron& t, const Plane& p);

/// Kept volume of a hexahedron, summed over its Kuhn tetrahedra with a snap
/// tolerance of 1e-12 times the hex diameter.
double clipped_hex_volume(const HexCorners& c, const Plane& p);

}  // namespace volfrac

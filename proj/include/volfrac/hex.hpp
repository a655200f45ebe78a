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

#include "volfrac/vec3.hpp"

namespace volfrac {

// Corner ordering used everywhere: counterclockwise bottom face (zeta = -1),
// then counterclockwise top face (zeta = +1), viewed from +zeta. This is the
// VTK_HEXAHEDRON ordering.
//
//        7-------6
//       /|      /|
//      4-------5 |
//      | 3-----|-2
//      |/      |/
//      0-------1
using HexCorners = std::array<Point3, 8>;

struct RefCoord {
  double xi = 0.0;
  double eta = 0.0;
  double zeta = 0.0;
};

/// Reference-cube position of each canonical corner.
inline constexpr std::array<RefCoord, 8> kRefCorners{{{-1, -1, -1},
                                                      {1, -1, -1},
                                                      {1, 1, -1},
                                                      {-1, 1, -1},
                                                      {-1, -1, 1},
                                                      {1, -1, 1},
                                                      {1, 1, 1},
                                                      {-1, 1, 1}}};

/// For each corner, the three edge-adjacent corners along +-xi, +-eta, +-zeta,
/// ordered so the emanating edges form a right-handed frame on the reference
/// cube.
inline constexpr std::array<std::array<int, 3>, 8> kCornerNeighbors{{{1, 3, 4},
                                                                      {2, 0, 5},
                                                                      {3, 1, 6},
                                                                      {0, 2, 7},
                                                                      {7, 5, 0},
                                                                      {4, 6, 1},
                                                                      {5, 7, 2},
                                                                      {6, 4, 3}}};

std::array<double, 8> shape_functions(const RefCoord& r);

/// x(xi) = sum_a N_a(xi) v_a.
Point3 trilinear_map(const HexCorners& c, const RefCoord& r);

/// d x / d xi, columns are the derivatives along xi, eta, zeta.
Mat3 trilinear_jacobian(const HexCorners& c, const RefCoord& r);

double jacobian_det(const HexCorners& c, const RefCoord& r);

/// 2x2x2 Gauss quadrature of det J; exact for the trilinear solid.
double trilinear_volume(const HexCorners& c);

Point3 corner_mean(const HexCorners& c);

/// Largest corner-to-corner distance over the four main diagonals.
double hex_diameter(const HexCorners& c);

}  // namespace volfrac

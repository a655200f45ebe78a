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

#include "volfrac/hex.hpp"

#include <algorithm>
#include <cmath>

namespace volfrac {

std::array<double, 8> shape_functions(const RefCoord& r) {
  std::array<double, 8> n{};
  for (int a = 0; a < 8; ++a) {
    const RefCoord& s = kRefCorners[a];
    n[a] = 0.125 * (1.0 + s.xi * r.xi) * (1.0 + s.eta * r.eta) * (1.0 + s.zeta * r.zeta);
  }
  return n;
}

Point3 trilinear_map(const HexCorners& c, const RefCoord& r) {
  const auto n = shape_functions(r);
  Point3 x;
  for (int a = 0; a < 8; ++a) x += n[a] * c[a];
  return x;
}

Mat3 trilinear_jacobian(const HexCorners& c, const RefCoord& r) {
  Vec3 dxi, deta, dzeta;
  for (int a = 0; a < 8; ++a) {
    const RefCoord& s = kRefCorners[a];
    const double fx = 1.0 + s.xi * r.xi;
    const double fy = 1.0 + s.eta * r.eta;
    const double fz = 1.0 + s.zeta * r.zeta;
    dxi += (0.125 * s.xi * fy * fz) * c[a];
    deta += (0.125 * s.eta * fx * fz) * c[a];
    dzeta += (0.125 * s.zeta * fx * fy) * c[a];
  }
  Mat3 j;
  j.m = {dxi.x, deta.x, dzeta.x, dxi.y, deta.y, dzeta.y, dxi.z, deta.z, dzeta.z};
  return j;
}

double jacobian_det(const HexCorners& c, const RefCoord& r) {
  return trilinear_jacobian(c, r).determinant();
}

double trilinear_volume(const HexCorners& c) {
  const double g = 1.0 / std::sqrt(3.0);
  double v = 0.0;
  for (double a : {-g, g})
    for (double b : {-g, g})
      for (double d : {-g, g}) v += jacobian_det(c, {a, b, d});
  return v;
}

Point3 corner_mean(const HexCorners& c) {
  Point3 m;
  for (const auto& p : c) m += p;
  return m / 8.0;
}

double hex_diameter(const HexCorners& c) {
  return std::max({distance(c[0], c[6]), distance(c[1], c[7]), distance(c[2], c[4]),
                   distance(c[3], c[5])});
}

}  // namespace volfrac

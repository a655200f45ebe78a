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

// Random generators shared by the property tests. Everything is seeded so
// failures reproduce.

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "volfrac/clip.hpp"
#include "volfrac/hex.hpp"
#include "volfrac/vec3.hpp"

namespace volfrac::testing {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Point3 random_point(Rng& rng, double lo, double hi) {
  return {uniform(rng, lo, hi), uniform(rng, lo, hi), uniform(rng, lo, hi)};
}

inline Vec3 random_unit_vector(Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  for (;;) {
    const Vec3 v{n(rng), n(rng), n(rng)};
    const double len = norm(v);
    if (len > 1e-3) return v / len;
  }
}

inline Mat3 random_rotation(Rng& rng) {
  return Mat3::rotation(random_unit_vector(rng), uniform(rng, 0.0, 2.0 * std::numbers::pi));
}

/// Unit cube scaled by `size`, translated to `origin`.
inline HexCorners cube(const Point3& origin, double size) {
  HexCorners c;
  for (int a = 0; a < 8; ++a) {
    const RefCoord& s = kRefCorners[a];
    c[a] = origin + size * Vec3{0.5 * (s.xi + 1), 0.5 * (s.eta + 1), 0.5 * (s.zeta + 1)};
  }
  return c;
}

/// Cube with every corner jittered by up to `jitter` per coordinate, then
/// rotated and translated. Jitter below ~0.2 keeps every Kuhn tet positive.
inline HexCorners random_hex(Rng& rng, double jitter) {
  const Mat3 r = random_rotation(rng);
  const Vec3 t = random_point(rng, -2.0, 2.0);
  const double size = uniform(rng, 0.2, 2.0);
  HexCorners c = cube({0, 0, 0}, 1.0);
  for (auto& p : c) p = t + size * (r * (p + random_point(rng, -jitter, jitter)));
  return c;
}

/// Affine image of the unit cube (a parallelepiped) with positive orientation.
struct AffineHex {
  Point3 origin;
  Mat3 map;
  HexCorners corners;
};

inline AffineHex random_affine_hex(Rng& rng) {
  for (;;) {
    Mat3 m;
    for (auto& v : m.m) v = uniform(rng, -1.0, 1.0);
    for (int k = 0; k < 3; ++k) m(k, k) += 1.5;
    if (m.determinant() < 0.2) continue;
    AffineHex h{random_point(rng, -1.0, 1.0), m, {}};
    const HexCorners unit = cube({0, 0, 0}, 1.0);
    for (int a = 0; a < 8; ++a) h.corners[a] = h.origin + m * unit[a];
    return h;
  }
}

/// Uniform sample inside a tetrahedron: spacings of three sorted uniforms are
/// uniform barycentric coordinates.
inline Point3 sample_tet(Rng& rng, const Tetrahedron& t) {
  std::array<double, 3> u{uniform(rng, 0, 1), uniform(rng, 0, 1), uniform(rng, 0, 1)};
  std::sort(u.begin(), u.end());
  return u[0] * t.v[0] + (u[1] - u[0]) * t.v[1] + (u[2] - u[1]) * t.v[2] + (1.0 - u[2]) * t.v[3];
}

}  // namespace volfrac::testing

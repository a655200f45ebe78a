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

#include "volfrac/clip.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace volfrac {

namespace {

double tet_abs_volume(const Point3& a, const Point3& b, const Point3& c, const Point3& d) {
  return std::abs(triple(b - a, c - a, d - a)) / 6.0;
}

// Interpolation parameter of the plane crossing along kept->removed.
double crossing(double s_kept, double s_removed) { return -s_kept / (s_removed - s_kept); }

}  // namespace

Plane Plane::through(const Point3& point, const Vec3& normal) {
  const double len = norm(normal);
  if (!(len > 0.0)) throw std::invalid_argument("plane normal must be nonzero");
  return {point, normal / len};
}

std::array<Tetrahedron, 6> hex_to_tets(const HexCorners& c) {
  std::array<Tetrahedron, 6> tets;
  for (std::size_t t = 0; t < kKuhnTets.size(); ++t) {
    const auto& idx = kKuhnTets[t];
    tets[t] = Tetrahedron{{c[idx[0]], c[idx[1]], c[idx[2]], c[idx[3]]}};
  }
  return tets;
}

double tet_decomposition_volume(const HexCorners& c) {
  double v = 0.0;
  for (const auto& t : hex_to_tets(c)) v += t.signed_volume();
  return v;
}

double clipped_tet_volume(const Tetrahedron& t, const Plane& p, double snap_tolerance) {
  std::array<double, 4> s{};
  std::array<int, 4> kept{};
  std::array<int, 4> removed{};
  int nk = 0;
  int nr = 0;
  for (int i = 0; i < 4; ++i) {
    s[i] = p.signed_distance(t.v[i]);
    if (std::abs(s[i]) <= snap_tolerance) s[i] = 0.0;
    if (s[i] <= 0.0)
      kept[nk++] = i;
    else
      removed[nr++] = i;
  }

  const double vol = t.signed_volume();
  switch (nk) {
    case 0:
      return 0.0;
    case 4:
      return vol;
    case 1: {
      const int a = kept[0];
      double frac = 1.0;
      for (int j = 0; j < 3; ++j) frac *= crossing(s[a], s[removed[j]]);
      return vol * frac;
    }
    case 3: {
      const int b = removed[0];
      double frac = 1.0;
      for (int j = 0; j < 3; ++j) frac *= 1.0 - crossing(s[kept[j]], s[b]);
      return vol * (1.0 - frac);
    }
    default: {
      // Two on each side: the kept part is a wedge with triangles
      // (a0, p00, p01) and (a1, p10, p11), pij on edge ai -> bj.
      const int a0 = kept[0], a1 = kept[1], b0 = removed[0], b1 = removed[1];
      auto cut = [&](int a, int b) {
        return t.v[a] + crossing(s[a], s[b]) * (t.v[b] - t.v[a]);
      };
      const Point3 p00 = cut(a0, b0), p01 = cut(a0, b1), p10 = cut(a1, b0), p11 = cut(a1, b1);
      const Point3& q0 = t.v[a0];
      const Point3& q1 = t.v[a1];
      const double wedge = tet_abs_volume(q0, p00, p01, q1) + tet_abs_volume(p00, p01, q1, p10) +
                           tet_abs_volume(p01, q1, p10, p11);
      return std::copysign(wedge, vol);
    }
  }
}

double clipped_tet_volume(const Tetrahedron& t, const Plane& p) {
  double edge = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) edge = std::max(edge, distance(t.v[i], t.v[j]));
  return clipped_tet_volume(t, p, 1e-12 * edge);
}

double clipped_hex_volume(const HexCorners& c, const Plane& p) {
  const double tol = 1e-12 * hex_diameter(c);
  double v = 0.0;
  for (const auto& t : hex_to_tets(c)) v += clipped_tet_volume(t, p, tol);
  return v;
}

}  // namespace volfrac

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

#include "volfrac/hexmesh.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "volfrac/clip.hpp"

namespace volfrac {

DegenerateElementError::DegenerateElementError(std::size_t element, double volume)
    : std::runtime_error([&] {
        std::ostringstream os;
        os << "element " << element << " is degenerate (volume " << volume << ")";
        return os.str();
      }()),
      element_(element),
      volume_(volume) {}

HexMesh::HexMesh(std::vector<Point3> vertices, std::vector<ElementConnectivity> elements)
    : vertices_(std::move(vertices)), elements_(std::move(elements)) {
  for (const auto& v : vertices_)
    if (!is_finite(v)) throw MeshError("mesh vertex has non-finite coordinates");
  for (std::size_t e = 0; e < elements_.size(); ++e) {
    auto conn = elements_[e];
    for (auto idx : conn)
      if (idx >= vertices_.size())
        throw MeshError("element " + std::to_string(e) + " references a missing vertex");
    std::sort(conn.begin(), conn.end());
    if (std::adjacent_find(conn.begin(), conn.end()) != conn.end())
      throw MeshError("element " + std::to_string(e) + " repeats a vertex");
  }
}

HexMesh build_box_mesh(const Point3& lo, const Point3& hi, int n) {
  if (n < 1) throw MeshError("box mesh needs at least one element per axis");
  if (!(lo.x < hi.x && lo.y < hi.y && lo.z < hi.z))
    throw MeshError("box mesh requires lo < hi componentwise");

  const std::size_t nv = static_cast<std::size_t>(n) + 1;
  auto coord = [&](int axis, std::size_t i) {
    // Pin the last layer to hi exactly.
    if (i == static_cast<std::size_t>(n)) return hi[axis];
    return lo[axis] + (hi[axis] - lo[axis]) * static_cast<double>(i) / n;
  };
  std::vector<Point3> verts;
  verts.reserve(nv * nv * nv);
  for (std::size_t k = 0; k < nv; ++k)
    for (std::size_t j = 0; j < nv; ++j)
      for (std::size_t i = 0; i < nv; ++i) verts.push_back({coord(0, i), coord(1, j), coord(2, k)});

  auto vid = [&](std::size_t i, std::size_t j, std::size_t k) {
    return static_cast<std::uint32_t>(i + nv * (j + nv * k));
  };
  std::vector<ElementConnectivity> elems;
  elems.reserve(static_cast<std::size_t>(n) * n * n);
  for (std::size_t k = 0; k < nv - 1; ++k)
    for (std::size_t j = 0; j < nv - 1; ++j)
      for (std::size_t i = 0; i < nv - 1; ++i)
        elems.push_back({vid(i, j, k), vid(i + 1, j, k), vid(i + 1, j + 1, k), vid(i, j + 1, k),
                         vid(i, j, k + 1), vid(i + 1, j, k + 1), vid(i + 1, j + 1, k + 1),
                         vid(i, j + 1, k + 1)});

  HexMesh mesh(std::move(verts), std::move(elems));
  for (std::size_t e = 0; e < mesh.num_elements(); ++e) element_volume(mesh, e);
  return mesh;
}

HexMesh apply_sinusoidal_perturbation(const HexMesh& mesh) {
  constexpr double a = 0.5 * std::numbers::pi;
  return mesh.map_vertices([](const Point3& p) {
    return Point3{p.x + 0.1 * std::sin(a * p.y * p.z), p.y + 0.1 * std::sin(a * p.x * p.z),
                  p.z + 0.1 * std::sin(a * p.x * p.y)};
  });
}

HexMesh apply_shear_scaling(const HexMesh& mesh) {
  return mesh.map_vertices(
      [](const Point3& p) { return Point3{p.x + 2.0 * p.y, 0.3 * p.y, 0.2 * p.z}; });
}

HexMesh apply_mirror_x(const HexMesh& mesh) {
  return mesh.map_vertices([](const Point3& p) { return Point3{-p.x, p.y, p.z}; });
}

Point3 trilinear_map(const HexMesh& mesh, std::size_t e, const RefCoord& r) {
  return trilinear_map(mesh.corners(e), r);
}

double jacobian_det(const HexMesh& mesh, std::size_t e, const RefCoord& r) {
  return jacobian_det(mesh.corners(e), r);
}

Point3 element_centroid(const HexMesh& mesh, std::size_t e) { return corner_mean(mesh.corners(e)); }

double element_volume(const HexMesh& mesh, std::size_t e) {
  const double v = tet_decomposition_volume(mesh.corners(e));
  if (!(v > 0.0)) throw DegenerateElementError(e, v);
  return v;
}

ElementQuality scaled_jacobian(const HexCorners& c) {
  ElementQuality q{1.0, false};
  for (int a = 0; a < 8; ++a) {
    const auto& nb = kCornerNeighbors[a];
    const Vec3 u1 = c[nb[0]] - c[a];
    const Vec3 u2 = c[nb[1]] - c[a];
    const Vec3 u3 = c[nb[2]] - c[a];
    const double l = norm(u1) * norm(u2) * norm(u3);
    if (!(l > 0.0)) return {0.0, true};
    q.value = std::min(q.value, triple(u1, u2, u3) / l);
  }
  return q;
}

ElementQuality scaled_jacobian(const HexMesh& mesh, std::size_t e) {
  return scaled_jacobian(mesh.corners(e));
}

}  // namespace volfrac

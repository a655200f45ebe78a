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
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "volfrac/hex.hpp"
#include "volfrac/vec3.hpp"

namespace volfrac {

class MeshError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an element's volume is not positive.
class DegenerateElementError : public std::runtime_error {
 public:
  DegenerateElementError(std::size_t element, double volume);
  std::size_t element() const { return element_; }
  double volume() const { return volume_; }

 private:
  std::size_t element_;
  double volume_;
};

using ElementConnectivity = std::array<std::uint32_t, 8>;

/// Unstructured hexahedral mesh. Connectivity follows the corner ordering in
/// hex.hpp. Construction validates indices and corner distinctness; element
/// orientation is checked by element_volume and by the generators.
class HexMesh {
 public:
  HexMesh() = default;
  HexMesh(std::vector<Point3> vertices, std::vector<ElementConnectivity> elements);

  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_elements() const { return elements_.size(); }

  std::span<const Point3> vertices() const { return vertices_; }
  std::span<const ElementConnectivity> elements() const { return elements_; }

  HexCorners corners(std::size_t e) const {
    const auto& conn = elements_[e];
    HexCorners c;
    for (int a = 0; a < 8; ++a) c[a] = vertices_[conn[a]];
    return c;
  }

  /// Returns a mesh with the same connectivity and every vertex mapped by f.
  template <class F>
  HexMesh map_vertices(F&& f) const {
    HexMesh out = *this;
    for (auto& v : out.vertices_) v = f(v);
    return out;
  }

 private:
  std::vector<Point3> vertices_;
  std::vector<ElementConnectivity> elements_;
};

/// n^3 axis-aligned cubical elements tiling [lo, hi].
HexMesh build_box_mesh(const Point3& lo, const Point3& hi, int n);

/// x += 0.1 sin(pi/2 yz), y += 0.1 sin(pi/2 xz), z += 0.1 sin(pi/2 xy), all
/// evaluated at the original coordinates.
HexMesh apply_sinusoidal_perturbation(const HexMesh& mesh);

/// x' = x + 2y, y' = 3/10 y, z' = 1/5 z (simultaneous).
HexMesh apply_shear_scaling(const HexMesh& mesh);

/// x' = -x. Produces inverted elements; used to exercise quality reporting.
HexMesh apply_mirror_x(const HexMesh& mesh);

Point3 trilinear_map(const HexMesh& mesh, std::size_t e, const RefCoord& r);
double jacobian_det(const HexMesh& mesh, std::size_t e, const RefCoord& r);
Point3 element_centroid(const HexMesh& mesh, std::size_t e);

/// Sum of the signed Kuhn tetrahedron volumes. Throws DegenerateElementError
/// when the result is not positive.
double element_volume(const HexMesh& mesh, std::size_t e);

struct ElementQuality {
  double value = 0.0;
  bool degenerate = false;  ///< a zero-length edge was found
};

/// Minimum over corners of det[u1,u2,u3] / (|u1||u2||u3|).
ElementQuality scaled_jacobian(const HexCorners& c);
ElementQuality scaled_jacobian(const HexMesh& mesh, std::size_t e);

}  // namespace volfrac

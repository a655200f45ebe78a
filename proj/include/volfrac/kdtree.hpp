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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "volfrac/hexmesh.hpp"

namespace volfrac {

struct BoundingSphere {
  Point3 center;
  double radius = 0.0;
};

/// Sphere centered at the midpoint of the points' axis-aligned bounding box,
/// with radius the farthest point's distance. `points` must be nonempty.
BoundingSphere bounding_sphere(std::span<const Point3> points);

/// Bounding sphere over every vertex of the listed elements.
BoundingSphere bounding_sphere_of_elements(const HexMesh& mesh,
                                           std::span<const std::uint32_t> elems);

/// k-d tree over element centroids built by recursive coordinate bisection.
///
/// Each internal node splits along the axis of largest centroid extent (ties
/// go to the lower axis) at the mean centroid coordinate. Children hold
/// floor(n/2) (left, lower coordinates) and n - floor(n/2) elements; centroids
/// are ordered along the split axis, with element index as tie-break, and cut
/// at the median index so coincident coordinates cannot unbalance the split.
///
/// Nodes are stored in a flat array with the root at index 0. Each node owns
/// a contiguous range of the element permutation. The tree is immutable and
/// may be shared by any number of concurrent insertions.
class KdTree {
 public:
  struct Node {
    BoundingSphere sphere;
    std::uint32_t begin = 0;  ///< range into element_order()
    std::uint32_t end = 0;
    std::int32_t left = -1;
    std::int32_t right = -1;
    int split_axis = -1;
    double split_coord = 0.0;

    bool is_leaf() const { return left < 0; }
    std::size_t size() const { return end - begin; }
  };

  explicit KdTree(const HexMesh& mesh);

  const Node& root() const { return nodes_.front(); }
  const Node& node(std::size_t i) const { return nodes_[i]; }
  std::span<const Node> nodes() const { return nodes_; }

  std::span<const std::uint32_t> element_order() const { return order_; }
  std::span<const std::uint32_t> elements(const Node& n) const {
    return std::span<const std::uint32_t>(order_).subspan(n.begin, n.size());
  }

  std::size_t num_elements() const { return order_.size(); }

  /// Number of nodes on the longest root-to-leaf path.
  int depth() const;

  /// Wall-clock time spent in construction.
  double build_seconds() const { return build_seconds_; }

 private:
  std::int32_t build(const HexMesh& mesh, std::span<const Point3> centroids, std::uint32_t begin,
                     std::uint32_t end);

  std::vector<Node> nodes_;
  std::vector<std::uint32_t> order_;
  double build_seconds_ = 0.0;
};

/// Builds the tree; throws MeshError for an empty mesh.
KdTree build_kdtree(const HexMesh& mesh);

}  // namespace volfrac

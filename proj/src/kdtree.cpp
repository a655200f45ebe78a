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

#include "volfrac/kdtree.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <numeric>

namespace volfrac {

namespace {

struct Extent {
  Point3 lo{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity(),
            std::numeric_limits<double>::infinity()};
  Point3 hi{-std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity(),
            -std::numeric_limits<double>::infinity()};

  void add(const Point3& p) {
    for (int k = 0; k < 3; ++k) {
      lo[k] = std::min(lo[k], p[k]);
      hi[k] = std::max(hi[k], p[k]);
    }
  }
  Point3 mid() const { return 0.5 * (lo + hi); }
};

}  // namespace

BoundingSphere bounding_sphere(std::span<const Point3> points) {
  Extent ext;
  for (const auto& p : points) ext.add(p);
  BoundingSphere s{ext.mid(), 0.0};
  for (const auto& p : points) s.radius = std::max(s.radius, distance(s.center, p));
  return s;
}

BoundingSphere bounding_sphere_of_elements(const HexMesh& mesh,
                                           std::span<const std::uint32_t> elems) {
  const auto verts = mesh.vertices();
  const auto conn = mesh.elements();
  Extent ext;
  for (auto e : elems)
    for (auto v : conn[e]) ext.add(verts[v]);
  BoundingSphere s{ext.mid(), 0.0};
  for (auto e : elems)
    for (auto v : conn[e]) s.radius = std::max(s.radius, distance(s.center, verts[v]));
  return s;
}

KdTree::KdTree(const HexMesh& mesh) {
  if (mesh.num_elements() == 0) throw MeshError("cannot build a k-d tree over an empty mesh");
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n = mesh.num_elements();
  std::vector<Point3> centroids(n);
  for (std::size_t e = 0; e < n; ++e) centroids[e] = element_centroid(mesh, e);
  order_.resize(n);
  std::iota(order_.begin(), order_.end(), 0u);
  nodes_.reserve(2 * n - 1);
  build(mesh, centroids, 0, static_cast<std::uint32_t>(n));
  build_seconds_ =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::int32_t KdTree::build(const HexMesh& mesh, std::span<const Point3> centroids,
                           std::uint32_t begin, std::uint32_t end) {
  const auto id = static_cast<std::int32_t>(nodes_.size());
  nodes_.push_back({});
  {
    Node& node = nodes_.back();
    node.begin = begin;
    node.end = end;
    node.sphere = bounding_sphere_of_elements(mesh, elements(node));
  }
  const std::uint32_t count = end - begin;
  if (count == 1) return id;

  const auto range = std::span<std::uint32_t>(order_).subspan(begin, count);
  Extent ext;
  double sum[3] = {0.0, 0.0, 0.0};
  for (auto e : range) {
    ext.add(centroids[e]);
    for (int k = 0; k < 3; ++k) sum[k] += centroids[e][k];
  }
  int axis = 0;
  for (int k = 1; k < 3; ++k)
    if (ext.hi[k] - ext.lo[k] > ext.hi[axis] - ext.lo[axis]) axis = k;

  std::sort(range.begin(), range.end(), [&](std::uint32_t a, std::uint32_t b) {
    const double ca = centroids[a][axis];
    const double cb = centroids[b][axis];
    return ca < cb || (ca == cb && a < b);
  });

  const std::uint32_t mid = begin + count / 2;
  const std::int32_t left = build(mesh, centroids, begin, mid);
  const std::int32_t right = build(mesh, centroids, mid, end);
  Node& node = nodes_[id];
  node.split_axis = axis;
  node.split_coord = sum[axis] / count;
  node.left = left;
  node.right = right;
  return id;
}

int KdTree::depth() const {
  std::vector<int> d(nodes_.size(), 0);
  int deepest = 0;
  // Children always follow their parent in the node array.
  d[0] = 1;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    deepest = std::max(deepest, d[i]);
    if (!nodes_[i].is_leaf()) {
      d[nodes_[i].left] = d[i] + 1;
      d[nodes_[i].right] = d[i] + 1;
    }
  }
  return deepest;
}

KdTree build_kdtree(const HexMesh& mesh) { return KdTree(mesh); }

}  // namespace volfrac

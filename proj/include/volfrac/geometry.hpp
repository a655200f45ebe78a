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

#include <memory>
#include <stdexcept>
#include <string>
#include <variant>

#include "volfrac/vec3.hpp"

namespace volfrac {

/// Thrown when a geometry is constructed from invalid parameters.
class GeometryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown by exact_volume for geometries without a closed-form volume.
class NoAnalyticVolume : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class SphereClass { FullyInside, FullyOutside, Intersecting };

const char* to_string(SphereClass c);

struct Sphere {
  Point3 center;
  double radius = 1.0;
};

/// All points within `radius` of the segment [a, b].
struct Capsule {
  Point3 a;
  Point3 b;
  double radius = 1.0;
};

struct Box {
  Point3 lo;
  Point3 hi;
};

struct Torus {
  Point3 center;
  Vec3 axis{0, 0, 1};
  double major_radius = 1.0;
  double minor_radius = 0.25;
};

/// The closed half-space {x : (x - point) . normal <= 0}. Unbounded, so it has
/// no analytic volume; used to exercise the plane-cut path on flat surfaces.
struct HalfSpace {
  Point3 point;
  Vec3 normal{0, 0, 1};
};

class Geometry;

/// x_world = scale * rotation * x_local + translation.
struct Transformed {
  std::shared_ptr<const Geometry> inner;
  Mat3 rotation;
  Vec3 translation;
  double scale = 1.0;
};

/// An implicit solid answering the two queries the insertion procedure relies
/// on: containment and closest surface point. Immutable once built.
///
/// Boundary points count as inside. Closest-point ties (sphere center, points
/// on a capsule or torus axis) resolve toward +x, then +y, then +z in the
/// primitive's local frame.
class Geometry {
 public:
  using Shape = std::variant<Sphere, Capsule, Box, Torus, HalfSpace, Transformed>;

  static Geometry sphere(const Point3& center, double radius);
  static Geometry capsule(const Point3& a, const Point3& b, double radius);
  static Geometry box(const Point3& lo, const Point3& hi);
  static Geometry torus(const Point3& center, const Vec3& axis, double major_radius,
                        double minor_radius);
  static Geometry half_space(const Point3& point, const Vec3& normal);
  /// Rigid motion plus uniform scale; `rotation` must be proper orthogonal.
  static Geometry transformed(Geometry inner, const Mat3& rotation, const Vec3& translation,
                              double scale = 1.0);

  const Shape& shape() const { return shape_; }

  /// Length scale used for relative tolerances.
  double characteristic_size() const;

  std::string describe() const;

 private:
  explicit Geometry(Shape s) : shape_(std::move(s)) {}
  Shape shape_;
};

bool contains(const Geometry& g, const Point3& x);

Point3 closest_point(const Geometry& g, const Point3& x);

/// Classifies the ball of radius `r` about `c` against the solid using one
/// containment query and one closest-point query. A ball exactly tangent to
/// the surface (d == r) is reported as Intersecting.
SphereClass classify_sphere(const Geometry& g, const Point3& c, double r);

/// Closed-form volume of the solid. Throws NoAnalyticVolume for half-spaces.
double exact_volume(const Geometry& g);

}  // namespace volfrac

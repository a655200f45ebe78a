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

#include "volfrac/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

namespace volfrac {

namespace {

constexpr std::array<Vec3, 3> kTieDirections{Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}};

// First of +x, +y, +z with a usable component orthogonal to `u` (unit),
// projected and normalized.
Vec3 tie_direction_perpendicular(const Vec3& u) {
  for (const Vec3& e : kTieDirections) {
    const Vec3 p = e - dot(e, u) * u;
    const double len = norm(p);
    if (len > 1e-6) return p / len;
  }
  return kTieDirections[0];  // unreachable for a unit u
}

void require(bool ok, const char* msg) {
  if (!ok) throw GeometryError(msg);
}

bool finite_positive(double v) { return std::isfinite(v) && v > 0.0; }

// Closest point on a tube of `radius` about `axis_point`, given the offset
// from the axis point and a fallback direction for the zero-offset case.
Point3 tube_surface_point(const Point3& axis_point, const Vec3& offset, double radius,
                          const Vec3& fallback) {
  const double len = norm(offset);
  const Vec3 dir = len > 0.0 ? offset / len : fallback;
  return axis_point + radius * dir;
}

Point3 capsule_axis_point(const Capsule& c, const Point3& x) {
  const Vec3 ab = c.b - c.a;
  const double t = std::clamp(dot(x - c.a, ab) / dot(ab, ab), 0.0, 1.0);
  return c.a + t * ab;
}

struct TorusFrame {
  Point3 ring_point;
  Vec3 radial;
};

TorusFrame torus_frame(const Torus& t, const Point3& x) {
  const Vec3 w = x - t.center;
  const Vec3 planar = w - dot(w, t.axis) * t.axis;
  const double rho = norm(planar);
  const Vec3 radial = rho > 0.0 ? planar / rho : tie_direction_perpendicular(t.axis);
  return {t.center + t.major_radius * radial, radial};
}

struct ContainsVisitor {
  const Point3& x;

  bool operator()(const Sphere& s) const { return distance(x, s.center) <= s.radius; }
  bool operator()(const Capsule& c) const {
    return distance(x, capsule_axis_point(c, x)) <= c.radius;
  }
  bool operator()(const Box& b) const {
    return b.lo.x <= x.x && x.x <= b.hi.x && b.lo.y <= x.y && x.y <= b.hi.y && b.lo.z <= x.z &&
           x.z <= b.hi.z;
  }
  bool operator()(const Torus& t) const {
    return distance(x, torus_frame(t, x).ring_point) <= t.minor_radius;
  }
  bool operator()(const HalfSpace& h) const { return dot(x - h.point, h.normal) <= 0.0; }
  bool operator()(const Transformed& t) const {
    const Point3 local = t.rotation.transposed() * (x - t.translation) / t.scale;
    return contains(*t.inner, local);
  }
};

struct ClosestVisitor {
  const Point3& x;

  Point3 operator()(const Sphere& s) const {
    return tube_surface_point(s.center, x - s.center, s.radius, kTieDirections[0]);
  }
  Point3 operator()(const Capsule& c) const {
    const Vec3 ab = c.b - c.a;
    const Vec3 axis = ab / norm(ab);
    const double t = dot(x - c.a, ab) / dot(ab, ab);
    const Point3 q = capsule_axis_point(c, x);
    // Along the cylindrical part take the offset orthogonal to the axis, so
    // points on the axis hit the tie rule instead of a rounding residue.
    const Vec3 offset =
        t > 0.0 && t < 1.0 ? (x - c.a) - dot(x - c.a, axis) * axis : x - q;
    return tube_surface_point(q, offset, c.radius, tie_direction_perpendicular(axis));
  }
  Point3 operator()(const Box& b) const {
    if (!ContainsVisitor{x}(b)) {
      return {std::clamp(x.x, b.lo.x, b.hi.x), std::clamp(x.y, b.lo.y, b.hi.y),
              std::clamp(x.z, b.lo.z, b.hi.z)};
    }
    // Interior: project onto the nearest face. Candidate order +x,+y,+z,-x,-y,-z
    // with strict improvement resolves ties.
    int best_axis = 0;
    double best_value = b.hi.x;
    double best_dist = b.hi.x - x.x;
    for (int k = 0; k < 3; ++k) {
      const double d = b.hi[k] - x[k];
      if (d < best_dist) {
        best_dist = d;
        best_axis = k;
        best_value = b.hi[k];
      }
    }
    for (int k = 0; k < 3; ++k) {
      const double d = x[k] - b.lo[k];
      if (d < best_dist) {
        best_dist = d;
        best_axis = k;
        best_value = b.lo[k];
      }
    }
    Point3 p = x;
    p[best_axis] = best_value;
    return p;
  }
  Point3 operator()(const Torus& t) const {
    const TorusFrame f = torus_frame(t, x);
    const Vec3 tangent = cross(t.axis, f.radial);
    return tube_surface_point(f.ring_point, x - f.ring_point, t.minor_radius,
                              tie_direction_perpendicular(tangent));
  }
  Point3 operator()(const HalfSpace& h) const {
    return x - dot(x - h.point, h.normal) * h.normal;
  }
  Point3 operator()(const Transformed& t) const {
    const Point3 local = t.rotation.transposed() * (x - t.translation) / t.scale;
    return t.scale * (t.rotation * closest_point(*t.inner, local)) + t.translation;
  }
};

struct VolumeVisitor {
  double operator()(const Sphere& s) const {
    return 4.0 / 3.0 * std::numbers::pi * s.radius * s.radius * s.radius;
  }
  double operator()(const Capsule& c) const {
    const double r = c.radius;
    return std::numbers::pi * r * r * distance(c.a, c.b) + 4.0 / 3.0 * std::numbers::pi * r * r * r;
  }
  double operator()(const Box& b) const {
    return (b.hi.x - b.lo.x) * (b.hi.y - b.lo.y) * (b.hi.z - b.lo.z);
  }
  double operator()(const Torus& t) const {
    return 2.0 * std::numbers::pi * std::numbers::pi * t.major_radius * t.minor_radius *
           t.minor_radius;
  }
  double operator()(const HalfSpace&) const {
    throw NoAnalyticVolume("half-space has no analytic volume");
  }
  double operator()(const Transformed& t) const {
    return t.scale * t.scale * t.scale * exact_volume(*t.inner);
  }
};

struct SizeVisitor {
  double operator()(const Sphere& s) const { return s.radius; }
  double operator()(const Capsule& c) const { return c.radius + 0.5 * distance(c.a, c.b); }
  double operator()(const Box& b) const {
    return std::max({b.hi.x - b.lo.x, b.hi.y - b.lo.y, b.hi.z - b.lo.z});
  }
  double operator()(const Torus& t) const { return t.major_radius + t.minor_radius; }
  double operator()(const HalfSpace&) const { return 1.0; }
  double operator()(const Transformed& t) const { return t.scale * t.inner->characteristic_size(); }
};

struct DescribeVisitor {
  std::ostream& os;
  void operator()(const Sphere& s) const { os << "sphere center=" << s.center << " r=" << s.radius; }
  void operator()(const Capsule& c) const {
    os << "capsule a=" << c.a << " b=" << c.b << " r=" << c.radius;
  }
  void operator()(const Box& b) const { os << "box lo=" << b.lo << " hi=" << b.hi; }
  void operator()(const Torus& t) const {
    os << "torus center=" << t.center << " axis=" << t.axis << " R=" << t.major_radius
       << " r=" << t.minor_radius;
  }
  void operator()(const HalfSpace& h) const {
    os << "half-space point=" << h.point << " normal=" << h.normal;
  }
  void operator()(const Transformed& t) const {
    os << "transformed(scale=" << t.scale << " translation=" << t.translation << ") of "
       << t.inner->describe();
  }
};

}  // namespace

const char* to_string(SphereClass c) {
  switch (c) {
    case SphereClass::FullyInside:
      return "fully-inside";
    case SphereClass::FullyOutside:
      return "fully-outside";
    case SphereClass::Intersecting:
      return "intersecting";
  }
  return "unknown";
}

Geometry Geometry::sphere(const Point3& center, double radius) {
  require(is_finite(center), "sphere center must be finite");
  require(finite_positive(radius), "sphere radius must be positive");
  return Geometry(Sphere{center, radius});
}

Geometry Geometry::capsule(const Point3& a, const Point3& b, double radius) {
  require(is_finite(a) && is_finite(b), "capsule endpoints must be finite");
  require(finite_positive(radius), "capsule radius must be positive");
  require(distance(a, b) > 0.0, "capsule endpoints must differ");
  return Geometry(Capsule{a, b, radius});
}

Geometry Geometry::box(const Point3& lo, const Point3& hi) {
  require(is_finite(lo) && is_finite(hi), "box corners must be finite");
  require(lo.x < hi.x && lo.y < hi.y && lo.z < hi.z, "box requires lo < hi componentwise");
  return Geometry(Box{lo, hi});
}

Geometry Geometry::torus(const Point3& center, const Vec3& axis, double major_radius,
                         double minor_radius) {
  require(is_finite(center) && is_finite(axis), "torus parameters must be finite");
  const double len = norm(axis);
  require(len > 0.0, "torus axis must be nonzero");
  require(finite_positive(minor_radius), "torus minor radius must be positive");
  require(std::isfinite(major_radius) && major_radius > minor_radius,
          "torus requires major radius > minor radius");
  return Geometry(Torus{center, axis / len, major_radius, minor_radius});
}

Geometry Geometry::half_space(const Point3& point, const Vec3& normal) {
  require(is_finite(point) && is_finite(normal), "half-space parameters must be finite");
  const double len = norm(normal);
  require(len > 0.0, "half-space normal must be nonzero");
  return Geometry(HalfSpace{point, normal / len});
}

Geometry Geometry::transformed(Geometry inner, const Mat3& rotation, const Vec3& translation,
                               double scale) {
  require(finite_positive(scale), "transform scale must be positive");
  require(is_finite(translation), "transform translation must be finite");
  const Mat3 rtr = [&] {
    Mat3 out;
    const Mat3 rt = rotation.transposed();
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        double s = 0.0;
        for (int k = 0; k < 3; ++k) s += rt(i, k) * rotation(k, j);
        out(i, j) = s;
      }
    return out;
  }();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      require(std::abs(rtr(i, j) - (i == j ? 1.0 : 0.0)) < 1e-9,
              "transform rotation must be orthogonal (non-uniform scaling is not supported)");
  require(rotation.determinant() > 0.0, "transform rotation must be proper (no reflection)");
  return Geometry(
      Transformed{std::make_shared<const Geometry>(std::move(inner)), rotation, translation, scale});
}

double Geometry::characteristic_size() const { return std::visit(SizeVisitor{}, shape_); }

std::string Geometry::describe() const {
  std::ostringstream os;
  std::visit(DescribeVisitor{os}, shape_);
  return os.str();
}

bool contains(const Geometry& g, const Point3& x) {
  return std::visit(ContainsVisitor{x}, g.shape());
}

Point3 closest_point(const Geometry& g, const Point3& x) {
  return std::visit(ClosestVisitor{x}, g.shape());
}

SphereClass classify_sphere(const Geometry& g, const Point3& c, double r) {
  const double d = distance(c, closest_point(g, c));
  if (d > r) return contains(g, c) ? SphereClass::FullyInside : SphereClass::FullyOutside;
  return SphereClass::Intersecting;
}

double exact_volume(const Geometry& g) { return std::visit(VolumeVisitor{}, g.shape()); }

}  // namespace volfrac

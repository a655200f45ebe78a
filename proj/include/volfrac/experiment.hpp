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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "volfrac/geometry.hpp"
#include "volfrac/hexmesh.hpp"
#include "volfrac/insertion.hpp"
#include "volfrac/kdtree.hpp"

namespace volfrac {

/// Parses "X,Y,Z". Throws ConfigError on anything else.
Vec3 parse_vec3(const std::string& s);

/// Parses "K0..K1" (or a single "K") into an ascending inclusive range.
std::pair<int, int> parse_nsub_range(const std::string& s);

enum class MeshTransform { Sinusoidal, ShearScaling, MirrorX };

/// Accepts "sinusoidal", "shear_scaling" and "mirror_x".
MeshTransform parse_mesh_transform(const std::string& s);
HexMesh apply_transform(const HexMesh& mesh, MeshTransform t);

struct MeshSpec {
  Point3 lo{-2, -2, -2};
  Point3 hi{2, 2, 2};
  int n = 32;
  std::vector<MeshTransform> transforms;  ///< applied in order
};

HexMesh build_mesh(const MeshSpec& spec);

/// Flat parameter set for the primitives; unused fields are ignored. An
/// optional rigid motion and uniform scale wraps the primitive when any of
/// translate / rotate_deg / scale differ from identity.
struct GeometrySpec {
  std::string kind = "sphere";  ///< sphere | capsule | box | torus | halfspace
  Point3 center{0, 0, 0};
  double radius = 1.0;
  Point3 a{-0.51, -0.49, -0.52};
  Point3 b{0.49, 0.51, 0.48};
  Point3 lo{-0.5, -0.5, -0.5};
  Point3 hi{0.5, 0.5, 0.5};
  Vec3 axis{0, 0, 1};
  double major_radius = 1.0;
  double minor_radius = 0.25;
  Vec3 normal{0, 0, 1};
  Vec3 translate{0, 0, 0};
  Vec3 rotate_axis{0, 0, 1};
  double rotate_deg = 0.0;
  double scale = 1.0;
};

Geometry build_geometry(const GeometrySpec& spec);

struct ConvergenceRow {
  int n_sub = 0;
  std::uint64_t n_s = 0;  ///< (2^n_sub)^3
  double volume = 0.0;
  double rel_error = 0.0;
  double seconds = 0.0;
  InsertionStats stats;
};

/// One insertion per n_sub in [nsub_lo, nsub_hi]; relative error against
/// exact_volume(g), which must exist.
std::vector<ConvergenceRow> run_convergence(const HexMesh& mesh, const KdTree& tree,
                                            const Geometry& g, SamplingMethod method, int nsub_lo,
                                            int nsub_hi, unsigned threads = 1);

/// Least-squares slope of log(rel_error) against log(2^-n_sub) over the last
/// three rows. Empty with fewer than two rows or a non-positive error.
std::optional<double> convergence_slope(std::span<const ConvergenceRow> rows);

/// Header "n_sub,n_s,rel_error,seconds"; reals with 17 significant digits.
void write_convergence_csv(std::ostream& os, std::span<const ConvergenceRow> rows);

void write_stats(std::ostream& os, const InsertionStats& stats);
void write_stats_csv(std::ostream& os, const InsertionStats& stats, double volume,
                     std::optional<double> rel_error);

struct QualityBin {
  double lo = 0.0;
  double hi = 0.0;
  std::size_t count = 0;
};

struct QualityReport {
  std::vector<QualityBin> bins;  ///< [-1,0), [0,1e-3), then decades up to [0.1,1]
  std::size_t elements = 0;
  std::size_t degenerate = 0;
  double min_quality = 0.0;
  double max_quality = 0.0;
  double band_lo = 0.014;
  double band_hi = 0.1;
  double fraction_in_band = 0.0;  ///< share of elements with quality in [band_lo, band_hi]
};

QualityReport quality_report(const HexMesh& mesh, double band_lo = 0.014, double band_hi = 0.1);

/// Header "bin_lo,bin_hi,count,fraction".
void write_quality_csv(std::ostream& os, const QualityReport& report);

}  // namespace volfrac

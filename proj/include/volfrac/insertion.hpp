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
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "volfrac/geometry.hpp"
#include "volfrac/hexmesh.hpp"
#include "volfrac/kdtree.hpp"

namespace volfrac {

enum class SamplingMethod { AmrPlane, UniformSampling };

const char* to_string(SamplingMethod m);
/// Accepts "amr" and "uniform".
SamplingMethod parse_sampling_method(const std::string& s);

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kMaxSubdivisions = 12;

struct InsertionConfig {
  int n_sub = 0;  ///< maximum octree depth (AMR) or uniform refinement level
  SamplingMethod method = SamplingMethod::AmrPlane;
  unsigned threads = 1;  ///< workers for per-element sampling; never changes results

  /// Throws ConfigError unless 0 <= n_sub <= kMaxSubdivisions and threads >= 1.
  void validate() const;
};

struct InsertionStats {
  std::size_t total_hexes = 0;
  std::size_t hexes_hit = 0;     ///< leaves reached and classified intersecting
  std::size_t subhexes_hit = 0;  ///< finest-level intersecting subhexes (plane cuts)
  std::uint64_t sample_points = 0;  ///< in/out queries issued by uniform sampling
  int n_sub = 0;
  SamplingMethod method = SamplingMethod::AmrPlane;
  std::optional<double> speedup;  ///< AMR only, when subhexes_hit > 0
  double max_clamp_excursion = 0.0;  ///< largest distance of a raw fraction outside [0, 1]
  double tree_build_seconds = 0.0;
  double insert_seconds = 0.0;
};

/// One volume fraction per element, in [0, 1].
struct VolumeFractionField {
  std::vector<double> values;

  std::size_t size() const { return values.size(); }
  double operator[](std::size_t e) const { return values[e]; }
};

struct InsertionResult {
  VolumeFractionField field;
  InsertionStats stats;
};

struct ElementFraction {
  double fraction = 0.0;   ///< clamped to [0, 1]
  double unclamped = 0.0;  ///< accumulated volume / element volume
  std::size_t subhexes_hit = 0;
};

/// Region of the reference cube [-1,1]^3: lo corner plus edge length.
struct RefBox {
  RefCoord lo{-1, -1, -1};
  double size = 2.0;

  /// Eight children, x fastest then y then z.
  std::array<RefBox, 8> children() const;
};

/// Physical corners of the subhex covering `box` under the element's trilinear map.
HexCorners map_subhex(const HexCorners& element, const RefBox& box);

/// Descends the k-d tree assigning 1 / 0 to nodes whose bounding sphere is
/// fully inside / outside, and samples each intersecting leaf element with the
/// configured method. Throws DegenerateElementError if a sampled element has
/// non-positive volume; no partial field is returned.
InsertionResult insert_geometry(const HexMesh& mesh, const KdTree& tree, const Geometry& g,
                                const InsertionConfig& cfg);

/// Same result without the tree: every element is classified on its own
/// sphere. Used to check that acceleration never changes values.
InsertionResult insert_geometry_exhaustive(const HexMesh& mesh, const Geometry& g,
                                           const InsertionConfig& cfg);

/// Octree sampling of one element: subhexes fully inside contribute their
/// volume, fully outside contribute nothing, intersecting ones recurse until
/// depth n_sub where plane_fragment_volume is used.
ElementFraction amr_element_fraction(const HexMesh& mesh, std::size_t e, const Geometry& g,
                                     int n_sub);

/// Volume of the subhex on the solid's side of the tangent plane at the
/// closest surface point to the subhex's mean-corner centroid. Returns half
/// the subhex volume when the centroid lies on the surface.
double plane_fragment_volume(const HexCorners& subhex, const Geometry& g);

/// Midpoint sampling on the (2^n_sub)^3 reference lattice with det J weights.
double uniform_element_fraction(const HexMesh& mesh, std::size_t e, const Geometry& g, int n_sub);

/// Sum of fraction * element volume in element order.
double total_volume(const VolumeFractionField& field, const HexMesh& mesh);

/// 8^n_sub * total_hexes / subhexes_hit: the cost ratio of plane-sampling
/// every finest subhex against only the ones actually hit. Empty when
/// subhexes_hit is 0.
std::optional<double> compute_speedup(std::size_t total_hexes, std::size_t subhexes_hit, int n_sub);
std::optional<double> compute_speedup(const InsertionStats& stats);

}  // namespace volfrac

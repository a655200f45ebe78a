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

#include "volfrac/insertion.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <thread>

#include "volfrac/clip.hpp"

namespace volfrac {

namespace {

using Clock = std::chrono::steady_clock;

struct AmrAccumulator {
  double volume = 0.0;
  std::size_t hits = 0;
};

void amr_recurse(const HexCorners& element, const RefBox& box, int depth, int n_sub,
                 const Geometry& g, AmrAccumulator& acc) {
  const HexCorners sub = map_subhex(element, box);
  const BoundingSphere s = bounding_sphere(sub);
  switch (classify_sphere(g, s.center, s.radius)) {
    case SphereClass::FullyInside:
      acc.volume += tet_decomposition_volume(sub);
      return;
    case SphereClass::FullyOutside:
      return;
    case SphereClass::Intersecting:
      break;
  }
  if (depth == n_sub) {
    acc.volume += plane_fragment_volume(sub, g);
    ++acc.hits;
    return;
  }
  for (const RefBox& child : box.children()) amr_recurse(element, child, depth + 1, n_sub, g, acc);
}

struct LeafResult {
  double fraction = 0.0;
  double excursion = 0.0;
  std::size_t subhexes_hit = 0;
};

double unit_excursion(double v) { return std::max({0.0, v - 1.0, -v}); }

LeafResult sample_leaf(const HexMesh& mesh, std::size_t e, const Geometry& g,
                       const InsertionConfig& cfg) {
  LeafResult r;
  if (cfg.method == SamplingMethod::AmrPlane) {
    const ElementFraction f = amr_element_fraction(mesh, e, g, cfg.n_sub);
    r.fraction = f.fraction;
    r.subhexes_hit = f.subhexes_hit;
    r.excursion = unit_excursion(f.unclamped);
  } else {
    r.fraction = uniform_element_fraction(mesh, e, g, cfg.n_sub);
  }
  return r;
}

// Samples `work` elements on cfg.threads workers. Each element writes only its
// own slot, so the output does not depend on scheduling.
std::vector<LeafResult> sample_leaves(const HexMesh& mesh, std::span<const std::uint32_t> work,
                                      const Geometry& g, const InsertionConfig& cfg) {
  std::vector<LeafResult> results(work.size());
  constexpr std::size_t kChunk = 8;
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(cfg.threads);

  auto worker = [&](unsigned id) {
    try {
      for (;;) {
        const std::size_t begin = next.fetch_add(kChunk);
        if (begin >= work.size()) break;
        const std::size_t end = std::min(work.size(), begin + kChunk);
        for (std::size_t i = begin; i < end; ++i) results[i] = sample_leaf(mesh, work[i], g, cfg);
      }
    } catch (...) {
      errors[id] = std::current_exception();
      next.store(work.size());
    }
  };

  if (cfg.threads <= 1 || work.size() <= kChunk) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(cfg.threads);
    for (unsigned t = 0; t < cfg.threads; ++t) pool.emplace_back(worker, t);
  }
  for (const auto& err : errors)
    if (err) std::rethrow_exception(err);
  return results;
}

InsertionResult finish(const HexMesh& mesh, const Geometry& g, const InsertionConfig& cfg,
                       std::vector<double> values, std::span<const std::uint32_t> work,
                       Clock::time_point start) {
  const auto leaves = sample_leaves(mesh, work, g, cfg);

  InsertionResult out;
  InsertionStats& st = out.stats;
  st.total_hexes = mesh.num_elements();
  st.hexes_hit = work.size();
  st.n_sub = cfg.n_sub;
  st.method = cfg.method;
  for (std::size_t i = 0; i < work.size(); ++i) {
    values[work[i]] = leaves[i].fraction;
    st.subhexes_hit += leaves[i].subhexes_hit;
    st.max_clamp_excursion = std::max(st.max_clamp_excursion, leaves[i].excursion);
  }
  if (cfg.method == SamplingMethod::AmrPlane) {
    st.speedup = compute_speedup(st);
  } else {
    st.sample_points = static_cast<std::uint64_t>(work.size()) << (3 * cfg.n_sub);
  }
  out.field.values = std::move(values);
  st.insert_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return out;
}

}  // namespace

const char* to_string(SamplingMethod m) {
  return m == SamplingMethod::AmrPlane ? "amr" : "uniform";
}

SamplingMethod parse_sampling_method(const std::string& s) {
  if (s == "amr") return SamplingMethod::AmrPlane;
  if (s == "uniform") return SamplingMethod::UniformSampling;
  throw ConfigError("unknown sampling method '" + s + "' (expected amr or uniform)");
}

void InsertionConfig::validate() const {
  if (n_sub < 0 || n_sub > kMaxSubdivisions)
    throw ConfigError("n_sub must lie in [0, " + std::to_string(kMaxSubdivisions) + "]");
  if (threads < 1) throw ConfigError("at least one worker thread is required");
}

std::array<RefBox, 8> RefBox::children() const {
  const double h = 0.5 * size;
  std::array<RefBox, 8> out;
  int c = 0;
  for (int k = 0; k < 2; ++k)
    for (int j = 0; j < 2; ++j)
      for (int i = 0; i < 2; ++i)
        out[c++] = RefBox{{lo.xi + i * h, lo.eta + j * h, lo.zeta + k * h}, h};
  return out;
}

HexCorners map_subhex(const HexCorners& element, const RefBox& box) {
  HexCorners sub;
  for (int a = 0; a < 8; ++a) {
    const RefCoord& s = kRefCorners[a];
    const RefCoord r{box.lo.xi + (s.xi > 0 ? box.size : 0.0),
                     box.lo.eta + (s.eta > 0 ? box.size : 0.0),
                     box.lo.zeta + (s.zeta > 0 ? box.size : 0.0)};
    sub[a] = trilinear_map(element, r);
  }
  return sub;
}

InsertionResult insert_geometry(const HexMesh& mesh, const KdTree& tree, const Geometry& g,
                                const InsertionConfig& cfg) {
  cfg.validate();
  if (tree.num_elements() != mesh.num_elements())
    throw ConfigError("k-d tree was built for a different mesh");
  const auto start = Clock::now();

  std::vector<double> values(mesh.num_elements(), 0.0);
  std::vector<std::uint32_t> work;
  std::vector<std::int32_t> stack{0};
  while (!stack.empty()) {
    const auto& node = tree.node(static_cast<std::size_t>(stack.back()));
    stack.pop_back();
    switch (classify_sphere(g, node.sphere.center, node.sphere.radius)) {
      case SphereClass::FullyInside:
        for (auto e : tree.elements(node)) values[e] = 1.0;
        continue;
      case SphereClass::FullyOutside:
        continue;
      case SphereClass::Intersecting:
        break;
    }
    if (node.is_leaf()) {
      work.push_back(tree.elements(node).front());
    } else {
      stack.push_back(node.right);
      stack.push_back(node.left);
    }
  }

  InsertionResult out = finish(mesh, g, cfg, std::move(values), work, start);
  out.stats.tree_build_seconds = tree.build_seconds();
  return out;
}

InsertionResult insert_geometry_exhaustive(const HexMesh& mesh, const Geometry& g,
                                           const InsertionConfig& cfg) {
  cfg.validate();
  const auto start = Clock::now();
  std::vector<double> values(mesh.num_elements(), 0.0);
  std::vector<std::uint32_t> work;
  for (std::size_t e = 0; e < mesh.num_elements(); ++e) {
    const auto c = mesh.corners(e);
    const BoundingSphere s = bounding_sphere(c);
    switch (classify_sphere(g, s.center, s.radius)) {
      case SphereClass::FullyInside:
        values[e] = 1.0;
        break;
      case SphereClass::FullyOutside:
        break;
      case SphereClass::Intersecting:
        work.push_back(static_cast<std::uint32_t>(e));
        break;
    }
  }
  return finish(mesh, g, cfg, std::move(values), work, start);
}

ElementFraction amr_element_fraction(const HexMesh& mesh, std::size_t e, const Geometry& g,
                                     int n_sub) {
  if (n_sub < 0) throw ConfigError("n_sub must be non-negative");
  const double vol = element_volume(mesh, e);
  AmrAccumulator acc;
  amr_recurse(mesh.corners(e), RefBox{}, 0, n_sub, g, acc);
  ElementFraction f;
  f.unclamped = acc.volume / vol;
  f.fraction = std::clamp(f.unclamped, 0.0, 1.0);
  f.subhexes_hit = acc.hits;
  return f;
}

double plane_fragment_volume(const HexCorners& subhex, const Geometry& g) {
  const Point3 c = corner_mean(subhex);
  const Point3 xp = closest_point(g, c);
  const double d = distance(c, xp);
  if (d < 1e-12 * hex_diameter(subhex)) return 0.5 * tet_decomposition_volume(subhex);
  const Vec3 outward = contains(g, c) ? (xp - c) / d : (c - xp) / d;
  return clipped_hex_volume(subhex, Plane{xp, outward});
}

double uniform_element_fraction(const HexMesh& mesh, std::size_t e, const Geometry& g, int n_sub) {
  if (n_sub < 0) throw ConfigError("n_sub must be non-negative");
  const double vol = element_volume(mesh, e);
  const HexCorners c = mesh.corners(e);
  const int m = 1 << n_sub;
  const double step = 2.0 / m;
  double inside = 0.0;
  for (int k = 0; k < m; ++k)
    for (int j = 0; j < m; ++j)
      for (int i = 0; i < m; ++i) {
        const RefCoord r{-1.0 + (i + 0.5) * step, -1.0 + (j + 0.5) * step,
                         -1.0 + (k + 0.5) * step};
        if (contains(g, trilinear_map(c, r))) inside += jacobian_det(c, r);
      }
  // Reference weight per sample is 8 / n_s = step^3.
  return std::clamp(inside * step * step * step / vol, 0.0, 1.0);
}

double total_volume(const VolumeFractionField& field, const HexMesh& mesh) {
  if (field.size() != mesh.num_elements())
    throw ConfigError("volume fraction field does not match the mesh");
  double v = 0.0;
  for (std::size_t e = 0; e < mesh.num_elements(); ++e) v += field[e] * element_volume(mesh, e);
  return v;
}

std::optional<double> compute_speedup(std::size_t total_hexes, std::size_t subhexes_hit,
                                      int n_sub) {
  if (subhexes_hit == 0) return std::nullopt;
  return std::ldexp(static_cast<double>(total_hexes), 3 * n_sub) /
         static_cast<double>(subhexes_hit);
}

std::optional<double> compute_speedup(const InsertionStats& stats) {
  return compute_speedup(stats.total_hexes, stats.subhexes_hit, stats.n_sub);
}

}  // namespace volfrac

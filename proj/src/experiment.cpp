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

#include "volfrac/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <limits>
#include <numbers>
#include <ostream>

namespace volfrac {

namespace {

double parse_double(std::string_view s, const std::string& whole) {
  double v = 0.0;
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  while (first < last && *first == ' ') ++first;
  while (last > first && last[-1] == ' ') --last;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || !std::isfinite(v))
    throw ConfigError("cannot parse '" + whole + "' as numbers");
  return v;
}

int parse_int(std::string_view s, const std::string& whole) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw ConfigError("cannot parse '" + whole + "' as an n_sub range");
  return v;
}

}  // namespace

Vec3 parse_vec3(const std::string& s) {
  Vec3 v;
  std::size_t start = 0;
  for (int k = 0; k < 3; ++k) {
    const std::size_t comma = s.find(',', start);
    const bool last = k == 2;
    if (last != (comma == std::string::npos))
      throw ConfigError("expected three comma-separated values, got '" + s + "'");
    const std::size_t end = last ? s.size() : comma;
    v[k] = parse_double(std::string_view(s).substr(start, end - start), s);
    start = end + 1;
  }
  return v;
}

std::pair<int, int> parse_nsub_range(const std::string& s) {
  const std::size_t dots = s.find("..");
  int lo = 0;
  int hi = 0;
  if (dots == std::string::npos) {
    lo = hi = parse_int(s, s);
  } else {
    lo = parse_int(std::string_view(s).substr(0, dots), s);
    hi = parse_int(std::string_view(s).substr(dots + 2), s);
  }
  if (lo < 0 || hi < lo) throw ConfigError("n_sub range '" + s + "' must be ascending and non-negative");
  if (hi > kMaxSubdivisions)
    throw ConfigError("n_sub may not exceed " + std::to_string(kMaxSubdivisions));
  return {lo, hi};
}

MeshTransform parse_mesh_transform(const std::string& s) {
  if (s == "sinusoidal") return MeshTransform::Sinusoidal;
  if (s == "shear_scaling") return MeshTransform::ShearScaling;
  if (s == "mirror_x") return MeshTransform::MirrorX;
  throw ConfigError("unknown mesh transform '" + s +
                    "' (expected sinusoidal, shear_scaling or mirror_x)");
}

HexMesh apply_transform(const HexMesh& mesh, MeshTransform t) {
  switch (t) {
    case MeshTransform::Sinusoidal:
      return apply_sinusoidal_perturbation(mesh);
    case MeshTransform::ShearScaling:
      return apply_shear_scaling(mesh);
    case MeshTransform::MirrorX:
      return apply_mirror_x(mesh);
  }
  return mesh;
}

HexMesh build_mesh(const MeshSpec& spec) {
  HexMesh mesh = build_box_mesh(spec.lo, spec.hi, spec.n);
  for (auto t : spec.transforms) mesh = apply_transform(mesh, t);
  return mesh;
}

Geometry build_geometry(const GeometrySpec& spec) {
  const Geometry base = [&] {
    if (spec.kind == "sphere") return Geometry::sphere(spec.center, spec.radius);
    if (spec.kind == "capsule") return Geometry::capsule(spec.a, spec.b, spec.radius);
    if (spec.kind == "box") return Geometry::box(spec.lo, spec.hi);
    if (spec.kind == "torus")
      return Geometry::torus(spec.center, spec.axis, spec.major_radius, spec.minor_radius);
    if (spec.kind == "halfspace") return Geometry::half_space(spec.center, spec.normal);
    throw ConfigError("unknown geometry kind '" + spec.kind +
                      "' (expected sphere, capsule, box, torus or halfspace)");
  }();
  if (spec.translate == Vec3{} && spec.rotate_deg == 0.0 && spec.scale == 1.0) return base;
  const Mat3 rot = Mat3::rotation(spec.rotate_axis, spec.rotate_deg * std::numbers::pi / 180.0);
  return Geometry::transformed(base, rot, spec.translate, spec.scale);
}

std::vector<ConvergenceRow> run_convergence(const HexMesh& mesh, const KdTree& tree,
                                            const Geometry& g, SamplingMethod method, int nsub_lo,
                                            int nsub_hi, unsigned threads) {
  if (nsub_lo < 0 || nsub_hi < nsub_lo) throw ConfigError("n_sub range must be ascending");
  const double exact = exact_volume(g);
  std::vector<ConvergenceRow> rows;
  for (int n = nsub_lo; n <= nsub_hi; ++n) {
    InsertionConfig cfg{n, method, threads};
    const auto start = std::chrono::steady_clock::now();
    InsertionResult res = insert_geometry(mesh, tree, g, cfg);
    ConvergenceRow row;
    row.n_sub = n;
    row.n_s = std::uint64_t{1} << (3 * n);
    row.volume = total_volume(res.field, mesh);
    row.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    row.rel_error = std::abs(exact - row.volume) / exact;
    row.stats = res.stats;
    rows.push_back(row);
  }
  return rows;
}

std::optional<double> convergence_slope(std::span<const ConvergenceRow> rows) {
  if (rows.size() < 2) return std::nullopt;
  const auto tail = rows.subspan(rows.size() - std::min<std::size_t>(3, rows.size()));
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& r : tail) {
    if (!(r.rel_error > 0.0)) return std::nullopt;
    const double x = -r.n_sub * std::numbers::ln2;
    const double y = std::log(r.rel_error);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double n = static_cast<double>(tail.size());
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

void write_convergence_csv(std::ostream& os, std::span<const ConvergenceRow> rows) {
  os << "n_sub,n_s,rel_error,seconds\n" << std::setprecision(17);
  for (const auto& r : rows)
    os << r.n_sub << ',' << r.n_s << ',' << r.rel_error << ',' << r.seconds << '\n';
}

void write_stats(std::ostream& os, const InsertionStats& s) {
  os << "method:             " << to_string(s.method) << " (n_sub=" << s.n_sub << ")\n"
     << "total hexes:        " << s.total_hexes << '\n'
     << "hexes hit:          " << s.hexes_hit << '\n';
  if (s.method == SamplingMethod::AmrPlane) {
    os << "subhexes hit:       " << s.subhexes_hit << '\n' << "speedup:            ";
    if (s.speedup)
      os << std::setprecision(4) << *s.speedup << "x\n";
    else
      os << "n/a\n";
  } else {
    os << "sample points:      " << s.sample_points << '\n';
  }
  os << std::setprecision(6) << "k-d tree build (s):  " << s.tree_build_seconds << '\n'
     << "insertion (s):      " << s.insert_seconds << '\n';
}

void write_stats_csv(std::ostream& os, const InsertionStats& s, double volume,
                     std::optional<double> rel_error) {
  os << "method,n_sub,total_hexes,hexes_hit,subhexes_hit,sample_points,speedup,"
        "tree_build_seconds,insert_seconds,volume,rel_error\n";
  os << std::setprecision(17) << to_string(s.method) << ',' << s.n_sub << ',' << s.total_hexes
     << ',' << s.hexes_hit << ',' << s.subhexes_hit << ',' << s.sample_points << ',';
  if (s.speedup) os << *s.speedup;
  os << ',' << s.tree_build_seconds << ',' << s.insert_seconds << ',' << volume << ',';
  if (rel_error) os << *rel_error;
  os << '\n';
}

QualityReport quality_report(const HexMesh& mesh, double band_lo, double band_hi) {
  QualityReport rep;
  rep.band_lo = band_lo;
  rep.band_hi = band_hi;
  rep.bins = {{-1.0, 0.0, 0}, {0.0, 1e-3, 0}, {1e-3, 1e-2, 0}, {1e-2, 1e-1, 0}, {1e-1, 1.0, 0}};
  rep.elements = mesh.num_elements();
  rep.min_quality = std::numeric_limits<double>::infinity();
  rep.max_quality = -std::numeric_limits<double>::infinity();
  std::size_t in_band = 0;
  for (std::size_t e = 0; e < mesh.num_elements(); ++e) {
    const ElementQuality q = scaled_jacobian(mesh, e);
    if (q.degenerate) ++rep.degenerate;
    rep.min_quality = std::min(rep.min_quality, q.value);
    rep.max_quality = std::max(rep.max_quality, q.value);
    if (q.value >= band_lo && q.value <= band_hi) ++in_band;
    auto bin = std::find_if(rep.bins.begin(), rep.bins.end(),
                            [&](const QualityBin& b) { return q.value < b.hi; });
    if (bin == rep.bins.end()) bin = std::prev(rep.bins.end());
    ++bin->count;
  }
  if (rep.elements > 0) rep.fraction_in_band = static_cast<double>(in_band) / rep.elements;
  return rep;
}

void write_quality_csv(std::ostream& os, const QualityReport& rep) {
  os << "bin_lo,bin_hi,count,fraction\n";
  for (const auto& b : rep.bins)
    os << std::setprecision(6) << b.lo << ',' << b.hi << ',' << b.count << ','
       << std::setprecision(17) << (rep.elements ? static_cast<double>(b.count) / rep.elements : 0.0) << '\n';
}

}  // namespace volfrac

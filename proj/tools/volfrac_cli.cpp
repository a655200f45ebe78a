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

// volfrac: insert implicit solids into hexahedral meshes as volume fractions.
//
//   volfrac insert   --geom sphere --radius 1 --mesh-n 32 --nsub 3 --out-vtk vf.vtk
//   volfrac converge --geom capsule --radius 0.2 --transform sinusoidal --nsub-range 0..5
//   volfrac quality  --mesh-lo -10,-10,-10 --mesh-hi 10,10,10 --transform sinusoidal
//                    --transform shear_scaling

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>

#include "volfrac/experiment.hpp"
#include "volfrac/vtk_io.hpp"

namespace {

using namespace volfrac;

struct MeshOptions {
  std::string lo = "-2,-2,-2";
  std::string hi = "2,2,2";
  int n = 32;
  std::vector<std::string> transforms;

  MeshSpec spec() const {
    MeshSpec s;
    s.lo = parse_vec3(lo);
    s.hi = parse_vec3(hi);
    s.n = n;
    for (const auto& t : transforms) s.transforms.push_back(parse_mesh_transform(t));
    return s;
  }
};

struct GeometryOptions {
  std::string kind = "sphere";
  std::string center = "0,0,0";
  double radius = 1.0;
  std::string a = "-0.51,-0.49,-0.52";
  std::string b = "0.49,0.51,0.48";
  std::string lo = "-0.5,-0.5,-0.5";
  std::string hi = "0.5,0.5,0.5";
  std::string axis = "0,0,1";
  double major_radius = 1.0;
  double minor_radius = 0.25;
  std::string normal = "0,0,1";
  std::string translate = "0,0,0";
  std::string rotate_axis = "0,0,1";
  double rotate_deg = 0.0;
  double scale = 1.0;

  Geometry build() const {
    GeometrySpec s;
    s.kind = kind;
    s.center = parse_vec3(center);
    s.radius = radius;
    s.a = parse_vec3(a);
    s.b = parse_vec3(b);
    s.lo = parse_vec3(lo);
    s.hi = parse_vec3(hi);
    s.axis = parse_vec3(axis);
    s.major_radius = major_radius;
    s.minor_radius = minor_radius;
    s.normal = parse_vec3(normal);
    s.translate = parse_vec3(translate);
    s.rotate_axis = parse_vec3(rotate_axis);
    s.rotate_deg = rotate_deg;
    s.scale = scale;
    return build_geometry(s);
  }
};

void add_mesh_options(CLI::App* app, MeshOptions& m) {
  app->add_option("--mesh-lo", m.lo, "Mesh box lower corner X,Y,Z")->capture_default_str();
  app->add_option("--mesh-hi", m.hi, "Mesh box upper corner X,Y,Z")->capture_default_str();
  app->add_option("--mesh-n", m.n, "Elements per axis")->capture_default_str();
  app->add_option("--transform", m.transforms,
                  "Vertex transform applied in order: sinusoidal, shear_scaling, mirror_x");
}

void add_geometry_options(CLI::App* app, GeometryOptions& g) {
  app->add_option("--geom", g.kind, "sphere | capsule | box | torus | halfspace")
      ->capture_default_str();
  app->add_option("--center", g.center, "Sphere/torus center, half-space point")
      ->capture_default_str();
  app->add_option("--radius", g.radius, "Sphere or capsule radius")->capture_default_str();
  app->add_option("--a", g.a, "Capsule endpoint A")->capture_default_str();
  app->add_option("--b", g.b, "Capsule endpoint B")->capture_default_str();
  app->add_option("--lo", g.lo, "Box lower corner")->capture_default_str();
  app->add_option("--hi", g.hi, "Box upper corner")->capture_default_str();
  app->add_option("--axis", g.axis, "Torus axis")->capture_default_str();
  app->add_option("--major-radius", g.major_radius, "Torus major radius")->capture_default_str();
  app->add_option("--minor-radius", g.minor_radius, "Torus minor radius")->capture_default_str();
  app->add_option("--normal", g.normal, "Half-space outward normal")->capture_default_str();
  app->add_option("--translate", g.translate, "Rigid translation of the solid");
  app->add_option("--rotate-axis", g.rotate_axis, "Rotation axis of the solid");
  app->add_option("--rotate-deg", g.rotate_deg, "Rotation angle in degrees");
  app->add_option("--scale", g.scale, "Uniform scale of the solid");
}

int run_insert(const GeometryOptions& go, const MeshOptions& mo, const std::string& method, int n_sub,
               unsigned threads, const std::string& out_vtk, const std::string& out_csv) {
  const Geometry g = go.build();
  const InsertionConfig cfg{n_sub, parse_sampling_method(method), threads};
  cfg.validate();
  const HexMesh mesh = build_mesh(mo.spec());
  const KdTree tree(mesh);
  const InsertionResult res = insert_geometry(mesh, tree, g, cfg);
  const double volume = total_volume(res.field, mesh);

  std::optional<double> rel_error;
  try {
    const double exact = exact_volume(g);
    rel_error = std::abs(exact - volume) / exact;
  } catch (const NoAnalyticVolume&) {
  }

  std::cout << "geometry:           " << g.describe() << '\n';
  write_stats(std::cout, res.stats);
  std::cout << std::setprecision(17) << "inserted volume:    " << volume << '\n';
  if (rel_error) std::cout << "relative error:     " << *rel_error << '\n';

  if (!out_vtk.empty()) {
    const CellScalar vf{"volume_fraction", res.field.values};
    write_vtk(out_vtk, mesh, std::span<const CellScalar>(&vf, 1));
  }
  if (!out_csv.empty()) {
    std::ofstream csv(out_csv);
    if (!csv) throw std::runtime_error("cannot open '" + out_csv + "' for writing");
    write_stats_csv(csv, res.stats, volume, rel_error);
    if (!csv) throw std::runtime_error("failed writing '" + out_csv + "'");
  }
  return 0;
}

int run_converge(const GeometryOptions& go, const MeshOptions& mo, const std::string& method,
                 const std::string& range, unsigned threads, const std::string& out_csv) {
  const Geometry g = go.build();
  const auto [lo, hi] = parse_nsub_range(range);
  const SamplingMethod m = parse_sampling_method(method);
  exact_volume(g);  // fail before any work if there is no reference volume
  const HexMesh mesh = build_mesh(mo.spec());
  const KdTree tree(mesh);
  const auto rows = run_convergence(mesh, tree, g, m, lo, hi, threads);

  write_convergence_csv(std::cout, rows);
  if (const auto slope = convergence_slope(rows); slope && rows.size() >= 2)
    std::cout << std::setprecision(6) << "# slope (last " << std::min<std::size_t>(3, rows.size())
              << " rows): " << *slope << '\n';
  if (!out_csv.empty()) {
    std::ofstream csv(out_csv);
    if (!csv) throw std::runtime_error("cannot open '" + out_csv + "' for writing");
    write_convergence_csv(csv, rows);
    if (!csv) throw std::runtime_error("failed writing '" + out_csv + "'");
  }
  return 0;
}

int run_quality(const MeshOptions& mo, const std::string& out_csv) {
  const HexMesh mesh = build_mesh(mo.spec());
  const QualityReport rep = quality_report(mesh);
  write_quality_csv(std::cout, rep);
  std::cout << std::setprecision(6) << "# elements: " << rep.elements << '\n'
            << "# min quality: " << rep.min_quality << '\n'
            << "# max quality: " << rep.max_quality << '\n'
            << "# degenerate: " << rep.degenerate << '\n'
            << "# fraction in [" << rep.band_lo << ", " << rep.band_hi
            << "]: " << rep.fraction_in_band << '\n';
  if (!out_csv.empty()) {
    std::ofstream csv(out_csv);
    if (!csv) throw std::runtime_error("cannot open '" + out_csv + "' for writing");
    write_quality_csv(csv, rep);
    if (!csv) throw std::runtime_error("failed writing '" + out_csv + "'");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Volume-fraction insertion of implicit solids into hexahedral meshes"};
  app.set_config("--config", "", "Read options from a TOML/INI file");
  app.require_subcommand(1);

  GeometryOptions geom;
  MeshOptions mesh;
  std::string method = "amr";
  int n_sub = 2;
  std::string range = "0..5";
  unsigned threads = 1;
  std::string out_vtk;
  std::string out_csv;
  std::uint64_t seed = 0;

  auto* insert = app.add_subcommand("insert", "Insert a solid and write the volume fraction field");
  add_geometry_options(insert, geom);
  add_mesh_options(insert, mesh);
  insert->add_option("--method", method, "amr | uniform")->capture_default_str();
  insert->add_option("--nsub", n_sub, "Subdivision level")->capture_default_str();
  insert->add_option("--out-vtk", out_vtk, "Legacy VTK output with CELL_DATA volume_fraction");
  insert->add_option("--out-csv", out_csv, "Statistics CSV output");

  auto* converge = app.add_subcommand("converge", "Relative volume error over a range of n_sub");
  add_geometry_options(converge, geom);
  add_mesh_options(converge, mesh);
  converge->add_option("--method", method, "amr | uniform")->capture_default_str();
  converge->add_option("--nsub-range", range, "K0..K1")->capture_default_str();
  converge->add_option("--out-csv", out_csv, "Convergence CSV output");

  auto* quality = app.add_subcommand("quality", "Scaled-Jacobian histogram of a generated mesh");
  add_mesh_options(quality, mesh);
  quality->add_option("--out-csv", out_csv, "Histogram CSV output");

  for (auto* sub : {insert, converge}) {
    sub->add_option("--threads", threads, "Worker threads")->capture_default_str()->check(
        CLI::PositiveNumber);
    sub->add_option("--seed", seed, "Seed for randomized checks (unused by deterministic runs)");
  }

  CLI11_PARSE(app, argc, argv);

  try {
    if (insert->parsed()) return run_insert(geom, mesh, method, n_sub, threads, out_vtk, out_csv);
    if (converge->parsed()) return run_converge(geom, mesh, method, range, threads, out_csv);
    if (quality->parsed()) return run_quality(mesh, out_csv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

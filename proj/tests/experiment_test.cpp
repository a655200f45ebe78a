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

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "volfrac/vtk_io.hpp"

namespace volfrac {
namespace {

TEST(ExperimentTest, ParseVec3) {
  EXPECT_EQ(parse_vec3("1,2.5,-3e-1"), (Vec3{1, 2.5, -0.3}));
  EXPECT_EQ(parse_vec3(" 1 , 2 , 3 "), (Vec3{1, 2, 3}));
  for (const char* bad : {"", "1,2", "1,2,3,4", "a,b,c", "1,,3", "1,2,inf"})
    EXPECT_THROW(parse_vec3(bad), ConfigError) << bad;
}

TEST(ExperimentTest, ParseNsubRange) {
  EXPECT_EQ(parse_nsub_range("0..5"), std::make_pair(0, 5));
  EXPECT_EQ(parse_nsub_range("3"), std::make_pair(3, 3));
  for (const char* bad : {"5..0", "-1..2", "0..13", "x", "1..", ""})
    EXPECT_THROW(parse_nsub_range(bad), ConfigError) << bad;
}

TEST(ExperimentTest, ParseTransforms) {
  EXPECT_EQ(parse_mesh_transform("sinusoidal"), MeshTransform::Sinusoidal);
  EXPECT_EQ(parse_mesh_transform("shear_scaling"), MeshTransform::ShearScaling);
  EXPECT_EQ(parse_mesh_transform("mirror_x"), MeshTransform::MirrorX);
  EXPECT_THROW(parse_mesh_transform("twist"), ConfigError);
}

TEST(ExperimentTest, BuildMeshAppliesTransformsInOrder) {
  MeshSpec spec{{-1, -1, -1}, {1, 1, 1}, 2, {MeshTransform::Sinusoidal, MeshTransform::ShearScaling}};
  const HexMesh a = build_mesh(spec);
  const HexMesh b = apply_shear_scaling(apply_sinusoidal_perturbation(build_box_mesh({-1, -1, -1}, {1, 1, 1}, 2)));
  for (std::size_t i = 0; i < a.num_vertices(); ++i) EXPECT_EQ(a.vertices()[i], b.vertices()[i]);
}

TEST(ExperimentTest, BuildGeometry) {
  GeometrySpec s;
  EXPECT_TRUE(std::holds_alternative<Sphere>(build_geometry(s).shape()));
  s.kind = "capsule";
  s.radius = 0.2;
  EXPECT_NEAR(exact_volume(build_geometry(s)), 0.25116624534639725, 1e-15);
  s.kind = "sphere";
  s.radius = 1.0;
  s.translate = {1, 0, 0};
  s.scale = 2.0;
  const Geometry moved = build_geometry(s);
  EXPECT_TRUE(std::holds_alternative<Transformed>(moved.shape()));
  EXPECT_NEAR(exact_volume(moved), 8.0 * 4.0 * std::numbers::pi / 3.0, 1e-12);
  EXPECT_TRUE(contains(moved, {2.9, 0, 0}));
  s.kind = "cone";
  EXPECT_THROW(build_geometry(s), ConfigError);
}

TEST(ExperimentTest, UniformConvergenceRows) {
  const HexMesh m = build_box_mesh({-2, -2, -2}, {2, 2, 2}, 8);
  const KdTree t(m);
  const auto rows =
      run_convergence(m, t, Geometry::sphere({0, 0, 0}, 1.0), SamplingMethod::UniformSampling, 0, 5);
  ASSERT_EQ(rows.size(), 6u);
  const std::uint64_t expect[] = {1, 8, 64, 512, 4096, 32768};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].n_s, expect[i]);
    EXPECT_EQ(rows[i].stats.sample_points, rows[i].stats.hexes_hit * expect[i]);
    EXPECT_GE(rows[i].rel_error, 0.0);
  }
  EXPECT_LT(rows.back().rel_error, rows.front().rel_error);
}

TEST(ExperimentTest, ConvergenceSlope) {
  std::vector<ConvergenceRow> rows;
  for (int n = 0; n < 5; ++n) {
    ConvergenceRow r;
    r.n_sub = n;
    r.rel_error = 0.3 * std::pow(2.0, -2.0 * n);
    rows.push_back(r);
  }
  EXPECT_NEAR(*convergence_slope(rows), 2.0, 1e-12);
  // Only the tail is fitted.
  rows[0].rel_error = 1e5;
  EXPECT_NEAR(*convergence_slope(rows), 2.0, 1e-12);
  EXPECT_FALSE(convergence_slope(std::span(rows).first(1)).has_value());
  rows.back().rel_error = 0.0;
  EXPECT_FALSE(convergence_slope(rows).has_value());
}

TEST(ExperimentTest, ConvergenceNeedsAnalyticVolume) {
  const HexMesh m = build_box_mesh({-1, -1, -1}, {1, 1, 1}, 2);
  const KdTree t(m);
  EXPECT_THROW(run_convergence(m, t, Geometry::half_space({0, 0, 0}, {0, 0, 1}),
                               SamplingMethod::AmrPlane, 0, 1),
               NoAnalyticVolume);
}

TEST(ExperimentTest, ConvergenceCsv) {
  ConvergenceRow r;
  r.n_sub = 2;
  r.n_s = 64;
  r.rel_error = 0.1;
  r.seconds = 0.5;
  std::ostringstream os;
  write_convergence_csv(os, std::span(&r, 1));
  EXPECT_EQ(os.str(), "n_sub,n_s,rel_error,seconds\n2,64,0.10000000000000001,0.5\n");
}

TEST(ExperimentTest, StatsCsv) {
  InsertionStats s;
  s.total_hexes = 10;
  s.hexes_hit = 2;
  s.subhexes_hit = 16;
  s.n_sub = 1;
  s.speedup = 5.0;
  std::ostringstream os;
  write_stats_csv(os, s, 1.5, std::nullopt);
  EXPECT_EQ(os.str(),
            "method,n_sub,total_hexes,hexes_hit,subhexes_hit,sample_points,speedup,"
            "tree_build_seconds,insert_seconds,volume,rel_error\namr,1,10,2,16,0,5,0,0,1.5,\n");
}

TEST(ExperimentTest, QualityReports) {
  const QualityReport unit = quality_report(build_box_mesh({0, 0, 0}, {1, 1, 1}, 3));
  EXPECT_EQ(unit.elements, 27u);
  EXPECT_DOUBLE_EQ(unit.min_quality, 1.0);
  EXPECT_EQ(unit.bins.back().count, 27u);
  EXPECT_EQ(unit.fraction_in_band, 0.0);

  const QualityReport mirrored = quality_report(apply_mirror_x(build_box_mesh({0, 0, 0}, {1, 1, 1}, 2)));
  EXPECT_EQ(mirrored.bins.front().count, 8u);
  EXPECT_EQ(mirrored.max_quality, -1.0);

  std::ostringstream os;
  write_quality_csv(os, unit);
  EXPECT_EQ(os.str(),
            "bin_lo,bin_hi,count,fraction\n-1,0,0,0\n0,0.001,0,0\n0.001,0.01,0,0\n"
            "0.01,0.1,0,0\n0.1,1,27,1\n");
}

class CliTest : public ::testing::Test {
 protected:
  std::filesystem::path dir_ = std::filesystem::temp_directory_path() / "volfrac_cli_test";
  void SetUp() override { std::filesystem::create_directories(dir_); }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  int cli(const std::string& args, std::string* out = nullptr) {
    const auto log = dir_ / "stdout.txt";
    const std::string cmd =
        std::string(VOLFRAC_CLI_PATH) + " " + args + " > " + log.string() + " 2>&1";
    const int status = std::system(cmd.c_str());
    if (out) {
      std::ifstream in(log);
      *out = std::string(std::istreambuf_iterator<char>(in), {});
    }
    return status;
  }
};

TEST_F(CliTest, InsertWritesVtkField) {
  const auto vtk = dir_ / "vf.vtk";
  std::string out;
  ASSERT_EQ(cli("insert --geom sphere --radius 1 --mesh-n 32 --nsub 2 --out-vtk " + vtk.string(),
                &out),
            0)
      << out;
  EXPECT_NE(out.find("relative error:"), std::string::npos);
  const VtkDataset d = read_vtk(vtk);
  EXPECT_EQ(d.mesh.num_elements(), 32768u);
  ASSERT_EQ(d.cell_scalars.size(), 1u);
  EXPECT_EQ(d.cell_scalars[0].name, "volume_fraction");
  double sum = 0;
  for (double v : d.cell_scalars[0].values) {
    EXPECT_GE(v, 0.0);
    EXPECT_LE(v, 1.0);
    sum += v;
  }
  EXPECT_NEAR(sum * 0.125 * 0.125 * 0.125, 4.0 * std::numbers::pi / 3.0, 1e-3 * 4.2);
}

TEST_F(CliTest, EmptyIntersectionGivesZeroField) {
  const auto vtk = dir_ / "empty.vtk";
  ASSERT_EQ(cli("insert --geom sphere --center 10,10,10 --radius 0.5 --mesh-n 4 --out-vtk " +
                vtk.string()),
            0);
  const VtkDataset d = read_vtk(vtk);
  for (double v : d.cell_scalars[0].values) EXPECT_EQ(v, 0.0);
}

TEST_F(CliTest, ConvergeOnPerturbedCapsule) {
  const auto csv = dir_ / "conv.csv";
  std::string out;
  ASSERT_EQ(cli("converge --geom capsule --radius 0.2 --transform sinusoidal --mesh-n 16 "
                "--nsub-range 0..3 --out-csv " + csv.string(),
                &out),
            0)
      << out;
  EXPECT_NE(out.find("# slope (last 3 rows):"), std::string::npos);
  std::ifstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "n_sub,n_s,rel_error,seconds");
  int rows = 0;
  double last = 0;
  while (std::getline(in, line)) {
    ++rows;
    std::istringstream ls(line);
    std::string cell;
    for (int k = 0; k < 3; ++k) std::getline(ls, cell, ',');
    last = std::stod(cell);
    EXPECT_TRUE(std::isfinite(last));
    EXPECT_GT(last, 0.0);
  }
  EXPECT_EQ(rows, 4);
  EXPECT_LT(last, 1e-2);
}

TEST_F(CliTest, ConfigFile) {
  const auto cfg = dir_ / "run.toml";
  std::ofstream(cfg) << "[insert]\ngeom = \"torus\"\nmajor-radius = 1.0\nminor-radius = 0.3\n"
                        "mesh-n = 8\nnsub = 1\n";
  std::string out;
  ASSERT_EQ(cli("--config " + cfg.string() + " insert", &out), 0) << out;
  EXPECT_NE(out.find("torus"), std::string::npos) << out;
}

TEST_F(CliTest, InvalidInputFails) {
  EXPECT_NE(cli("insert --geom sphere --radius -1"), 0);
  EXPECT_NE(cli("insert --geom cone"), 0);
  EXPECT_NE(cli("insert --nsub 13"), 0);
  EXPECT_NE(cli("converge --geom halfspace"), 0);
  EXPECT_NE(cli("insert --threads 0"), 0);
  EXPECT_NE(cli("insert --transform mirror_x --mesh-n 4"), 0);
  EXPECT_NE(cli(""), 0);
}

TEST_F(CliTest, QualityReportsBand) {
  std::string out;
  ASSERT_EQ(cli("quality --mesh-lo=-10,-10,-10 --mesh-hi=10,10,10 --mesh-n 8 "
                "--transform sinusoidal --transform shear_scaling",
                &out),
            0);
  EXPECT_NE(out.find("bin_lo,bin_hi,count,fraction"), std::string::npos);
  EXPECT_NE(out.find("# fraction in [0.014, 0.1]:"), std::string::npos);
}

}  // namespace
}  // namespace volfrac

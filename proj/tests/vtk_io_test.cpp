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

#include "volfrac/vtk_io.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "volfrac/hexmesh.hpp"

namespace volfrac {
namespace {

TEST(VtkIoTest, RoundTripIsExact) {
  const HexMesh m =
      apply_shear_scaling(apply_sinusoidal_perturbation(build_box_mesh({-1, -1, -1}, {1, 1, 1}, 3)));
  std::vector<double> vf(m.num_elements());
  for (std::size_t e = 0; e < vf.size(); ++e) vf[e] = std::sin(0.37 * e) * std::sin(0.37 * e);
  const std::vector<CellScalar> scalars{{"volume_fraction", vf}, {"id", std::vector<double>(vf.size(), 1.0 / 3.0)}};

  std::stringstream ss;
  write_vtk(ss, m, scalars);
  const VtkDataset back = read_vtk(ss);

  ASSERT_EQ(back.mesh.num_vertices(), m.num_vertices());
  ASSERT_EQ(back.mesh.num_elements(), m.num_elements());
  for (std::size_t i = 0; i < m.num_vertices(); ++i)
    EXPECT_EQ(back.mesh.vertices()[i], m.vertices()[i]);
  for (std::size_t e = 0; e < m.num_elements(); ++e)
    EXPECT_EQ(back.mesh.elements()[e], m.elements()[e]);
  ASSERT_EQ(back.cell_scalars.size(), 2u);
  EXPECT_EQ(back.cell_scalars[0].name, "volume_fraction");
  EXPECT_EQ(back.cell_scalars[0].values, vf);
  EXPECT_EQ(back.cell_scalars[1].values[0], 1.0 / 3.0);
}

TEST(VtkIoTest, WritesLegacyUnstructuredGrid) {
  const HexMesh m = build_box_mesh({0, 0, 0}, {1, 1, 1}, 1);
  const CellScalar vf{"volume_fraction", {0.5}};
  std::stringstream ss;
  write_vtk(ss, m, std::span<const CellScalar>(&vf, 1));
  const std::string text = ss.str();
  EXPECT_NE(text.find("DATASET UNSTRUCTURED_GRID"), std::string::npos);
  EXPECT_NE(text.find("CELLS 1 9\n8 0 1 3 2 4 5 7 6\n"), std::string::npos);
  EXPECT_NE(text.find("CELL_TYPES 1\n12\n"), std::string::npos);
  EXPECT_NE(text.find("CELL_DATA 1\nSCALARS volume_fraction double 1\nLOOKUP_TABLE default\n0.5\n"),
            std::string::npos);
}

TEST(VtkIoTest, RejectsMismatchedScalars) {
  const HexMesh m = build_box_mesh({0, 0, 0}, {1, 1, 1}, 2);
  const CellScalar bad{"volume_fraction", {0.5}};
  std::stringstream ss;
  EXPECT_THROW(write_vtk(ss, m, std::span<const CellScalar>(&bad, 1)), VtkError);
}

TEST(VtkIoTest, RejectsMalformedInput) {
  std::stringstream not_vtk("hello\n");
  EXPECT_THROW(read_vtk(not_vtk), VtkError);

  std::stringstream truncated("# vtk DataFile Version 3.0\nt\nASCII\nDATASET UNSTRUCTURED_GRID\nPOINTS 2 double\n0 0 0\n");
  EXPECT_THROW(read_vtk(truncated), VtkError);

  std::stringstream wrong_cell(
      "# vtk DataFile Version 3.0\nt\nASCII\nDATASET UNSTRUCTURED_GRID\nPOINTS 4 double\n"
      "0 0 0 1 0 0 0 1 0 0 0 1\nCELLS 1 5\n4 0 1 2 3\nCELL_TYPES 1\n10\n");
  EXPECT_THROW(read_vtk(wrong_cell), VtkError);

  EXPECT_THROW(read_vtk(std::filesystem::path("/nonexistent/dir/x.vtk")), VtkError);
}

TEST(VtkIoTest, FileRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "volfrac_vtk_io_test.vtk";
  const HexMesh m = build_box_mesh({-2, -2, -2}, {2, 2, 2}, 4);
  write_vtk(path, m);
  const VtkDataset back = read_vtk(path);
  EXPECT_EQ(back.mesh.num_elements(), 64u);
  EXPECT_TRUE(back.cell_scalars.empty());
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace volfrac

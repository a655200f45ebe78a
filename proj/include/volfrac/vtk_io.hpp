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

#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "volfrac/hexmesh.hpp"

namespace volfrac {

class VtkError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CellScalar {
  std::string name;
  std::vector<double> values;
};

struct VtkDataset {
  HexMesh mesh;
  std::vector<CellScalar> cell_scalars;
};

/// Legacy ASCII VTK, DATASET UNSTRUCTURED_GRID, cell type 12. Coordinates and
/// scalars are written with 17 significant digits so a read-back is exact.
void write_vtk(std::ostream& os, const HexMesh& mesh, std::span<const CellScalar> cell_scalars = {},
               const std::string& title = "volfrac");
void write_vtk(const std::filesystem::path& path, const HexMesh& mesh,
               std::span<const CellScalar> cell_scalars = {}, const std::string& title = "volfrac");

/// Reads what write_vtk produces: hexahedral cells only, SCALARS cell data.
VtkDataset read_vtk(std::istream& is);
VtkDataset read_vtk(const std::filesystem::path& path);

}  // namespace volfrac

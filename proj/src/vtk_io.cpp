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

#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

namespace volfrac {

namespace {

constexpr int kVtkHexahedron = 12;

std::string next_token(std::istream& is, const char* what) {
  std::string tok;
  if (!(is >> tok)) throw VtkError(std::string("unexpected end of file reading ") + what);
  return tok;
}

template <class T>
T next_value(std::istream& is, const char* what) {
  T v{};
  if (!(is >> v)) throw VtkError(std::string("malformed value reading ") + what);
  return v;
}

void expect(std::istream& is, const std::string& keyword) {
  const std::string tok = next_token(is, keyword.c_str());
  if (tok != keyword) throw VtkError("expected '" + keyword + "', found '" + tok + "'");
}

}  // namespace

void write_vtk(std::ostream& os, const HexMesh& mesh, std::span<const CellScalar> cell_scalars,
               const std::string& title) {
  for (const auto& s : cell_scalars)
    if (s.values.size() != mesh.num_elements())
      throw VtkError("cell scalar '" + s.name + "' does not match the element count");

  os << "# vtk DataFile Version 3.0\n" << title << "\nASCII\nDATASET UNSTRUCTURED_GRID\n";
  os << std::setprecision(17);
  os << "POINTS " << mesh.num_vertices() << " double\n";
  for (const auto& v : mesh.vertices()) os << v.x << ' ' << v.y << ' ' << v.z << '\n';

  const std::size_t ne = mesh.num_elements();
  os << "CELLS " << ne << ' ' << ne * 9 << '\n';
  for (const auto& conn : mesh.elements()) {
    os << 8;
    for (auto idx : conn) os << ' ' << idx;
    os << '\n';
  }
  os << "CELL_TYPES " << ne << '\n';
  for (std::size_t e = 0; e < ne; ++e) os << kVtkHexahedron << '\n';

  if (!cell_scalars.empty()) {
    os << "CELL_DATA " << ne << '\n';
    for (const auto& s : cell_scalars) {
      os << "SCALARS " << s.name << " double 1\nLOOKUP_TABLE default\n";
      for (double v : s.values) os << v << '\n';
    }
  }
  if (!os) throw VtkError("failed writing VTK stream");
}

void write_vtk(const std::filesystem::path& path, const HexMesh& mesh,
               std::span<const CellScalar> cell_scalars, const std::string& title) {
  std::ofstream out(path);
  if (!out) throw VtkError("cannot open '" + path.string() + "' for writing");
  write_vtk(out, mesh, cell_scalars, title);
  out.close();
  if (!out) throw VtkError("failed writing '" + path.string() + "'");
}

VtkDataset read_vtk(std::istream& is) {
  std::string line;
  std::getline(is, line);
  if (line.rfind("# vtk DataFile", 0) != 0) throw VtkError("missing VTK header");
  std::getline(is, line);  // title
  expect(is, "ASCII");
  expect(is, "DATASET");
  expect(is, "UNSTRUCTURED_GRID");

  expect(is, "POINTS");
  const auto np = next_value<std::size_t>(is, "point count");
  next_token(is, "point type");
  std::vector<Point3> verts(np);
  for (auto& v : verts) {
    v.x = next_value<double>(is, "point");
    v.y = next_value<double>(is, "point");
    v.z = next_value<double>(is, "point");
  }

  expect(is, "CELLS");
  const auto nc = next_value<std::size_t>(is, "cell count");
  next_value<std::size_t>(is, "cell list size");
  std::vector<ElementConnectivity> elems(nc);
  for (auto& conn : elems) {
    if (next_value<int>(is, "cell size") != 8) throw VtkError("only hexahedral cells are supported");
    for (auto& idx : conn) idx = next_value<std::uint32_t>(is, "cell index");
  }

  expect(is, "CELL_TYPES");
  if (next_value<std::size_t>(is, "cell type count") != nc) throw VtkError("cell type count mismatch");
  for (std::size_t c = 0; c < nc; ++c)
    if (next_value<int>(is, "cell type") != kVtkHexahedron)
      throw VtkError("only VTK_HEXAHEDRON cells are supported");

  VtkDataset out{HexMesh(std::move(verts), std::move(elems)), {}};

  std::string tok;
  if (!(is >> tok)) return out;
  if (tok != "CELL_DATA") throw VtkError("unsupported section '" + tok + "'");
  if (next_value<std::size_t>(is, "cell data count") != nc) throw VtkError("cell data count mismatch");
  while (is >> tok) {
    if (tok != "SCALARS") throw VtkError("unsupported cell data section '" + tok + "'");
    CellScalar s;
    s.name = next_token(is, "scalar name");
    next_token(is, "scalar type");
    // Optional component count before LOOKUP_TABLE.
    tok = next_token(is, "LOOKUP_TABLE");
    if (tok != "LOOKUP_TABLE") {
      if (tok != "1") throw VtkError("only single-component scalars are supported");
      expect(is, "LOOKUP_TABLE");
    }
    next_token(is, "lookup table name");
    s.values.resize(nc);
    for (auto& v : s.values) v = next_value<double>(is, "scalar value");
    out.cell_scalars.push_back(std::move(s));
  }
  return out;
}

VtkDataset read_vtk(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw VtkError("cannot open '" + path.string() + "'");
  return read_vtk(in);
}

}  // namespace volfrac

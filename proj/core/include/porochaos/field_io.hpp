#pragma once

#include <Eigen/Dense>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "porochaos/mesh.hpp"

namespace porochaos {

/// Vertex-based scalar fields for export (length = vertex count).
using NamedFields = std::vector<std::pair<std::string, Eigen::VectorXd>>;

/// Legacy ASCII VTK unstructured grid with one POINT_DATA array per field.
/// When `deform` is given (two fields u1, u2 and a scale factor), points are
/// written on the deformed configuration x + scale * u(x).
struct Deformation {
  Eigen::VectorXd u1, u2;
  double scale = 1.0;
};
void write_vtk(const std::filesystem::path& path, const TriMesh& mesh, const NamedFields& fields,
               const Deformation* deform = nullptr);

/// Flat CSV: vertex id, x, y, then one column per field.
void write_fields_csv(const std::filesystem::path& path, const TriMesh& mesh,
                      const NamedFields& fields);

}  // namespace porochaos

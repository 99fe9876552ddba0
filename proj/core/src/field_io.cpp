#include "porochaos/field_io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace porochaos {

namespace {

void check_fields(const TriMesh& mesh, const NamedFields& fields) {
  for (const auto& [name, values] : fields)
    if (values.size() != mesh.vertex_count())
      throw std::invalid_argument("field export: field '" + name + "' is not vertex-based");
}

}  // namespace

void write_vtk(const std::filesystem::path& path, const TriMesh& mesh, const NamedFields& fields,
               const Deformation* deform) {
  check_fields(mesh, fields);
  if (deform && (deform->u1.size() != mesh.vertex_count() || deform->u2.size() != mesh.vertex_count()))
    throw std::invalid_argument("field export: deformation fields are not vertex-based");

  std::ofstream os(path);
  if (!os) throw std::runtime_error("write_vtk: cannot open " + path.string());
  char buf[128];
  os << "# vtk DataFile Version 3.0\n";
  os << "porochaos fields\n";
  os << "ASCII\n";
  os << "DATASET UNSTRUCTURED_GRID\n";
  os << "POINTS " << mesh.vertex_count() << " double\n";
  for (int v = 0; v < mesh.vertex_count(); ++v) {
    double x = mesh.vertices[static_cast<std::size_t>(v)].x();
    double y = mesh.vertices[static_cast<std::size_t>(v)].y();
    if (deform) {
      x += deform->scale * deform->u1(v);
      y += deform->scale * deform->u2(v);
    }
    std::snprintf(buf, sizeof buf, "%.17g %.17g 0\n", x, y);
    os << buf;
  }
  os << "CELLS " << mesh.triangle_count() << " " << 4 * mesh.triangle_count() << "\n";
  for (const auto& t : mesh.triangles) os << "3 " << t[0] << " " << t[1] << " " << t[2] << "\n";
  os << "CELL_TYPES " << mesh.triangle_count() << "\n";
  for (int t = 0; t < mesh.triangle_count(); ++t) os << "5\n";
  if (!fields.empty()) {
    os << "POINT_DATA " << mesh.vertex_count() << "\n";
    for (const auto& [name, values] : fields) {
      os << "SCALARS " << name << " double 1\n";
      os << "LOOKUP_TABLE default\n";
      for (Eigen::Index i = 0; i < values.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g\n", values(i));
        os << buf;
      }
    }
  }
}

void write_fields_csv(const std::filesystem::path& path, const TriMesh& mesh,
                      const NamedFields& fields) {
  check_fields(mesh, fields);
  std::ofstream os(path);
  if (!os) throw std::runtime_error("write_fields_csv: cannot open " + path.string());
  os << "vertex,x,y";
  for (const auto& [name, values] : fields) {
    (void)values;
    os << "," << name;
  }
  os << "\n";
  char buf[64];
  for (int v = 0; v < mesh.vertex_count(); ++v) {
    os << v;
    std::snprintf(buf, sizeof buf, ",%.17g", mesh.vertices[static_cast<std::size_t>(v)].x());
    os << buf;
    std::snprintf(buf, sizeof buf, ",%.17g", mesh.vertices[static_cast<std::size_t>(v)].y());
    os << buf;
    for (const auto& [name, values] : fields) {
      (void)name;
      std::snprintf(buf, sizeof buf, ",%.17g", values(v));
      os << buf;
    }
    os << "\n";
  }
}

}  // namespace porochaos

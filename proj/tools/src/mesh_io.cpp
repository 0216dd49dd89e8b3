#include "qutrit_cli/mesh_io.hpp"

#include <stdexcept>

#include "qutrit_cli/report.hpp"

namespace qutrit::cli {

MeshFormat parse_mesh_format(std::string_view name) {
  if (name == "json") return MeshFormat::Json;
  if (name == "obj") return MeshFormat::Obj;
  if (name == "csv") return MeshFormat::Csv;
  throw std::invalid_argument("unsupported mesh format '" + std::string(name) + "' (use json, obj or csv)");
}

void write_mesh_json(const SectionMesh& mesh, std::ostream& out) {
  Json doc;
  doc["section"] = mesh.spec.labels();
  doc["resolution"] = mesh.resolution;
  Json vertices = Json::array();
  for (const auto& v : mesh.vertices) vertices.push_back({v.x(), v.y(), v.z()});
  Json faces = Json::array();
  for (const auto& f : mesh.faces) faces.push_back({f[0], f[1], f[2]});
  doc["vertices"] = std::move(vertices);
  doc["faces"] = std::move(faces);
  out << serialize(doc, 1);
}

void write_mesh_obj(const SectionMesh& mesh, std::ostream& out) {
  out << "# section " << mesh.spec.name() << " resolution " << mesh.resolution << '\n';
  for (const auto& v : mesh.vertices) {
    out << "v " << format_double(v.x()) << ' ' << format_double(v.y()) << ' ' << format_double(v.z()) << '\n';
  }
  for (const auto& f : mesh.faces) out << "f " << f[0] + 1 << ' ' << f[1] + 1 << ' ' << f[2] + 1 << '\n';
}

void write_mesh_csv(const SectionMesh& mesh, std::ostream& out) {
  out << "x,y,z\n";
  for (const auto& v : mesh.vertices) {
    out << format_double(v.x()) << ',' << format_double(v.y()) << ',' << format_double(v.z()) << '\n';
  }
}

void write_mesh(const SectionMesh& mesh, MeshFormat format, std::ostream& out) {
  switch (format) {
    case MeshFormat::Json: write_mesh_json(mesh, out); break;
    case MeshFormat::Obj: write_mesh_obj(mesh, out); break;
    case MeshFormat::Csv: write_mesh_csv(mesh, out); break;
  }
}

}  // namespace qutrit::cli

#pragma once

#include <ostream>
#include <string>
#include <string_view>

#include "qutrit/mesh.hpp"

namespace qutrit::cli {

enum class MeshFormat { Json, Obj, Csv };

/// "json" | "obj" | "csv"; throws std::invalid_argument otherwise.
MeshFormat parse_mesh_format(std::string_view name);

/// {"section": [j,k,l], "resolution": N, "vertices": [[x,y,z]...], "faces": [[a,b,c]...]}
void write_mesh_json(const SectionMesh& mesh, std::ostream& out);
/// "v x y z" and 1-based "f a b c" records.
void write_mesh_obj(const SectionMesh& mesh, std::ostream& out);
/// Vertices only, header "x,y,z".
void write_mesh_csv(const SectionMesh& mesh, std::ostream& out);

void write_mesh(const SectionMesh& mesh, MeshFormat format, std::ostream& out);

}  // namespace qutrit::cli

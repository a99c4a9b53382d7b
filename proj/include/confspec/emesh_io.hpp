#pragma once

#include <iosfwd>
#include <string>

#include "confspec/mesh.hpp"

namespace confspec {

// EMESH text format:
//   EMESH <m> <nv> <nf> <is_quotient:0|1>
//   nv lines of m coordinates (17 significant digits)
//   nf lines of 3 zero-based vertex indices
// Blank lines and '#' comments are ignored on input.

void write_emesh(std::ostream& out, const EmbeddedMesh& mesh);
void write_emesh_file(const std::string& path, const EmbeddedMesh& mesh);

/// Parses and validates. Throws ParseError on malformed text and the usual
/// validation errors on bad meshes.
EmbeddedMesh read_emesh(std::istream& in);
EmbeddedMesh read_emesh_file(const std::string& path);

}  // namespace confspec

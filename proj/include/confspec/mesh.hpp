#pragma once

#include <array>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "confspec/error.hpp"

namespace confspec {

using Face = std::array<int, 3>;
/// One vertex per row; the column count is the ambient dimension m.
using VertexArray = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

struct ValidationOptions {
  /// Require every edge to have exactly two incident faces. Only unit tests
  /// on open patches turn this off.
  bool require_closed = true;
  bool require_connected = true;
};

/// Closed triangle mesh with vertices in E^m, m >= 3. Instances are only
/// produced by validate_mesh and by operations that preserve its invariants,
/// so holding one means the combinatorics and face areas have been checked.
class EmbeddedMesh {
 public:
  int ambient_dim() const noexcept { return static_cast<int>(vertices_.cols()); }
  int vertex_count() const noexcept { return static_cast<int>(vertices_.rows()); }
  int face_count() const noexcept { return static_cast<int>(faces_.size()); }
  bool is_quotient() const noexcept { return is_quotient_; }

  const VertexArray& vertices() const noexcept { return vertices_; }
  const std::vector<Face>& faces() const noexcept { return faces_; }
  Eigen::VectorXd vertex(int i) const { return vertices_.row(i).transpose(); }

  /// Non-fatal findings from validation (e.g. duplicated faces of a pillow).
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }

  /// Same combinatorics, new positions. Re-checks face areas and throws
  /// DegenerateFace if the new embedding collapses a triangle.
  EmbeddedMesh with_vertices(VertexArray vertices) const;

 private:
  EmbeddedMesh() = default;

  VertexArray vertices_;
  std::vector<Face> faces_;
  bool is_quotient_ = false;
  std::vector<std::string> warnings_;

  friend EmbeddedMesh validate_mesh(VertexArray, std::vector<Face>, bool, const ValidationOptions&);
  friend EmbeddedMesh quotient_antipodal(const EmbeddedMesh&);
};

/// Lumped (barycentric) vertex areas: every triangle hands a third of its
/// area to each corner.
struct VertexMeasure {
  Eigen::VectorXd area;
  double total = 0.0;
};

EmbeddedMesh validate_mesh(VertexArray vertices, std::vector<Face> faces, bool is_quotient = false,
                           const ValidationOptions& options = {});

/// Area of the triangle (a, b, c) in any ambient dimension.
double triangle_area(const Eigen::Ref<const Eigen::VectorXd>& a, const Eigen::Ref<const Eigen::VectorXd>& b,
                     const Eigen::Ref<const Eigen::VectorXd>& c);

Eigen::VectorXd face_areas(const EmbeddedMesh& mesh);
double surface_area(const EmbeddedMesh& mesh);
VertexMeasure vertex_measure(const EmbeddedMesh& mesh);

/// Area-weighted centroid, i.e. the integral of x over the surface divided by A.
Eigen::VectorXd center_of_gravity(const EmbeddedMesh& mesh);
EmbeddedMesh center_mesh(const EmbeddedMesh& mesh);

/// Length of the axis-aligned bounding-box diagonal; the length scale that
/// all geometric tolerances are measured against.
double diameter(const EmbeddedMesh& mesh);

EmbeddedMesh scale_mesh(const EmbeddedMesh& mesh, double c);
EmbeddedMesh translate_mesh(const EmbeddedMesh& mesh, const Eigen::VectorXd& t);

/// Identifies v with -v. The vertex set must be closed under negation and
/// no face may be its own antipode. Edges of the quotient are the classes of
/// edges of the cover, so the hemi-octahedron (whose distinct edges share
/// vertex pairs) is representable.
EmbeddedMesh quotient_antipodal(const EmbeddedMesh& mesh);

/// Edge -> incident faces, keyed by sorted vertex pair.
struct EdgeIncidence {
  std::array<int, 2> edge;
  std::vector<int> faces;
};
std::vector<EdgeIncidence> edge_incidence(const std::vector<Face>& faces);

}  // namespace confspec

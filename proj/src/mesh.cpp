#include "confspec/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

namespace confspec {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonManifoldEdge: return "NonManifoldEdge";
    case ErrorCode::DegenerateFace: return "DegenerateFace";
    case ErrorCode::DisconnectedMesh: return "DisconnectedMesh";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NonpositiveScale: return "NonpositiveScale";
    case ErrorCode::NoAntipodalPairing: return "NoAntipodalPairing";
    case ErrorCode::SelfMappedFace: return "SelfMappedFace";
    case ErrorCode::DomainRadiusViolation: return "DomainRadiusViolation";
    case ErrorCode::CenterOnSurface: return "CenterOnSurface";
    case ErrorCode::InversionPole: return "InversionPole";
    case ErrorCode::InvalidConformalMap: return "InvalidConformalMap";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::InsufficientSpectrum: return "InsufficientSpectrum";
    case ErrorCode::NotCentered: return "NotCentered";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int i) {
    while (parent_[i] != i) {
      parent_[i] = parent_[parent_[i]];
      i = parent_[i];
    }
    return i;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::vector<int> parent_;
};

std::array<int, 2> sorted_edge(int a, int b) { return a < b ? std::array{a, b} : std::array{b, a}; }

void check_face_areas(const VertexArray& vertices, const std::vector<Face>& faces) {
  if (faces.empty()) return;
  std::vector<double> areas(faces.size());
  double total = 0.0;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const auto& [a, b, c] = faces[f];
    areas[f] = triangle_area(vertices.row(a).transpose(), vertices.row(b).transpose(), vertices.row(c).transpose());
    total += areas[f];
  }
  const double floor = 1e-14 * total / static_cast<double>(faces.size());
  for (std::size_t f = 0; f < faces.size(); ++f) {
    if (!(areas[f] > floor)) {
      throw Error(ErrorCode::DegenerateFace, "face " + std::to_string(f) + " has area " + std::to_string(areas[f]));
    }
  }
}

void check_connected(int vertex_count, const std::vector<Face>& faces) {
  UnionFind uf(vertex_count);
  for (const auto& f : faces) {
    uf.unite(f[0], f[1]);
    uf.unite(f[1], f[2]);
  }
  const int root = uf.find(0);
  for (int v = 1; v < vertex_count; ++v) {
    if (uf.find(v) != root) {
      throw Error(ErrorCode::DisconnectedMesh, "vertex " + std::to_string(v) + " is not connected to vertex 0");
    }
  }
}

}  // namespace

std::vector<EdgeIncidence> edge_incidence(const std::vector<Face>& faces) {
  std::map<std::array<int, 2>, std::vector<int>> incident;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    for (int k = 0; k < 3; ++k) {
      incident[sorted_edge(faces[f][k], faces[f][(k + 1) % 3])].push_back(static_cast<int>(f));
    }
  }
  std::vector<EdgeIncidence> out;
  out.reserve(incident.size());
  for (auto& [edge, fs] : incident) out.push_back({edge, std::move(fs)});
  return out;
}

EmbeddedMesh validate_mesh(VertexArray vertices, std::vector<Face> faces, bool is_quotient,
                           const ValidationOptions& options) {
  const int nv = static_cast<int>(vertices.rows());
  if (vertices.cols() < 3) {
    throw Error(ErrorCode::InvalidArgument, "ambient dimension must be at least 3");
  }
  if (nv == 0 || faces.empty()) {
    throw Error(ErrorCode::InvalidArgument, "mesh needs at least one vertex and one face");
  }
  if (!vertices.allFinite()) {
    throw Error(ErrorCode::InvalidArgument, "vertex coordinates must be finite");
  }
  for (std::size_t f = 0; f < faces.size(); ++f) {
    for (int idx : faces[f]) {
      if (idx < 0 || idx >= nv) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "face " + std::to_string(f) + " references vertex " + std::to_string(idx));
      }
    }
    const auto& [a, b, c] = faces[f];
    if (a == b || b == c || a == c) {
      throw Error(ErrorCode::DegenerateFace, "face " + std::to_string(f) + " repeats a vertex");
    }
  }

  std::vector<std::string> warnings;
  if (options.require_closed) {
    for (const auto& inc : edge_incidence(faces)) {
      if (inc.faces.size() != 2) {
        std::ostringstream msg;
        msg << "edge (" << inc.edge[0] << ", " << inc.edge[1] << ") has " << inc.faces.size() << " incident faces";
        throw Error(ErrorCode::NonManifoldEdge, msg.str());
      }
    }
  }
  check_face_areas(vertices, faces);
  if (options.require_connected) check_connected(nv, faces);

  std::map<std::array<int, 3>, int> seen;
  for (const auto& f : faces) {
    auto key = f;
    std::sort(key.begin(), key.end());
    if (++seen[key] == 2) {
      warnings.push_back("faces share the vertex set (" + std::to_string(key[0]) + ", " + std::to_string(key[1]) +
                         ", " + std::to_string(key[2]) + "); the surface encloses zero volume there");
    }
  }

  EmbeddedMesh mesh;
  mesh.vertices_ = std::move(vertices);
  mesh.faces_ = std::move(faces);
  mesh.is_quotient_ = is_quotient;
  mesh.warnings_ = std::move(warnings);
  return mesh;
}

EmbeddedMesh EmbeddedMesh::with_vertices(VertexArray vertices) const {
  if (vertices.rows() != vertices_.rows() || vertices.cols() < 3) {
    throw Error(ErrorCode::SizeMismatch, "replacement vertex array has the wrong shape");
  }
  if (!vertices.allFinite()) {
    throw Error(ErrorCode::InvalidArgument, "vertex coordinates must be finite");
  }
  check_face_areas(vertices, faces_);
  EmbeddedMesh out = *this;
  out.vertices_ = std::move(vertices);
  return out;
}

double triangle_area(const Eigen::Ref<const Eigen::VectorXd>& a, const Eigen::Ref<const Eigen::VectorXd>& b,
                     const Eigen::Ref<const Eigen::VectorXd>& c) {
  const Eigen::VectorXd e1 = b - a;
  const Eigen::VectorXd e2 = c - a;
  const double d = e1.dot(e2);
  const double gram = e1.squaredNorm() * e2.squaredNorm() - d * d;
  return 0.5 * std::sqrt(std::max(gram, 0.0));
}

Eigen::VectorXd face_areas(const EmbeddedMesh& mesh) {
  const auto& V = mesh.vertices();
  Eigen::VectorXd areas(mesh.face_count());
  for (int f = 0; f < mesh.face_count(); ++f) {
    const auto& [a, b, c] = mesh.faces()[f];
    areas[f] = triangle_area(V.row(a).transpose(), V.row(b).transpose(), V.row(c).transpose());
  }
  return areas;
}

double surface_area(const EmbeddedMesh& mesh) { return face_areas(mesh).sum(); }

VertexMeasure vertex_measure(const EmbeddedMesh& mesh) {
  const Eigen::VectorXd areas = face_areas(mesh);
  VertexMeasure m;
  m.area = Eigen::VectorXd::Zero(mesh.vertex_count());
  for (int f = 0; f < mesh.face_count(); ++f) {
    for (int v : mesh.faces()[f]) m.area[v] += areas[f] / 3.0;
  }
  m.total = areas.sum();
  return m;
}

Eigen::VectorXd center_of_gravity(const EmbeddedMesh& mesh) {
  const auto& V = mesh.vertices();
  Eigen::VectorXd weighted = Eigen::VectorXd::Zero(mesh.ambient_dim());
  double total = 0.0;
  for (const auto& [a, b, c] : mesh.faces()) {
    const double area = triangle_area(V.row(a).transpose(), V.row(b).transpose(), V.row(c).transpose());
    weighted += area * (V.row(a) + V.row(b) + V.row(c)).transpose() / 3.0;
    total += area;
  }
  return weighted / total;
}

double diameter(const EmbeddedMesh& mesh) {
  const auto& V = mesh.vertices();
  return (V.colwise().maxCoeff() - V.colwise().minCoeff()).norm();
}

EmbeddedMesh translate_mesh(const EmbeddedMesh& mesh, const Eigen::VectorXd& t) {
  if (t.size() != mesh.ambient_dim()) {
    throw Error(ErrorCode::SizeMismatch, "translation has the wrong dimension");
  }
  VertexArray moved = mesh.vertices();
  moved.rowwise() += t.transpose();
  return mesh.with_vertices(std::move(moved));
}

EmbeddedMesh center_mesh(const EmbeddedMesh& mesh) {
  const Eigen::VectorXd c = center_of_gravity(mesh);
  // A centroid at rounding level is left alone so centered input survives bit for bit.
  if (c.norm() <= 1e-14 * diameter(mesh)) return mesh;
  return translate_mesh(mesh, -c);
}

EmbeddedMesh scale_mesh(const EmbeddedMesh& mesh, double c) {
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw Error(ErrorCode::NonpositiveScale, "scale factor must be positive, got " + std::to_string(c));
  }
  if (c == 1.0) return mesh;
  return mesh.with_vertices(mesh.vertices() * c);
}

EmbeddedMesh quotient_antipodal(const EmbeddedMesh& mesh) {
  const auto& V = mesh.vertices();
  const int nv = mesh.vertex_count();
  const double tol = 1e-9 * diameter(mesh);

  // Pair each vertex with its antipode by a sweep over the first coordinate.
  std::vector<int> order(nv);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) { return V(i, 0) < V(j, 0); });
  std::vector<double> key(nv);
  for (int i = 0; i < nv; ++i) key[i] = V(order[i], 0);

  std::vector<int> antipode(nv, -1);
  for (int i = 0; i < nv; ++i) {
    const double target = -V(i, 0);
    auto lo = std::lower_bound(key.begin(), key.end(), target - tol);
    for (auto it = lo; it != key.end() && *it <= target + tol; ++it) {
      const int j = order[static_cast<std::size_t>(it - key.begin())];
      if ((V.row(i) + V.row(j)).norm() <= tol) {
        antipode[i] = j;
        break;
      }
    }
    if (antipode[i] < 0 || antipode[i] == i) {
      throw Error(ErrorCode::NoAntipodalPairing, "vertex " + std::to_string(i) + " has no antipodal partner");
    }
  }
  for (int i = 0; i < nv; ++i) {
    if (antipode[antipode[i]] != i) {
      throw Error(ErrorCode::NoAntipodalPairing, "antipodal pairing is not an involution at vertex " + std::to_string(i));
    }
  }

  // Representative of each class is its smaller index; renumber them densely.
  std::vector<int> new_index(nv, -1);
  int kept = 0;
  for (int i = 0; i < nv; ++i) {
    if (i < antipode[i]) new_index[i] = kept++;
  }
  for (int i = 0; i < nv; ++i) {
    if (new_index[i] < 0) new_index[i] = new_index[antipode[i]];
  }

  const auto& faces = mesh.faces();
  auto face_key = [](Face f) {
    std::sort(f.begin(), f.end());
    return f;
  };
  std::map<std::array<int, 3>, int> face_lookup;
  for (std::size_t f = 0; f < faces.size(); ++f) face_lookup.emplace(face_key(faces[f]), static_cast<int>(f));

  std::vector<Face> quotient_faces;
  std::vector<int> kept_faces;
  std::vector<char> consumed(faces.size(), 0);
  for (std::size_t f = 0; f < faces.size(); ++f) {
    if (consumed[f]) continue;
    const Face& face = faces[f];
    const Face image{antipode[face[0]], antipode[face[1]], antipode[face[2]]};
    const auto found = face_lookup.find(face_key(image));
    if (found == face_lookup.end()) {
      throw Error(ErrorCode::NoAntipodalPairing, "face " + std::to_string(f) + " has no antipodal face");
    }
    if (found->second == static_cast<int>(f)) {
      throw Error(ErrorCode::SelfMappedFace, "face " + std::to_string(f) + " is its own antipode");
    }
    consumed[f] = 1;
    consumed[static_cast<std::size_t>(found->second)] = 1;
    quotient_faces.push_back({new_index[face[0]], new_index[face[1]], new_index[face[2]]});
    kept_faces.push_back(static_cast<int>(f));
  }

  // Edge audit on the classes {e, -e} of cover edges.
  std::map<std::array<int, 2>, int> class_count;
  for (int f : kept_faces) {
    for (int k = 0; k < 3; ++k) {
      const auto e = sorted_edge(faces[f][k], faces[f][(k + 1) % 3]);
      const auto image = sorted_edge(antipode[e[0]], antipode[e[1]]);
      ++class_count[std::min(e, image)];
    }
  }
  for (const auto& [e, count] : class_count) {
    if (count != 2) {
      std::ostringstream msg;
      msg << "quotient edge class of (" << e[0] << ", " << e[1] << ") has " << count << " incident faces";
      throw Error(ErrorCode::NonManifoldEdge, msg.str());
    }
  }

  VertexArray quotient_vertices(kept, mesh.ambient_dim());
  for (int i = 0; i < nv; ++i) {
    if (i < antipode[i]) quotient_vertices.row(new_index[i]) = V.row(i);
  }
  check_face_areas(quotient_vertices, quotient_faces);
  check_connected(kept, quotient_faces);

  EmbeddedMesh out;
  out.vertices_ = std::move(quotient_vertices);
  out.faces_ = std::move(quotient_faces);
  out.is_quotient_ = true;
  return out;
}

}  // namespace confspec

#include "confspec/surfaces.hpp"

#include <cmath>
#include <map>
#include <numbers>

#include "confspec/conformal.hpp"

namespace confspec {

namespace {

void check_resolution(GridResolution res) {
  if (res.n_u < 3 || res.n_v < 3) {
    throw Error(ErrorCode::InvalidArgument, "grid resolution must be at least 3x3, got " + std::to_string(res.n_u) +
                                                "x" + std::to_string(res.n_v));
  }
}

/// Two triangles per periodic cell, all split along the (u+1, v+1) diagonal.
std::vector<Face> periodic_grid_faces(GridResolution res) {
  auto id = [&](int i, int j) { return (i % res.n_u) * res.n_v + (j % res.n_v); };
  std::vector<Face> faces;
  faces.reserve(2 * static_cast<std::size_t>(res.n_u) * res.n_v);
  for (int i = 0; i < res.n_u; ++i) {
    for (int j = 0; j < res.n_v; ++j) {
      faces.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
      faces.push_back({id(i, j), id(i + 1, j + 1), id(i, j + 1)});
    }
  }
  return faces;
}

double grid_angle(int i, int n) { return 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n); }

}  // namespace

EmbeddedMesh gen_clifford(GridResolution res) {
  check_resolution(res);
  VertexArray V(res.n_u * res.n_v, 4);
  for (int i = 0; i < res.n_u; ++i) {
    const double u = grid_angle(i, res.n_u);
    for (int j = 0; j < res.n_v; ++j) {
      const double v = grid_angle(j, res.n_v);
      V.row(i * res.n_v + j) << std::cos(u), std::sin(u), std::cos(v), std::sin(v);
    }
  }
  return validate_mesh(std::move(V), periodic_grid_faces(res));
}

EmbeddedMesh gen_anchor_ring(double a, GridResolution res) {
  if (!(a > 0.0)) throw Error(ErrorCode::InvalidArgument, "anchor ring radius must be positive");
  check_resolution(res);
  VertexArray V(res.n_u * res.n_v, 3);
  for (int i = 0; i < res.n_u; ++i) {
    const double u = grid_angle(i, res.n_u);
    const double ring = std::numbers::sqrt2 + std::cos(u);
    for (int j = 0; j < res.n_v; ++j) {
      const double v = grid_angle(j, res.n_v);
      V.row(i * res.n_v + j) << ring * a * std::cos(v), ring * a * std::sin(v), a * std::sin(u);
    }
  }
  return validate_mesh(std::move(V), periodic_grid_faces(res));
}

EmbeddedMesh gen_sphere(double r, int subdiv) {
  if (!(r > 0.0)) throw Error(ErrorCode::InvalidArgument, "sphere radius must be positive");
  if (subdiv < 0) throw Error(ErrorCode::InvalidArgument, "subdivision level must be non-negative");

  const double phi = std::numbers::phi;
  std::vector<Eigen::Vector3d> pts = {
      {-1, phi, 0}, {1, phi, 0}, {-1, -phi, 0}, {1, -phi, 0}, {0, -1, phi}, {0, 1, phi},
      {0, -1, -phi}, {0, 1, -phi}, {phi, 0, -1}, {phi, 0, 1}, {-phi, 0, -1}, {-phi, 0, 1},
  };
  std::vector<Face> faces = {
      {0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11}, {1, 5, 9}, {5, 11, 4},
      {11, 10, 2}, {10, 7, 6}, {7, 1, 8},  {3, 9, 4},  {3, 4, 2},   {3, 2, 6}, {3, 6, 8},
      {3, 8, 9},  {4, 9, 5},  {2, 4, 11},  {6, 2, 10}, {8, 6, 7},   {9, 8, 1},
  };
  for (auto& p : pts) p.normalize();

  for (int level = 0; level < subdiv; ++level) {
    std::map<std::pair<int, int>, int> midpoint;
    auto mid = [&](int a, int b) {
      const auto key = std::minmax(a, b);
      if (auto it = midpoint.find(key); it != midpoint.end()) return it->second;
      pts.push_back((0.5 * (pts[a] + pts[b])).normalized());
      const int idx = static_cast<int>(pts.size()) - 1;
      midpoint.emplace(key, idx);
      return idx;
    };
    std::vector<Face> refined;
    refined.reserve(faces.size() * 4);
    for (const auto& [a, b, c] : faces) {
      const int ab = mid(a, b), bc = mid(b, c), ca = mid(c, a);
      refined.push_back({a, ab, ca});
      refined.push_back({b, bc, ab});
      refined.push_back({c, ca, bc});
      refined.push_back({ab, bc, ca});
    }
    faces = std::move(refined);
  }

  VertexArray V(static_cast<Eigen::Index>(pts.size()), 3);
  for (std::size_t i = 0; i < pts.size(); ++i) V.row(static_cast<Eigen::Index>(i)) = (r / pts[i].norm()) * pts[i];
  return validate_mesh(std::move(V), std::move(faces));
}

Eigen::VectorXd veronese_map(const Eigen::Vector3d& p) {
  const double r2 = p.squaredNorm();
  if (!(std::abs(r2 - 3.0) <= 3e-12)) {
    throw Error(ErrorCode::DomainRadiusViolation, "veronese_map needs |p|^2 = 3, got " + std::to_string(r2));
  }
  const double x = p.x(), y = p.y(), z = p.z();
  Eigen::VectorXd u(5);
  u << y * z / 3.0, z * x / 3.0, x * y / 3.0, (x * x - y * y) / 6.0,
      (x * x + y * y - 2.0 * z * z) / (6.0 * std::numbers::sqrt3);
  return u;
}

EmbeddedMesh gen_veronese(int subdiv) {
  const EmbeddedMesh rp2 = quotient_antipodal(gen_sphere(std::numbers::sqrt3, subdiv));
  VertexArray image(rp2.vertex_count(), 5);
  for (int i = 0; i < rp2.vertex_count(); ++i) {
    image.row(i) = veronese_map(rp2.vertices().row(i).transpose()).transpose();
  }
  return rp2.with_vertices(std::move(image));
}

EmbeddedMesh gen_cyclide(double a, const Eigen::Vector3d& center, double inv_scale, GridResolution res) {
  const EmbeddedMesh ring = gen_anchor_ring(a, res);
  for (int i = 0; i < ring.vertex_count(); ++i) {
    if ((ring.vertices().row(i).transpose() - center).norm() <= 1e-6) {
      throw Error(ErrorCode::CenterOnSurface, "inversion center lies on the anchor ring (vertex " +
                                                  std::to_string(i) + ")");
    }
  }
  return apply_mesh(ConformalMap({Inversion{center, inv_scale}}), ring);
}

}  // namespace confspec

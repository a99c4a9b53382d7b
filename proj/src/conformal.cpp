#include "confspec/conformal.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include <Eigen/LU>
#include <Eigen/QR>

namespace confspec {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

int step_dimension(const ConformalPrimitive& step) {
  return std::visit(Overloaded{
                        [](const Translation& t) { return static_cast<int>(t.offset.size()); },
                        [](const Rotation& r) { return static_cast<int>(r.matrix.rows()); },
                        [](const Homothety&) { return -1; },
                        [](const Inversion& inv) { return static_cast<int>(inv.center.size()); },
                    },
                    step);
}

void check_step(const ConformalPrimitive& step) {
  std::visit(Overloaded{
                 [](const Translation& t) {
                   if (t.offset.size() == 0 || !t.offset.allFinite()) {
                     throw Error(ErrorCode::InvalidConformalMap, "translation must be a finite vector");
                   }
                 },
                 [](const Rotation& r) {
                   const auto& Q = r.matrix;
                   if (Q.rows() != Q.cols() || Q.rows() == 0) {
                     throw Error(ErrorCode::InvalidConformalMap, "rotation must be square");
                   }
                   const double defect =
                       (Q.transpose() * Q - Eigen::MatrixXd::Identity(Q.rows(), Q.cols())).cwiseAbs().maxCoeff();
                   if (!(defect <= 1e-12)) {
                     throw Error(ErrorCode::InvalidConformalMap, "rotation is not orthogonal (defect " +
                                                                     std::to_string(defect) + ")");
                   }
                 },
                 [](const Homothety& h) {
                   if (!(h.factor > 0.0) || !std::isfinite(h.factor)) {
                     throw Error(ErrorCode::InvalidConformalMap, "homothety factor must be positive");
                   }
                 },
                 [](const Inversion& inv) {
                   if (!(inv.scale > 0.0) || !std::isfinite(inv.scale)) {
                     throw Error(ErrorCode::InvalidConformalMap, "inversion scale must be positive");
                   }
                   if (inv.center.size() == 0 || !inv.center.allFinite()) {
                     throw Error(ErrorCode::InvalidConformalMap, "inversion center must be a finite vector");
                   }
                 },
             },
             step);
}

Eigen::VectorXd apply_step(const ConformalPrimitive& step, const Eigen::VectorXd& x, double pole_tolerance) {
  if (const int d = step_dimension(step); d >= 0 && d != x.size()) {
    throw Error(ErrorCode::SizeMismatch, "map step of dimension " + std::to_string(d) + " applied to a point in E^" +
                                             std::to_string(x.size()));
  }
  return std::visit(Overloaded{
                        [&](const Translation& t) -> Eigen::VectorXd { return x + t.offset; },
                        [&](const Rotation& r) -> Eigen::VectorXd { return r.matrix * x; },
                        [&](const Homothety& h) -> Eigen::VectorXd { return h.factor * x; },
                        [&](const Inversion& inv) -> Eigen::VectorXd {
                          const Eigen::VectorXd d = x - inv.center;
                          const double r2 = d.squaredNorm();
                          const double tol = pole_tolerance > 0.0 ? pole_tolerance : 1e-12 * inv.scale;
                          if (!(std::sqrt(r2) > tol)) {
                            throw Error(ErrorCode::InversionPole, "point lies at distance " +
                                                                      std::to_string(std::sqrt(r2)) +
                                                                      " from an inversion center");
                          }
                          return inv.scale * inv.scale / r2 * d + inv.center;
                        },
                    },
                    step);
}

}  // namespace

ConformalMap::ConformalMap(std::vector<ConformalPrimitive> steps) : steps_(std::move(steps)) {
  int dim = -1;
  for (const auto& s : steps_) {
    check_step(s);
    const int d = step_dimension(s);
    if (d >= 0) {
      if (dim >= 0 && d != dim) throw Error(ErrorCode::InvalidConformalMap, "steps disagree on the dimension");
      dim = d;
    }
  }
}

ConformalMap ConformalMap::then(ConformalPrimitive step) const {
  auto steps = steps_;
  steps.push_back(std::move(step));
  return ConformalMap(std::move(steps));
}

ConformalMap ConformalMap::then(const ConformalMap& other) const {
  auto steps = steps_;
  steps.insert(steps.end(), other.steps_.begin(), other.steps_.end());
  return ConformalMap(std::move(steps));
}

int ConformalMap::dimension() const noexcept {
  for (const auto& s : steps_) {
    if (const int d = step_dimension(s); d >= 0) return d;
  }
  return -1;
}

bool ConformalMap::is_rigid() const noexcept {
  for (const auto& s : steps_) {
    if (std::holds_alternative<Inversion>(s)) return false;
    if (const auto* h = std::get_if<Homothety>(&s); h && h->factor != 1.0) return false;
  }
  return true;
}

std::string ConformalMap::describe() const {
  if (steps_.empty()) return "identity";
  std::ostringstream out;
  auto vec = [&](const Eigen::VectorXd& v) {
    out << '(';
    for (Eigen::Index i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
    out << ')';
  };
  bool first = true;
  for (const auto& s : steps_) {
    if (!first) out << " -> ";
    first = false;
    std::visit(Overloaded{
                   [&](const Translation& t) { out << "translate"; vec(t.offset); },
                   [&](const Rotation& r) { out << "rotate[" << r.matrix.rows() << "x" << r.matrix.cols() << "]"; },
                   [&](const Homothety& h) { out << "scale(" << h.factor << ")"; },
                   [&](const Inversion& inv) { out << "invert"; vec(inv.center); out << ":" << inv.scale; },
               },
               s);
  }
  return out.str();
}

Eigen::VectorXd apply_point(const ConformalMap& map, const Eigen::VectorXd& x) {
  Eigen::VectorXd y = x;
  for (const auto& s : map.steps()) y = apply_step(s, y, 0.0);
  return y;
}

EmbeddedMesh apply_mesh(const ConformalMap& map, const EmbeddedMesh& mesh) {
  if (map.empty()) return mesh;
  VertexArray V = mesh.vertices();
  const int n = static_cast<int>(V.rows());
  for (const auto& s : map.steps()) {
    // The guard scales with the current image, so it tracks earlier homotheties.
    double pole_tol = 0.0;
    if (const auto* inv = std::get_if<Inversion>(&s)) {
      if (inv->center.size() != V.cols()) throw Error(ErrorCode::SizeMismatch, "inversion center has wrong dimension");
      pole_tol = 1e-6 * (V.colwise().maxCoeff() - V.colwise().minCoeff()).norm();
      for (int i = 0; i < n; ++i) {
        const double dist = (V.row(i).transpose() - inv->center).norm();
        if (!(dist > pole_tol)) {
          throw Error(ErrorCode::InversionPole, "vertex " + std::to_string(i) + " lies within " +
                                                    std::to_string(pole_tol) + " of an inversion center");
        }
      }
    }
    for (int i = 0; i < n; ++i) V.row(i) = apply_step(s, V.row(i).transpose(), pole_tol).transpose();
  }
  return mesh.with_vertices(std::move(V));
}

AreaNormalized area_normalize_to(double area, const EmbeddedMesh& target) {
  if (!(area > 0.0)) throw Error(ErrorCode::InvalidArgument, "target area must be positive");
  const double s = std::sqrt(area / surface_area(target));
  return {scale_mesh(target, s), s};
}

AreaNormalized area_normalize(const EmbeddedMesh& reference, const EmbeddedMesh& target) {
  return area_normalize_to(surface_area(reference), target);
}

Eigen::MatrixXd random_rotation_matrix(std::uint64_t seed, int m) {
  if (m < 2) throw Error(ErrorCode::InvalidArgument, "rotation dimension must be at least 2");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXd G(m, m);
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < m; ++i) G(i, j) = gauss(rng);
  }
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(G);
  Eigen::MatrixXd Q = qr.householderQ() * Eigen::MatrixXd::Identity(m, m);
  const Eigen::MatrixXd R = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < m; ++j) {
    if (R(j, j) < 0.0) Q.col(j) = -Q.col(j);
  }
  if (Q.determinant() < 0.0) Q.col(0) = -Q.col(0);
  return Q;
}

ConformalMap random_rotation(std::uint64_t seed, int m) {
  return ConformalMap({Rotation{random_rotation_matrix(seed, m)}});
}

}  // namespace confspec

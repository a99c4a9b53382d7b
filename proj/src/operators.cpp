#include "confspec/operators.hpp"

#include <vector>

namespace confspec {

StiffnessMatrix cotan_stiffness(const EmbeddedMesh& mesh) {
  const auto& V = mesh.vertices();
  const int n = mesh.vertex_count();
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(6 * static_cast<std::size_t>(mesh.face_count()));

  for (const auto& face : mesh.faces()) {
    const Eigen::VectorXd p0 = V.row(face[0]).transpose();
    const Eigen::VectorXd p1 = V.row(face[1]).transpose();
    const Eigen::VectorXd p2 = V.row(face[2]).transpose();
    const double double_area = 2.0 * triangle_area(p0, p1, p2);
    const Eigen::VectorXd* corner[3] = {&p0, &p1, &p2};
    for (int k = 0; k < 3; ++k) {
      const Eigen::VectorXd& apex = *corner[k];
      const int i = face[(k + 1) % 3];
      const int j = face[(k + 2) % 3];
      const double cot = (*corner[(k + 1) % 3] - apex).dot(*corner[(k + 2) % 3] - apex) / double_area;
      triplets.emplace_back(i, j, -0.5 * cot);
      triplets.emplace_back(j, i, -0.5 * cot);
    }
  }

  Eigen::SparseMatrix<double> off(n, n);
  off.setFromTriplets(triplets.begin(), triplets.end());
  Eigen::VectorXd row_sum = Eigen::VectorXd::Zero(n);
  for (int col = 0; col < off.outerSize(); ++col) {
    for (Eigen::SparseMatrix<double>::InnerIterator it(off, col); it; ++it) row_sum[it.row()] += it.value();
  }
  triplets.clear();
  triplets.reserve(static_cast<std::size_t>(off.nonZeros()) + n);
  for (int col = 0; col < off.outerSize(); ++col) {
    for (Eigen::SparseMatrix<double>::InnerIterator it(off, col); it; ++it) {
      triplets.emplace_back(it.row(), it.col(), it.value());
    }
  }
  for (int i = 0; i < n; ++i) triplets.emplace_back(i, i, -row_sum[i]);

  StiffnessMatrix L;
  L.matrix.resize(n, n);
  L.matrix.setFromTriplets(triplets.begin(), triplets.end());
  L.matrix.makeCompressed();
  return L;
}

MassMatrix lumped_mass(const EmbeddedMesh& mesh) { return {vertex_measure(mesh).area}; }

MeanCurvatureField mean_curvature(const EmbeddedMesh& mesh, const StiffnessMatrix& L, const MassMatrix& M) {
  if (L.size() != mesh.vertex_count() || M.size() != mesh.vertex_count()) {
    throw Error(ErrorCode::SizeMismatch, "operators do not match the mesh");
  }
  const Eigen::MatrixXd X = mesh.vertices();
  Eigen::MatrixXd LX = L.matrix * X;
  return {-0.5 * (M.diagonal.cwiseInverse().asDiagonal() * LX)};
}

MeanCurvatureField mean_curvature(const EmbeddedMesh& mesh) {
  return mean_curvature(mesh, cotan_stiffness(mesh), lumped_mass(mesh));
}

double total_mean_curvature(const MeanCurvatureField& H, const MassMatrix& M) {
  if (H.vectors.rows() != M.size()) throw Error(ErrorCode::SizeMismatch, "field and mass matrix disagree");
  return H.vectors.rowwise().squaredNorm().dot(M.diagonal);
}

double total_mean_curvature(const EmbeddedMesh& mesh) {
  const MassMatrix M = lumped_mass(mesh);
  return total_mean_curvature(mean_curvature(mesh, cotan_stiffness(mesh), M), M);
}

double dirichlet_energy(const StiffnessMatrix& L, const Eigen::VectorXd& f) {
  if (f.size() != L.size()) throw Error(ErrorCode::SizeMismatch, "function has the wrong length");
  return f.dot(L.matrix * f);
}

double rayleigh_quotient(const StiffnessMatrix& L, const MassMatrix& M, const Eigen::VectorXd& f) {
  if (f.size() != M.size()) throw Error(ErrorCode::SizeMismatch, "function has the wrong length");
  const double denom = f.cwiseAbs2().dot(M.diagonal);
  if (!(denom > 0.0)) throw Error(ErrorCode::ZeroVector, "Rayleigh quotient of the zero function");
  return dirichlet_energy(L, f) / denom;
}

double minkowski_defect(const EmbeddedMesh& mesh) {
  const MassMatrix M = lumped_mass(mesh);
  const MeanCurvatureField H = mean_curvature(mesh, cotan_stiffness(mesh), M);
  const Eigen::VectorXd xh = (mesh.vertices().array() * H.vectors.array()).rowwise().sum().matrix();
  return M.trace() + xh.dot(M.diagonal);
}

}  // namespace confspec

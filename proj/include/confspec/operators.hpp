#pragma once

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "confspec/mesh.hpp"

namespace confspec {

/// Cotangent stiffness, positive semidefinite:
///   L_ij = -(cot a_ij + cot b_ij) / 2,  L_ii = -sum_{j != i} L_ij.
struct StiffnessMatrix {
  Eigen::SparseMatrix<double> matrix;

  int size() const noexcept { return static_cast<int>(matrix.rows()); }
};

/// Diagonal lumped-area mass matrix.
struct MassMatrix {
  Eigen::VectorXd diagonal;

  int size() const noexcept { return static_cast<int>(diagonal.size()); }
  double trace() const { return diagonal.sum(); }
};

/// Per-vertex mean curvature vectors, one row per vertex (n x m).
struct MeanCurvatureField {
  Eigen::MatrixXd vectors;

  Eigen::VectorXd magnitudes() const { return vectors.rowwise().norm(); }
};

StiffnessMatrix cotan_stiffness(const EmbeddedMesh& mesh);
MassMatrix lumped_mass(const EmbeddedMesh& mesh);

/// H = -(M^-1 L X) / 2 applied to the coordinate columns. With this sign the
/// unit sphere has H = -x.
MeanCurvatureField mean_curvature(const EmbeddedMesh& mesh, const StiffnessMatrix& L, const MassMatrix& M);
MeanCurvatureField mean_curvature(const EmbeddedMesh& mesh);

/// Integral of |H|^2 against the lumped measure (Willmore energy).
double total_mean_curvature(const EmbeddedMesh& mesh);
double total_mean_curvature(const MeanCurvatureField& H, const MassMatrix& M);

double dirichlet_energy(const StiffnessMatrix& L, const Eigen::VectorXd& f);
double rayleigh_quotient(const StiffnessMatrix& L, const MassMatrix& M, const Eigen::VectorXd& f);

/// A + sum_v (x_v . H_v) M_vv, evaluated on the mesh as given.
double minkowski_defect(const EmbeddedMesh& mesh);

}  // namespace confspec

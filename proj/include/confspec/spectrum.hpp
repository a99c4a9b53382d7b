#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "confspec/mesh.hpp"
#include "confspec/operators.hpp"

namespace confspec {

enum class SolverMethod { Auto, Dense, Iterative };

std::string_view to_string(SolverMethod method) noexcept;

struct SolveOptions {
  /// Bound on every relative residual |Lv - lambda M v| / (|Mv| lambda_ref).
  double tol = 1e-9;
  SolverMethod method = SolverMethod::Auto;
  std::uint64_t seed = 0;
  /// Auto switches to the dense solver at or below this many vertices.
  int dense_threshold = 500;
  /// Iterative solver: columns per Krylov block (0 picks max(k - 1, 6)).
  int block_size = 0;
  /// Iterative solver: basis size that triggers a thick restart (0 = auto).
  int max_basis = 0;
  /// Iterative solver: cap on operator block applications.
  int max_block_steps = 600;
};

/// Smallest eigenpairs of L v = lambda M v, ascending. Eigenvectors are
/// M-orthonormal columns. residuals[i] is |L v_i - lambda_i M v_i| / |M v_i|
/// divided by lambda_i, or by the largest computed eigenvalue for the zero mode
/// (the Gershgorin bound of the pencil when nothing but zero modes was computed).
struct SpectrumResult {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd eigenvectors;
  Eigen::VectorXd residuals;
  double solve_tol = 0.0;
  SolverMethod method = SolverMethod::Auto;
  std::uint64_t seed = 0;
  int block_steps = 0;

  int k() const noexcept { return static_cast<int>(eigenvalues.size()); }
  double max_residual() const { return residuals.size() ? residuals.maxCoeff() : 0.0; }
};

SpectrumResult solve_generalized(const StiffnessMatrix& L, const MassMatrix& M, int k, const SolveOptions& options = {});

/// Convenience: assembles the cotangent operators of `mesh` and solves.
SpectrumResult solve_mesh(const EmbeddedMesh& mesh, int k, const SolveOptions& options = {});

/// A group of numerically coincident eigenvalues.
struct EigenCluster {
  double value = 0.0;          // smallest member
  std::vector<int> members;    // indices into SpectrumResult::eigenvalues
  bool truncated = false;      // cluster reaches the last computed eigenvalue

  int multiplicity() const noexcept { return static_cast<int>(members.size()); }
};

/// Default relative cluster width: max(1e-6, 5 x largest residual).
double default_cluster_tol(const SpectrumResult& spec);

/// First cluster above the zero mode. Throws InsufficientSpectrum when every
/// computed eigenvalue belongs to the zero cluster.
EigenCluster first_nonzero(const SpectrumResult& spec, std::optional<double> cluster_tol = std::nullopt);

/// max_i |L X_i - lambda_1 M X_i|_{M^-1} / (lambda_1 |X_i|_M) over the
/// coordinate functions; zero exactly when the (centered) immersion is of
/// order 1. Throws NotCentered if the centroid is off by more than 1e-6 x diameter.
double order_one_residual(const EmbeddedMesh& mesh, const StiffnessMatrix& L, const MassMatrix& M,
                          const SpectrumResult& spec);
double order_one_residual(const EmbeddedMesh& mesh, const SpectrumResult& spec);

struct TakahashiCheck {
  double lambda1 = 0.0;
  double radius = 0.0;         // sqrt(2 / lambda1)
  double max_deviation = 0.0;  // max_v ||x_v| - radius| / radius
  double order_one_residual = 0.0;
  double tol = 0.0;
  bool applicable = false;     // order-one residual <= 0.05
  bool passed = false;
};

/// Centered order-1 immersions lie on the sphere of radius sqrt(2 / lambda1).
TakahashiCheck takahashi_radius_check(const EmbeddedMesh& mesh, const SpectrumResult& spec, double tol);

inline constexpr double kOrderOneThreshold = 0.05;

}  // namespace confspec

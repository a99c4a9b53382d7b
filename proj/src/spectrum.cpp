#include "confspec/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include <Eigen/Eigenvalues>
#include <Eigen/SparseCholesky>

namespace confspec {

std::string_view to_string(SolverMethod method) noexcept {
  switch (method) {
    case SolverMethod::Auto: return "auto";
    case SolverMethod::Dense: return "dense";
    case SolverMethod::Iterative: return "iterative";
  }
  return "unknown";
}

namespace {

void relative_residuals(const StiffnessMatrix& L, const MassMatrix& M, SpectrumResult& out) {
  const int k = out.k();
  out.residuals.resize(k);
  // With only zero modes computed there is no eigenvalue to measure against;
  // fall back to the Gershgorin scale of the pencil.
  double top = out.eigenvalues.cwiseAbs().maxCoeff();
  const double gershgorin = 2.0 * Eigen::VectorXd(L.matrix.diagonal()).cwiseQuotient(M.diagonal).maxCoeff();
  if (top < 1e-8 * gershgorin) top = gershgorin;
  top = std::max(top, std::numeric_limits<double>::min());
  for (int i = 0; i < k; ++i) {
    const Eigen::VectorXd v = out.eigenvectors.col(i);
    const Eigen::VectorXd Mv = M.diagonal.cwiseProduct(v);
    const double lambda = out.eigenvalues[i];
    const double ref = std::abs(lambda) >= 1e-8 * top ? std::abs(lambda) : top;
    out.residuals[i] = (L.matrix * v - lambda * Mv).norm() / (Mv.norm() * ref);
  }
}

SpectrumResult solve_dense(const StiffnessMatrix& L, const MassMatrix& M, int k, const SolveOptions& options) {
  const Eigen::VectorXd inv_sqrt = M.diagonal.cwiseSqrt().cwiseInverse();
  Eigen::MatrixXd S = inv_sqrt.asDiagonal() * Eigen::MatrixXd(L.matrix) * inv_sqrt.asDiagonal();
  S = 0.5 * (S + S.transpose()).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(S);
  if (eig.info() != Eigen::Success) throw Error(ErrorCode::ConvergenceFailure, "dense eigensolver failed");

  SpectrumResult out;
  out.eigenvalues = eig.eigenvalues().head(k);
  out.eigenvectors = inv_sqrt.asDiagonal() * eig.eigenvectors().leftCols(k);
  out.solve_tol = options.tol;
  out.method = SolverMethod::Dense;
  out.seed = options.seed;
  relative_residuals(L, M, out);
  return out;
}

/// Shift-invert operator T = M^1/2 L^+ M^1/2 on the complement of the
/// constant mode. L^+ is applied by grounding one vertex and factoring the
/// reduced (positive definite) stiffness matrix.
class DeflatedInverse {
 public:
  DeflatedInverse(const StiffnessMatrix& L, const MassMatrix& M)
      : n_(L.size()), sqrt_mass_(M.diagonal.cwiseSqrt()), zero_mode_(sqrt_mass_.normalized()) {
    const Eigen::SparseMatrix<double> reduced = L.matrix.bottomRightCorner(n_ - 1, n_ - 1);
    solver_.compute(reduced);
    if (solver_.info() != Eigen::Success) {
      throw Error(ErrorCode::ConvergenceFailure, "factorization of the grounded stiffness matrix failed");
    }
  }

  const Eigen::VectorXd& zero_mode() const { return zero_mode_; }

  void deflate(Eigen::Ref<Eigen::VectorXd> y) const { y -= zero_mode_.dot(y) * zero_mode_; }

  Eigen::MatrixXd apply(const Eigen::MatrixXd& Y) const {
    Eigen::MatrixXd rhs = sqrt_mass_.asDiagonal() * Y;
    Eigen::MatrixXd X = Eigen::MatrixXd::Zero(n_, Y.cols());
    X.bottomRows(n_ - 1) = solver_.solve(rhs.bottomRows(n_ - 1));
    Eigen::MatrixXd out = sqrt_mass_.asDiagonal() * X;
    for (Eigen::Index j = 0; j < out.cols(); ++j) deflate(out.col(j));
    return out;
  }

 private:
  int n_;
  Eigen::VectorXd sqrt_mass_;
  Eigen::VectorXd zero_mode_;
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver_;
};

/// Orthonormalizes the columns of B against Q (first `used` columns), the
/// zero mode, and each other. Columns that vanish are replaced by fresh
/// random directions.
void orthonormalize_block(Eigen::MatrixXd& B, const Eigen::MatrixXd& Q, Eigen::Index used, const DeflatedInverse& op,
                          std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  const auto basis = Q.leftCols(used);
  for (Eigen::Index j = 0; j < B.cols(); ++j) {
    for (int attempt = 0;; ++attempt) {
      Eigen::VectorXd w = B.col(j);
      const double before = w.norm();
      for (int pass = 0; pass < 2; ++pass) {
        op.deflate(w);
        if (used > 0) w -= basis * (basis.transpose() * w);
        if (j > 0) w -= B.leftCols(j) * (B.leftCols(j).transpose() * w);
      }
      const double after = w.norm();
      if (after > 1e-10 * before && after > 0.0) {
        B.col(j) = w / after;
        break;
      }
      if (attempt > 8) throw Error(ErrorCode::ConvergenceFailure, "could not extend the Krylov basis");
      for (Eigen::Index i = 0; i < B.rows(); ++i) B(i, j) = gauss(rng);
    }
  }
}

SpectrumResult solve_iterative(const StiffnessMatrix& L, const MassMatrix& M, int k, const SolveOptions& options) {
  const int n = L.size();
  const int wanted = k - 1;
  const DeflatedInverse op(L, M);
  std::mt19937_64 rng(options.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  SpectrumResult out;
  out.solve_tol = options.tol;
  out.method = SolverMethod::Iterative;
  out.seed = options.seed;
  out.eigenvalues.resize(k);
  out.eigenvectors.resize(n, k);

  // Constant mode, reported with its (rounding-level) Rayleigh quotient.
  const Eigen::VectorXd constant = op.zero_mode().cwiseQuotient(M.diagonal.cwiseSqrt());
  out.eigenvectors.col(0) = constant;
  out.eigenvalues[0] = constant.dot(L.matrix * constant);

  if (wanted == 0) {
    relative_residuals(L, M, out);
    return out;
  }

  const int free_dim = n - 1;
  const int p = std::min(free_dim, options.block_size > 0 ? options.block_size : std::max(wanted, 6));
  int max_basis = options.max_basis > 0 ? options.max_basis : std::max(20 * p, 160);
  max_basis = std::min(free_dim, std::max(max_basis, wanted + 2 * p));

  Eigen::MatrixXd Q(n, max_basis);
  Eigen::MatrixXd TQ(n, max_basis);
  Eigen::MatrixXd H = Eigen::MatrixXd::Zero(max_basis, max_basis);
  Eigen::Index used = 0;

  Eigen::MatrixXd block(n, p);
  for (Eigen::Index j = 0; j < p; ++j) {
    for (int i = 0; i < n; ++i) block(i, j) = gauss(rng);
  }
  orthonormalize_block(block, Q, used, op, rng);

  const Eigen::VectorXd inv_sqrt = M.diagonal.cwiseSqrt().cwiseInverse();
  Eigen::VectorXd theta;
  Eigen::MatrixXd ritz;
  Eigen::MatrixXd ritz_image;
  int steps = 0;

  while (true) {
    const Eigen::Index width = std::min<Eigen::Index>(block.cols(), max_basis - used);
    const Eigen::MatrixXd image = op.apply(block.leftCols(width));
    ++steps;
    Q.middleCols(used, width) = block.leftCols(width);
    TQ.middleCols(used, width) = image;
    const Eigen::MatrixXd coupling = Q.leftCols(used + width).transpose() * image;
    H.block(0, used, used + width, width) = coupling;
    H.block(used, 0, width, used + width) = coupling.transpose();
    used += width;
    H.topLeftCorner(used, used) = 0.5 * (H.topLeftCorner(used, used) + H.topLeftCorner(used, used).transpose()).eval();

    // Largest Ritz values of T are the smallest nonzero eigenvalues of (L, M).
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> small(H.topLeftCorner(used, used));
    const Eigen::Index keep = std::min<Eigen::Index>(used, std::max<Eigen::Index>(wanted, used - p));
    const Eigen::MatrixXd S = small.eigenvectors().rightCols(keep).rowwise().reverse();
    theta = small.eigenvalues().tail(keep).reverse();
    ritz = Q.leftCols(used) * S;
    ritz_image = TQ.leftCols(used) * S;

    if (used >= wanted) {
      SpectrumResult trial = out;
      for (int i = 0; i < wanted; ++i) {
        trial.eigenvalues[i + 1] = 1.0 / theta[i];
        trial.eigenvectors.col(i + 1) = inv_sqrt.cwiseProduct(ritz.col(i));
      }
      relative_residuals(L, M, trial);
      if (trial.residuals.maxCoeff() <= options.tol) {
        trial.block_steps = steps;
        return trial;
      }
    }
    if (steps >= options.max_block_steps || used >= free_dim) {
      throw Error(ErrorCode::ConvergenceFailure, "iterative eigensolver stalled after " + std::to_string(steps) +
                                                     " block steps");
    }

    if (used + p > max_basis) {
      // Thick restart: keep the leading Ritz vectors, continue from their residuals.
      const Eigen::Index kept = std::min<Eigen::Index>(keep, max_basis - p);
      Q.leftCols(kept) = ritz.leftCols(kept);
      TQ.leftCols(kept) = ritz_image.leftCols(kept);
      H.setZero();
      H.topLeftCorner(kept, kept) = theta.head(kept).asDiagonal();
      used = kept;
      const Eigen::Index w = std::min<Eigen::Index>(p, kept);
      block = ritz_image.leftCols(w) - ritz.leftCols(w) * theta.head(w).asDiagonal();
    } else {
      block = image;
    }
    orthonormalize_block(block, Q, used, op, rng);
  }
}

}  // namespace

SpectrumResult solve_generalized(const StiffnessMatrix& L, const MassMatrix& M, int k, const SolveOptions& options) {
  const int n = L.size();
  if (M.size() != n || L.matrix.cols() != n) throw Error(ErrorCode::SizeMismatch, "L and M sizes differ");
  if (k < 1 || k >= n) {
    throw Error(ErrorCode::InvalidArgument, "need 1 <= k < n, got k=" + std::to_string(k) + " n=" + std::to_string(n));
  }
  if (!(M.diagonal.minCoeff() > 0.0)) throw Error(ErrorCode::InvalidArgument, "mass matrix must be positive");

  const bool dense = options.method == SolverMethod::Dense ||
                     (options.method == SolverMethod::Auto && n <= options.dense_threshold);
  SpectrumResult out = dense ? solve_dense(L, M, k, options) : solve_iterative(L, M, k, options);
  if (out.max_residual() > options.tol) {
    throw Error(ErrorCode::ConvergenceFailure, "residual " + std::to_string(out.max_residual()) +
                                                   " exceeds tolerance " + std::to_string(options.tol));
  }
  return out;
}

SpectrumResult solve_mesh(const EmbeddedMesh& mesh, int k, const SolveOptions& options) {
  return solve_generalized(cotan_stiffness(mesh), lumped_mass(mesh), k, options);
}

double default_cluster_tol(const SpectrumResult& spec) { return std::max(1e-6, 5.0 * spec.max_residual()); }

EigenCluster first_nonzero(const SpectrumResult& spec, std::optional<double> cluster_tol) {
  const int k = spec.k();
  if (k < 2) throw Error(ErrorCode::InsufficientSpectrum, "need at least two eigenvalues, got " + std::to_string(k));
  const double top = spec.eigenvalues.cwiseAbs().maxCoeff();
  const double zero_floor = std::max(10.0 * spec.max_residual(), 1e-8) * top;
  const double width = cluster_tol.value_or(default_cluster_tol(spec));

  int first = 0;
  while (first < k && spec.eigenvalues[first] <= zero_floor) ++first;
  if (first == k) {
    throw Error(ErrorCode::InsufficientSpectrum, "all " + std::to_string(k) + " computed eigenvalues are zero modes");
  }
  EigenCluster cluster;
  cluster.value = spec.eigenvalues[first];
  for (int i = first; i < k && spec.eigenvalues[i] - cluster.value <= width * cluster.value; ++i) {
    cluster.members.push_back(i);
  }
  cluster.truncated = cluster.members.back() == k - 1;
  return cluster;
}

double order_one_residual(const EmbeddedMesh& mesh, const StiffnessMatrix& L, const MassMatrix& M,
                          const SpectrumResult& spec) {
  const double offset = center_of_gravity(mesh).norm();
  if (offset > 1e-6 * diameter(mesh)) {
    throw Error(ErrorCode::NotCentered, "center of gravity is " + std::to_string(offset) + " from the origin");
  }
  const double lambda1 = first_nonzero(spec).value;
  const Eigen::MatrixXd X = mesh.vertices();
  const Eigen::MatrixXd R = L.matrix * X - lambda1 * (M.diagonal.asDiagonal() * X);
  const Eigen::VectorXd inv_mass = M.diagonal.cwiseInverse();

  Eigen::VectorXd coord_norm(X.cols());
  for (Eigen::Index i = 0; i < X.cols(); ++i) coord_norm[i] = std::sqrt(X.col(i).cwiseAbs2().dot(M.diagonal));
  const double largest = coord_norm.maxCoeff();

  double worst = 0.0;
  for (Eigen::Index i = 0; i < X.cols(); ++i) {
    if (coord_norm[i] <= 1e-12 * largest) continue;  // coordinate identically zero
    const double r = std::sqrt(R.col(i).cwiseAbs2().dot(inv_mass));
    worst = std::max(worst, r / (lambda1 * coord_norm[i]));
  }
  return worst;
}

double order_one_residual(const EmbeddedMesh& mesh, const SpectrumResult& spec) {
  return order_one_residual(mesh, cotan_stiffness(mesh), lumped_mass(mesh), spec);
}

TakahashiCheck takahashi_radius_check(const EmbeddedMesh& mesh, const SpectrumResult& spec, double tol) {
  TakahashiCheck check;
  check.tol = tol;
  check.lambda1 = first_nonzero(spec).value;
  check.radius = std::sqrt(2.0 / check.lambda1);
  const Eigen::VectorXd norms = mesh.vertices().rowwise().norm();
  check.max_deviation = (norms.array() - check.radius).abs().maxCoeff() / check.radius;
  check.order_one_residual = order_one_residual(mesh, spec);
  check.applicable = check.order_one_residual <= kOrderOneThreshold;
  check.passed = check.applicable && check.max_deviation <= tol;
  return check;
}

}  // namespace confspec

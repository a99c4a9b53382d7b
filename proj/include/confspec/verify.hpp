#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "confspec/conformal.hpp"
#include "confspec/mesh.hpp"
#include "confspec/report.hpp"
#include "confspec/spectrum.hpp"
#include "confspec/surfaces.hpp"

namespace confspec {

/// A mesh together with the description that goes into reports.
struct LabeledMesh {
  MeshInfo info;
  EmbeddedMesh mesh;
};

LabeledMesh label(EmbeddedMesh mesh, std::string generator, std::string parameters = {}, int resolution = 0);

// Labeled generators used by the experiment catalog.
LabeledMesh labeled_clifford(int n);
LabeledMesh labeled_anchor_ring(double a, int n);
LabeledMesh labeled_sphere(double r, int subdiv);
LabeledMesh labeled_veronese(int subdiv);

/// Thresholds of the verification catalog. Every report copies the ones it
/// used into ExperimentReport::tolerances.
struct VerifyOptions {
  SolveOptions solve;
  int k = 8;
  double reilly_slack = 0.02;         // relative, of lambda1 A / 2
  double minkowski_budget = 0.03;     // relative defect
  double tmc_drift_budget = 0.02;     // relative TMC change under a conformal map
  double theorem_slack = 0.02;        // lambda1 bound overshoot allowed
  double cyclide_margin = 0.01;       // lambda1 A < 4 pi^2 (1 - margin)
  double exact_tol = 1e-11;           // discrete identities
  double dirichlet_tol = 0.02;        // sum_i x_i^T L x_i vs 2A
  double min_principle_slack = 0.02;  // 2A >= lambda1 int |x|^2 - slack
  double rayleigh_tol = 1e-9;         // random quotients >= lambda1 (1 - tol)
  double takahashi_tol = 0.02;
};

/// First nonzero eigenvalue cluster, re-solving with a larger k while the
/// cluster runs into the end of the computed spectrum.
struct FirstEigen {
  SpectrumResult spectrum;
  EigenCluster cluster;
};
FirstEigen first_eigen(const EmbeddedMesh& mesh, const VerifyOptions& options);

/// Inversion with scale `scale` about a point at distance `radius` from the
/// origin in a seeded random direction of E^m.
Inversion seeded_inversion(std::uint64_t seed, int m, double radius, double scale = 1.0);

/// A, lambda1 (with multiplicity), TMC, lambda1 A, order-1 residual,
/// Takahashi deviation and Minkowski defect of a single surface. The verdict
/// only covers the Takahashi check when it applies.
ExperimentReport surface_summary(const LabeledMesh& surface, const VerifyOptions& options);

/// TMC >= lambda1 A / 2, failing only when the gap drops below -slack.
ExperimentReport check_reilly(const LabeledMesh& surface, const VerifyOptions& options);

/// |A + int x.H| / A over a refinement series: final value within budget,
/// non-increasing along the series (rounding-level values count as converged).
ExperimentReport check_minkowski(const std::vector<LabeledMesh>& refinements, const VerifyOptions& options);

/// |TMC(phi o x) - TMC(x)| / TMC(x) over a refinement series.
ExperimentReport check_conformal_tmc(const std::vector<LabeledMesh>& refinements, const ConformalMap& map,
                                     const VerifyOptions& options);

/// Centers the surface, applies `map`, rescales to the original area and
/// compares first eigenvalues. Not applicable unless the surface is of order 1.
ExperimentReport run_theorem1(const LabeledMesh& surface, const ConformalMap& map, const VerifyOptions& options);

/// Conformal Clifford tori normalized to area 4 pi^2 have lambda1 <= 1.
/// The identity member is always evaluated first; `other_members` are
/// conformal Clifford tori not obtained from the E^4 mesh (e.g. anchor rings).
ExperimentReport run_theorem2(const std::vector<ConformalMap>& maps, const std::vector<LabeledMesh>& other_members,
                              int resolution, const VerifyOptions& options);

/// Conformal Veronese surfaces normalized to area 2 pi have lambda1 <= 6.
ExperimentReport run_theorem3(const std::vector<ConformalMap>& maps, int subdiv, const VerifyOptions& options);

/// Cyclide of Dupin from the sqrt(2) anchor ring: lambda1 A < 4 pi^2.
ExperimentReport run_cyclide(double a, const Eigen::Vector3d& center, double scale, GridResolution res,
                             const VerifyOptions& options);

/// lambda1(c x) c^2 = lambda1(x) and A(c x) = c^2 A(x) to exact_tol.
ExperimentReport check_scaling(const LabeledMesh& surface, double c, const VerifyOptions& options);

/// Rayleigh quotients of seeded mean-zero functions stay above lambda1, and
/// the coordinate identities sum |dx_i|^2 = 2A, 2A >= lambda1 int |x|^2.
ExperimentReport check_minimum_principle(const LabeledMesh& surface, int trials, std::uint64_t seed,
                                         const VerifyOptions& options);

// Catalog of default experiments driven by the CLI.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);
std::vector<ExperimentReport> run_suite(const std::string& name, const VerifyOptions& options);

}  // namespace confspec

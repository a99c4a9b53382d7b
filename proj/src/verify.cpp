#include "confspec/verify.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

namespace confspec {

namespace {

constexpr double kFourPiSq = 4.0 * std::numbers::pi * std::numbers::pi;
constexpr double kRoundingFloor = 1e-12;

std::string num(double x) {
  std::ostringstream out;
  out.precision(10);
  out << x;
  return out.str();
}

ExperimentReport start_report(std::string id, const MeshInfo& info) {
  ExperimentReport r;
  r.id = std::move(id);
  r.mesh = info;
  return r;
}

/// Number of steps where a series grows while above the rounding floor.
int count_increases(const std::vector<double>& values) {
  int increases = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] > values[i - 1] && values[i] > kRoundingFloor) ++increases;
  }
  return increases;
}

double relative_change(double value, double reference) { return std::abs(value - reference) / std::abs(reference); }

}  // namespace

LabeledMesh label(EmbeddedMesh mesh, std::string generator, std::string parameters, int resolution) {
  MeshInfo info{std::move(generator), std::move(parameters), resolution, mesh.vertex_count(), mesh.face_count(),
                mesh.ambient_dim()};
  return {std::move(info), std::move(mesh)};
}

LabeledMesh labeled_clifford(int n) {
  return label(gen_clifford(GridResolution::square(n)), "clifford", "res=" + std::to_string(n) + "x" + std::to_string(n), n);
}

LabeledMesh labeled_anchor_ring(double a, int n) {
  return label(gen_anchor_ring(a, GridResolution::square(n)), "anchor",
               "a=" + num(a) + " res=" + std::to_string(n) + "x" + std::to_string(n), n);
}

LabeledMesh labeled_sphere(double r, int subdiv) {
  return label(gen_sphere(r, subdiv), "sphere", "r=" + num(r) + " subdiv=" + std::to_string(subdiv), subdiv);
}

LabeledMesh labeled_veronese(int subdiv) {
  return label(gen_veronese(subdiv), "veronese", "subdiv=" + std::to_string(subdiv), subdiv);
}

FirstEigen first_eigen(const EmbeddedMesh& mesh, const VerifyOptions& options) {
  const int n = mesh.vertex_count();
  int k = std::min(options.k, n - 1);
  const StiffnessMatrix L = cotan_stiffness(mesh);
  const MassMatrix M = lumped_mass(mesh);
  while (true) {
    SpectrumResult spec = solve_generalized(L, M, k, options.solve);
    EigenCluster cluster = first_nonzero(spec);
    if (!cluster.truncated || k >= n - 1) return {std::move(spec), std::move(cluster)};
    k = std::min(2 * k, n - 1);
  }
}

Inversion seeded_inversion(std::uint64_t seed, int m, double radius, double scale) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXd dir(m);
  for (int i = 0; i < m; ++i) dir[i] = gauss(rng);
  return Inversion{radius * dir.normalized(), scale};
}

ExperimentReport surface_summary(const LabeledMesh& surface, const VerifyOptions& options) {
  ExperimentReport r = start_report("summary/" + surface.info.generator, surface.info);
  const EmbeddedMesh centered = center_mesh(surface.mesh);
  const StiffnessMatrix L = cotan_stiffness(centered);
  const MassMatrix M = lumped_mass(centered);
  const FirstEigen eig = first_eigen(centered, options);
  const double A = surface_area(centered);
  const double tmc = total_mean_curvature(mean_curvature(centered, L, M), M);

  r.set("A", A);
  r.set("lambda1", eig.cluster.value);
  r.set("multiplicity", eig.cluster.multiplicity());
  r.set("TMC", tmc);
  r.set("lambda1A", eig.cluster.value * A);
  r.set("reilly_rel", (tmc - 0.5 * eig.cluster.value * A) / (0.5 * eig.cluster.value * A));
  r.set("minkowski_rel", std::abs(minkowski_defect(centered)) / A);
  r.set("max_residual", eig.spectrum.max_residual());

  const TakahashiCheck tk = takahashi_radius_check(centered, eig.spectrum, options.takahashi_tol);
  r.set("order1_residual", tk.order_one_residual);
  r.set("takahashi_radius", tk.radius);
  r.set("takahashi_deviation", tk.max_deviation);
  r.tolerances["takahashi"] = options.takahashi_tol;
  r.tolerances["order1"] = kOrderOneThreshold;
  r.tolerances["solve"] = options.solve.tol;
  if (tk.applicable) {
    r.require("takahashi_sphere", "takahashi_deviation", Relation::LessEqual, options.takahashi_tol);
  } else {
    r.note = "order-1 residual above " + num(kOrderOneThreshold) + "; Takahashi radius check does not apply";
  }
  r.finalize();
  return r;
}

ExperimentReport check_reilly(const LabeledMesh& surface, const VerifyOptions& options) {
  ExperimentReport r = start_report("reilly/" + surface.info.generator, surface.info);
  const FirstEigen eig = first_eigen(surface.mesh, options);
  const double A = surface_area(surface.mesh);
  const double tmc = total_mean_curvature(surface.mesh);
  const double half = 0.5 * eig.cluster.value * A;
  r.set("A", A);
  r.set("lambda1", eig.cluster.value);
  r.set("multiplicity", eig.cluster.multiplicity());
  r.set("TMC", tmc);
  r.set("lambda1A", eig.cluster.value * A);
  r.set("reilly_gap", tmc - half);
  r.set("reilly_rel", (tmc - half) / half);
  r.tolerances["reilly_slack"] = options.reilly_slack;
  r.require("reilly", "reilly_rel", Relation::GreaterEqual, -options.reilly_slack);
  r.finalize();
  return r;
}

ExperimentReport check_minkowski(const std::vector<LabeledMesh>& refinements, const VerifyOptions& options) {
  if (refinements.empty()) throw Error(ErrorCode::InvalidArgument, "check_minkowski needs at least one mesh");
  ExperimentReport r = start_report("minkowski/" + refinements.back().info.generator, refinements.back().info);
  RefinementSeries series{"minkowski_rel", {}, {}};
  for (const auto& level : refinements) {
    const double A = surface_area(level.mesh);
    const double rel = std::abs(minkowski_defect(level.mesh)) / A;
    series.resolutions.push_back(level.info.resolution);
    series.values.push_back(rel);
    r.set("minkowski_rel@" + std::to_string(level.info.resolution), rel);
  }
  if (!series.is_valid()) throw Error(ErrorCode::InvalidArgument, "refinement resolutions must increase");
  r.set("A", surface_area(refinements.back().mesh));
  r.set("minkowski_rel", series.values.back());
  r.set("series_increases", count_increases(series.values));
  r.series.push_back(std::move(series));
  r.tolerances["minkowski_budget"] = options.minkowski_budget;
  r.tolerances["rounding_floor"] = kRoundingFloor;
  r.require("minkowski_budget", "minkowski_rel", Relation::LessEqual, options.minkowski_budget);
  r.require("non_increasing", "series_increases", Relation::LessEqual, 0.0);
  r.finalize();
  return r;
}

ExperimentReport check_conformal_tmc(const std::vector<LabeledMesh>& refinements, const ConformalMap& map,
                                     const VerifyOptions& options) {
  if (refinements.empty()) throw Error(ErrorCode::InvalidArgument, "check_conformal_tmc needs at least one mesh");
  ExperimentReport r = start_report("tmc-conformal/" + refinements.back().info.generator, refinements.back().info);
  r.note = "map: " + map.describe();
  RefinementSeries series{"tmc_drift", {}, {}};
  for (const auto& level : refinements) {
    const double before = total_mean_curvature(level.mesh);
    const double after = total_mean_curvature(apply_mesh(map, level.mesh));
    const double drift = relative_change(after, before);
    const std::string suffix = "@" + std::to_string(level.info.resolution);
    r.set("TMC" + suffix, before);
    r.set("TMC_image" + suffix, after);
    r.set("tmc_drift" + suffix, drift);
    series.resolutions.push_back(level.info.resolution);
    series.values.push_back(drift);
  }
  if (!series.is_valid()) throw Error(ErrorCode::InvalidArgument, "refinement resolutions must increase");
  r.set("TMC", r.quantities.at("TMC@" + std::to_string(refinements.back().info.resolution)));
  r.set("tmc_drift", series.values.back());
  r.set("refinements", static_cast<double>(refinements.size()));
  r.set("series_increases", count_increases(series.values));
  r.series.push_back(std::move(series));
  r.tolerances["tmc_drift_budget"] = options.tmc_drift_budget;
  r.require("drift_budget", "tmc_drift", Relation::LessEqual, options.tmc_drift_budget);
  r.require("non_increasing", "series_increases", Relation::LessEqual, 0.0);
  r.finalize();
  return r;
}

ExperimentReport run_theorem1(const LabeledMesh& surface, const ConformalMap& map, const VerifyOptions& options) {
  ExperimentReport r = start_report("theorem1/" + surface.info.generator, surface.info);
  r.note = "map: " + map.describe();
  r.tolerances["theorem_slack"] = options.theorem_slack;
  r.tolerances["order1"] = kOrderOneThreshold;
  r.tolerances["tmc_drift_budget"] = options.tmc_drift_budget;

  const EmbeddedMesh base = center_mesh(surface.mesh);
  const FirstEigen base_eig = first_eigen(base, options);
  const double order_one = order_one_residual(base, base_eig.spectrum);
  r.set("order1_residual", order_one);
  if (order_one > kOrderOneThreshold) {
    r.applicable = false;
    r.note += "; surface is not of order 1";
    r.finalize();
    return r;
  }

  const AreaNormalized image = area_normalize(base, apply_mesh(map, base));
  const FirstEigen image_eig = first_eigen(image.mesh, options);
  const double A = surface_area(base);
  const double A_image = surface_area(image.mesh);
  const double l1 = base_eig.cluster.value;
  const double l1_image = image_eig.cluster.value;
  const double tmc = total_mean_curvature(base);
  const double tmc_image = total_mean_curvature(image.mesh);

  r.set("A", A);
  r.set("A_image", A_image);
  r.set("normalization_scale", image.scale);
  r.set("lambda1", l1);
  r.set("multiplicity", base_eig.cluster.multiplicity());
  r.set("lambda1_image", l1_image);
  r.set("multiplicity_image", image_eig.cluster.multiplicity());
  r.set("lambda1_diff", l1_image - l1);
  r.set("lambda1_ratio", l1_image / l1);
  r.set("lambda1A", l1 * A);
  r.set("lambda1A_image", l1_image * A_image);
  r.set("lambda1A_ratio", l1_image * A_image / (l1 * A));
  r.set("TMC", tmc);
  r.set("TMC_image", tmc_image);
  r.set("reilly_ratio_image", l1_image * A_image / (2.0 * tmc_image));
  r.set("tmc_drift", relative_change(tmc_image, tmc));

  r.require("lambda1_bound", "lambda1_ratio", Relation::LessEqual, 1.0 + options.theorem_slack);
  r.require("product_bound", "lambda1A_ratio", Relation::LessEqual, 1.0 + options.theorem_slack);
  r.require("reilly_on_image", "reilly_ratio_image", Relation::LessEqual, 1.0 + options.theorem_slack);
  r.require("tmc_invariance", "tmc_drift", Relation::LessEqual, options.tmc_drift_budget);
  r.finalize();
  return r;
}

namespace {

struct ClassMember {
  std::string name;
  EmbeddedMesh mesh;
};

ExperimentReport conformal_class_bound(const std::string& id, const LabeledMesh& base, double area, double bound,
                                       double identity_tol, const std::vector<ConformalMap>& maps,
                                       const std::vector<LabeledMesh>& others, const VerifyOptions& options) {
  ExperimentReport r = start_report(id, base.info);
  r.tolerances["theorem_slack"] = options.theorem_slack;
  r.tolerances["identity_tol"] = identity_tol;
  r.set("normalized_area", area);
  r.set("bound", bound);

  std::vector<ClassMember> members;
  members.push_back({"identity", base.mesh});
  for (std::size_t i = 0; i < maps.size(); ++i) {
    members.push_back({"map" + std::to_string(i), apply_mesh(maps[i], base.mesh)});
  }
  for (const auto& other : others) members.push_back({other.info.generator + "(" + other.info.parameters + ")", other.mesh});

  std::ostringstream note;
  for (std::size_t i = 0; i < members.size(); ++i) {
    const auto& member = members[i];
    const EmbeddedMesh normalized = area_normalize_to(area, member.mesh).mesh;
    const FirstEigen eig = first_eigen(normalized, options);
    const std::string key = "lambda1[" + member.name + "]";
    r.set(key, eig.cluster.value);
    r.set("multiplicity[" + member.name + "]", eig.cluster.multiplicity());
    r.require("bound[" + member.name + "]", key, Relation::LessEqual, bound * (1.0 + options.theorem_slack));
    if (i == 0) {
      r.set("A", area);
      r.set("lambda1", eig.cluster.value);
      r.set("multiplicity", eig.cluster.multiplicity());
      r.set("lambda1A", eig.cluster.value * area);
      r.set("TMC", total_mean_curvature(normalized));
      r.set("identity_deviation", std::abs(eig.cluster.value - bound));
      r.require("identity_attains_bound", "identity_deviation", Relation::LessEqual, identity_tol);
    }
    if (i > 0 && i <= maps.size()) note << (i > 1 ? "; " : "") << member.name << ": " << maps[i - 1].describe();
  }
  r.note = note.str();
  r.finalize();
  return r;
}

}  // namespace

ExperimentReport run_theorem2(const std::vector<ConformalMap>& maps, const std::vector<LabeledMesh>& other_members,
                              int resolution, const VerifyOptions& options) {
  return conformal_class_bound("theorem2/clifford", labeled_clifford(resolution), kFourPiSq, 1.0, 0.02, maps,
                               other_members, options);
}

ExperimentReport run_theorem3(const std::vector<ConformalMap>& maps, int subdiv, const VerifyOptions& options) {
  return conformal_class_bound("theorem3/veronese", labeled_veronese(subdiv), 2.0 * std::numbers::pi, 6.0, 0.15, maps,
                               {}, options);
}

ExperimentReport run_cyclide(double a, const Eigen::Vector3d& center, double scale, GridResolution res,
                             const VerifyOptions& options) {
  const EmbeddedMesh ring = gen_anchor_ring(a, res);
  const double guard = 1e-6 * diameter(ring);
  for (int i = 0; i < ring.vertex_count(); ++i) {
    if ((ring.vertices().row(i).transpose() - center).norm() <= guard) {
      throw Error(ErrorCode::InversionPole, "inversion center lies on the anchor ring");
    }
  }
  std::ostringstream params;
  params << "a=" << num(a) << " center=(" << num(center.x()) << "," << num(center.y()) << "," << num(center.z())
         << ") c=" << num(scale) << " res=" << res.n_u << "x" << res.n_v;
  const LabeledMesh cyclide = label(gen_cyclide(a, center, scale, res), "cyclide", params.str(), res.n_u);

  ExperimentReport r = start_report("cyclide/" + cyclide.info.generator, cyclide.info);
  const FirstEigen eig = first_eigen(cyclide.mesh, options);
  const double A = surface_area(cyclide.mesh);
  r.set("A", A);
  r.set("lambda1", eig.cluster.value);
  r.set("multiplicity", eig.cluster.multiplicity());
  r.set("lambda1A", eig.cluster.value * A);
  r.set("lambda1A_over_4pi2", eig.cluster.value * A / kFourPiSq);
  r.set("TMC", total_mean_curvature(cyclide.mesh));
  r.tolerances["cyclide_margin"] = options.cyclide_margin;
  r.require("below_4pi2", "lambda1A_over_4pi2", Relation::LessEqual, 1.0 - options.cyclide_margin);
  r.finalize();
  return r;
}

ExperimentReport check_scaling(const LabeledMesh& surface, double c, const VerifyOptions& options) {
  ExperimentReport r = start_report("scaling/" + surface.info.generator, surface.info);
  r.note = "c=" + num(c);
  const EmbeddedMesh scaled = scale_mesh(surface.mesh, c);
  const FirstEigen base = first_eigen(surface.mesh, options);
  const FirstEigen image = first_eigen(scaled, options);
  const double A = surface_area(surface.mesh);
  const double A_scaled = surface_area(scaled);
  const double l1 = base.cluster.value;
  const double l1_scaled = image.cluster.value;

  r.set("c", c);
  r.set("A", A);
  r.set("lambda1", l1);
  r.set("multiplicity", base.cluster.multiplicity());
  r.set("lambda1A", l1 * A);
  r.set("A_scaled", A_scaled);
  r.set("lambda1_scaled", l1_scaled);
  r.set("lambda1_scaling_error", relative_change(l1_scaled * c * c, l1));
  r.set("area_scaling_error", relative_change(A_scaled, c * c * A));
  r.set("lambda1A_invariance_error", relative_change(l1_scaled * A_scaled, l1 * A));
  r.tolerances["exact_tol"] = options.exact_tol;
  r.require("lambda1_scaling", "lambda1_scaling_error", Relation::LessEqual, options.exact_tol);
  r.require("area_scaling", "area_scaling_error", Relation::LessEqual, options.exact_tol);
  r.require("lambda1A_invariance", "lambda1A_invariance_error", Relation::LessEqual, options.exact_tol);
  r.finalize();
  return r;
}

ExperimentReport check_minimum_principle(const LabeledMesh& surface, int trials, std::uint64_t seed,
                                         const VerifyOptions& options) {
  ExperimentReport r = start_report("minprinciple/" + surface.info.generator, surface.info);
  const EmbeddedMesh& mesh = surface.mesh;
  if (const double off = center_of_gravity(mesh).norm(); off > 1e-6 * diameter(mesh)) {
    throw Error(ErrorCode::NotCentered, "minimum principle check needs a centered mesh (offset " + num(off) + ")");
  }
  const StiffnessMatrix L = cotan_stiffness(mesh);
  const MassMatrix M = lumped_mass(mesh);
  const FirstEigen eig = first_eigen(mesh, options);
  const double l1 = eig.cluster.value;
  const double A = M.trace();
  const int n = mesh.vertex_count();
  const Eigen::MatrixXd X = mesh.vertices();

  // Half the trials are white noise, half are random smooth functions built
  // from coordinates and their pairwise products.
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  double min_quotient = INFINITY;
  for (int t = 0; t < trials; ++t) {
    Eigen::VectorXd f(n);
    if (t % 2 == 0) {
      for (int i = 0; i < n; ++i) f[i] = gauss(rng);
    } else {
      f.setZero();
      for (Eigen::Index a = 0; a < X.cols(); ++a) {
        f += gauss(rng) * X.col(a);
        for (Eigen::Index b = a; b < X.cols(); ++b) f += 0.25 * gauss(rng) * X.col(a).cwiseProduct(X.col(b));
      }
    }
    f.array() -= f.dot(M.diagonal) / A;  // M-mean zero
    min_quotient = std::min(min_quotient, rayleigh_quotient(L, M, f));
  }

  double dirichlet = 0.0;
  double second_moment = 0.0;
  for (Eigen::Index a = 0; a < X.cols(); ++a) {
    dirichlet += dirichlet_energy(L, X.col(a));
    second_moment += X.col(a).cwiseAbs2().dot(M.diagonal);
  }

  r.set("A", A);
  r.set("lambda1", l1);
  r.set("multiplicity", eig.cluster.multiplicity());
  r.set("lambda1A", l1 * A);
  r.set("trials", trials);
  r.set("min_rayleigh", min_quotient);
  r.set("rayleigh_excess_rel", (min_quotient - l1) / l1);
  r.set("dirichlet_sum", dirichlet);
  r.set("dirichlet_vs_2A", relative_change(dirichlet, 2.0 * A));
  r.set("lambda1_second_moment", l1 * second_moment);
  r.set("moment_gap_rel", (2.0 * A - l1 * second_moment) / (2.0 * A));
  r.tolerances["rayleigh_tol"] = options.rayleigh_tol;
  r.tolerances["dirichlet_tol"] = options.dirichlet_tol;
  r.tolerances["min_principle_slack"] = options.min_principle_slack;
  r.require("rayleigh_above_lambda1", "rayleigh_excess_rel", Relation::GreaterEqual, -options.rayleigh_tol);
  r.require("dirichlet_equals_2A", "dirichlet_vs_2A", Relation::LessEqual, options.dirichlet_tol);
  r.require("second_moment_bound", "moment_gap_rel", Relation::GreaterEqual, -options.min_principle_slack);
  r.finalize();
  return r;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"cyclide",     "minkowski", "minprinciple", "reilly",  "scaling",
                                                 "tmc-conformal", "theorem1", "theorem2",     "theorem3"};
  return names;
}

bool is_suite(const std::string& name) {
  for (const auto& s : suite_names()) {
    if (s == name) return true;
  }
  return false;
}

std::vector<ExperimentReport> run_suite(const std::string& name, const VerifyOptions& options) {
  const double quarter_root = std::pow(2.0, -0.25);
  std::vector<ExperimentReport> out;
  if (name == "reilly") {
    out.push_back(check_reilly(labeled_clifford(96), options));
    out.push_back(check_reilly(labeled_sphere(1.0, 5), options));
    out.push_back(check_reilly(labeled_veronese(5), options));
    out.push_back(check_reilly(labeled_anchor_ring(1.0, 128), options));
  } else if (name == "minkowski") {
    out.push_back(check_minkowski({labeled_sphere(1.0, 3), labeled_sphere(1.0, 4), labeled_sphere(1.0, 5)}, options));
    out.push_back(check_minkowski({labeled_clifford(24), labeled_clifford(48), labeled_clifford(96)}, options));
    out.push_back(check_minkowski({labeled_anchor_ring(1.0, 64), labeled_anchor_ring(1.0, 128)}, options));
  } else if (name == "tmc-conformal") {
    const ConformalMap inversion({Inversion{Eigen::Vector3d(5, 0, 0), 2.0}});
    out.push_back(check_conformal_tmc(
        {labeled_anchor_ring(1.0, 48), labeled_anchor_ring(1.0, 96), labeled_anchor_ring(1.0, 192)}, inversion,
        options));
    const ConformalMap rigid = random_rotation(options.solve.seed, 3).then(Translation{Eigen::Vector3d(1, -2, 0.5)});
    out.push_back(check_conformal_tmc({labeled_anchor_ring(1.0, 96)}, rigid, options));
  } else if (name == "theorem1") {
    const LabeledMesh clifford = labeled_clifford(96);
    for (std::uint64_t s = 0; s < 5; ++s) {
      const ConformalMap inversion({seeded_inversion(options.solve.seed + s, 4, 3.0 + std::numbers::sqrt2)});
      out.push_back(run_theorem1(clifford, inversion, options));
      out.back().id += "/inversion" + std::to_string(s);
    }
    const ConformalMap rigid =
        random_rotation(options.solve.seed, 4).then(Translation{Eigen::Vector4d(0.5, -1, 2, 0.25)});
    out.push_back(run_theorem1(clifford, rigid, options));
    out.back().id += "/rigid";
  } else if (name == "theorem2") {
    std::vector<ConformalMap> maps;
    for (std::uint64_t s = 0; s < 3; ++s) {
      maps.emplace_back(std::vector<ConformalPrimitive>{seeded_inversion(options.solve.seed + s, 4, 3.0 + std::numbers::sqrt2)});
    }
    out.push_back(run_theorem2(maps, {labeled_anchor_ring(quarter_root, 128)}, 96, options));
  } else if (name == "theorem3") {
    const ConformalMap inversion({seeded_inversion(options.solve.seed, 5, 3.0)});
    const ConformalMap rigid = random_rotation(options.solve.seed, 5);
    out.push_back(run_theorem3({inversion, rigid}, 5, options));
  } else if (name == "cyclide") {
    out.push_back(run_cyclide(1.0, {5, 0, 0}, 1.0, GridResolution::square(128), options));
    out.push_back(run_cyclide(1.0, {0, 0, 10}, 3.0, GridResolution::square(128), options));
  } else if (name == "scaling") {
    out.push_back(check_scaling(labeled_sphere(1.0, 4), 2.0, options));
    for (double c : {0.1, 17.0}) out.push_back(check_scaling(labeled_clifford(48), c, options));
    out.push_back(check_scaling(labeled_veronese(4), 0.05, options));
  } else if (name == "minprinciple") {
    out.push_back(check_minimum_principle(labeled_sphere(1.0, 3), 50, options.solve.seed, options));
    out.push_back(check_minimum_principle(labeled_clifford(96), 50, options.solve.seed, options));
    out.push_back(check_minimum_principle(labeled_veronese(5), 50, options.solve.seed, options));
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown suite '" + name + "'");
  }
  return out;
}

}  // namespace confspec

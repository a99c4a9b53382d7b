// confspec: generate surfaces, apply conformal maps, compute spectra and run
// the verification catalog.
//
// Exit codes: 0 success, 1 verification failure, 2 usage, 3 generation,
// 4 solver, 5 transform.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>

#include "confspec/conformal.hpp"
#include "confspec/emesh_io.hpp"
#include "confspec/operators.hpp"
#include "confspec/spectrum.hpp"
#include "confspec/surfaces.hpp"
#include "confspec/verify.hpp"

namespace {

using namespace confspec;

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kGeneration = 3, kSolver = 4, kTransform = 5 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<double> parse_doubles(const std::string& text) {
  std::vector<double> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw UsageError("bad number '" + item + "' in '" + text + "'");
    out.push_back(value);
  }
  if (out.empty()) throw UsageError("empty vector '" + text + "'");
  return out;
}

Eigen::VectorXd to_vector(const std::vector<double>& values) {
  return Eigen::Map<const Eigen::VectorXd>(values.data(), static_cast<Eigen::Index>(values.size()));
}

GridResolution parse_resolution(const std::string& text) {
  const auto x = text.find('x');
  try {
    if (x == std::string::npos) {
      const int n = std::stoi(text);
      return {n, n};
    }
    return {std::stoi(text.substr(0, x)), std::stoi(text.substr(x + 1))};
  } catch (const std::exception&) {
    throw UsageError("bad resolution '" + text + "' (expected NxM)");
  }
}

Inversion parse_inversion(const std::string& text) {
  const auto colon = text.rfind(':');
  if (colon == std::string::npos) throw UsageError("inversion must look like cx,cy,...:scale, got '" + text + "'");
  const auto center = parse_doubles(text.substr(0, colon));
  const auto scale = parse_doubles(text.substr(colon + 1));
  if (scale.size() != 1) throw UsageError("inversion scale must be a single number");
  return Inversion{to_vector(center), scale[0]};
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

// ---------------------------------------------------------------- gen

struct GenArgs {
  std::string surface;
  std::string res = "64x64";
  int subdiv = 4;
  double radius = 1.0;
  double a = 1.0;
  std::string center = "5,0,0";
  double inv_scale = 1.0;
  std::string out;
};

int cmd_gen(const GenArgs& args) {
  EmbeddedMesh mesh = [&] {
    const auto& s = args.surface;
    if (s == "sphere") return gen_sphere(args.radius, args.subdiv);
    if (s == "clifford") return gen_clifford(parse_resolution(args.res));
    if (s == "anchor") return gen_anchor_ring(args.a, parse_resolution(args.res));
    if (s == "veronese") return gen_veronese(args.subdiv);
    if (s == "cyclide") {
      const auto c = parse_doubles(args.center);
      if (c.size() != 3) throw UsageError("cyclide center needs 3 coordinates");
      return gen_cyclide(args.a, Eigen::Vector3d(c[0], c[1], c[2]), args.inv_scale, parse_resolution(args.res));
    }
    throw UsageError("unknown surface '" + s + "'");
  }();
  if (!args.out.empty()) write_emesh_file(args.out, mesh);
  std::cout << "surface " << args.surface << "\nm " << mesh.ambient_dim() << "\nn " << mesh.vertex_count()
            << "\nfaces " << mesh.face_count() << "\nquotient " << (mesh.is_quotient() ? 1 : 0) << "\nA "
            << fmt(surface_area(mesh)) << '\n';
  return kOk;
}

// ---------------------------------------------------------------- spectrum

struct SpectrumArgs {
  std::string mesh;
  int k = 8;
  double tol = 1e-9;
  std::uint64_t seed = 0;
  std::string method = "auto";
};

SolverMethod parse_method(const std::string& m) {
  if (m == "auto") return SolverMethod::Auto;
  if (m == "dense") return SolverMethod::Dense;
  if (m == "iterative") return SolverMethod::Iterative;
  throw UsageError("unknown solver method '" + m + "'");
}

int cmd_spectrum(const SpectrumArgs& args) {
  const EmbeddedMesh mesh = center_mesh(read_emesh_file(args.mesh));
  SolveOptions opts;
  opts.tol = args.tol;
  opts.seed = args.seed;
  opts.method = parse_method(args.method);
  const StiffnessMatrix L = cotan_stiffness(mesh);
  const MassMatrix M = lumped_mass(mesh);
  const SpectrumResult spec = solve_generalized(L, M, args.k, opts);
  const EigenCluster first = first_nonzero(spec);

  std::cout << "n " << mesh.vertex_count() << "\nA " << fmt(M.trace()) << "\nsolver " << to_string(spec.method)
            << " seed " << spec.seed << " tol " << fmt(spec.solve_tol) << " max_residual " << fmt(spec.max_residual())
            << "\neigenvalues";
  for (int i = 0; i < spec.k(); ++i) std::cout << ' ' << fmt(spec.eigenvalues[i]);
  std::cout << "\nclusters";
  const double width = default_cluster_tol(spec);
  for (int i = 0; i < spec.k();) {
    int j = i;
    while (j + 1 < spec.k() && spec.eigenvalues[j + 1] - spec.eigenvalues[i] <= width * std::abs(spec.eigenvalues[i]))
      ++j;
    std::cout << ' ' << fmt(spec.eigenvalues[i]) << 'x' << (j - i + 1);
    i = j + 1;
  }
  std::cout << "\nlambda1 " << fmt(first.value) << "\nmultiplicity " << first.multiplicity()
            << (first.truncated ? " (truncated: increase --k)" : "") << "\nlambda1A " << fmt(first.value * M.trace())
            << '\n';
  const TakahashiCheck tk = takahashi_radius_check(mesh, spec, 0.02);
  std::cout << "order1_residual " << fmt(tk.order_one_residual) << "\ntakahashi_radius " << fmt(tk.radius)
            << "\ntakahashi_deviation " << fmt(tk.max_deviation) << (tk.applicable ? "" : " (not applicable)")
            << '\n';
  return kOk;
}

// ---------------------------------------------------------------- willmore

int cmd_willmore(const std::string& path) {
  const EmbeddedMesh mesh = read_emesh_file(path);
  const MassMatrix M = lumped_mass(mesh);
  const MeanCurvatureField H = mean_curvature(mesh, cotan_stiffness(mesh), M);
  const auto mags = H.magnitudes();
  std::cout << "n " << mesh.vertex_count() << "\nA " << fmt(M.trace()) << "\nTMC " << fmt(total_mean_curvature(H, M))
            << "\nH_min " << fmt(mags.minCoeff()) << "\nH_max " << fmt(mags.maxCoeff()) << "\nminkowski_defect "
            << fmt(minkowski_defect(mesh)) << '\n';
  return kOk;
}

// ---------------------------------------------------------------- moebius

int cmd_moebius(const EmbeddedMesh& mesh, const std::string& out_path, bool normalize,
                const std::vector<ConformalPrimitive>& steps) {
  const ConformalMap map(steps);
  EmbeddedMesh image = apply_mesh(map, mesh);
  const double before = surface_area(mesh);
  double scale = 1.0;
  if (normalize) {
    auto normalized = area_normalize(mesh, image);
    image = std::move(normalized.mesh);
    scale = normalized.scale;
  }
  if (!out_path.empty()) write_emesh_file(out_path, image);
  std::cout << "map " << map.describe() << "\nA_before " << fmt(before) << "\nA_after " << fmt(surface_area(image))
            << "\nnormalization_scale " << fmt(scale) << '\n';
  return kOk;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string suite = "all";
  bool csv = false;
  std::string out;
  int jobs = 1;
  std::uint64_t seed = 0;
};

int cmd_verify(const VerifyArgs& args) {
  if (args.suite != "all" && !is_suite(args.suite)) throw UsageError("unknown suite '" + args.suite + "'");
  const std::vector<std::string> suites =
      args.suite == "all" ? suite_names() : std::vector<std::string>{args.suite};
  VerifyOptions opts;
  opts.solve.seed = args.seed;

  std::map<std::string, std::vector<ExperimentReport>> by_suite;
  if (args.jobs > 1) {
    std::vector<std::future<std::vector<ExperimentReport>>> pending;
    for (std::size_t start = 0; start < suites.size(); start += static_cast<std::size_t>(args.jobs)) {
      pending.clear();
      const std::size_t stop = std::min(suites.size(), start + static_cast<std::size_t>(args.jobs));
      for (std::size_t i = start; i < stop; ++i) {
        pending.push_back(std::async(std::launch::async, [&, i] { return run_suite(suites[i], opts); }));
      }
      for (std::size_t i = start; i < stop; ++i) by_suite[suites[i]] = pending[i - start].get();
    }
  } else {
    for (const auto& s : suites) by_suite[s] = run_suite(s, opts);
  }

  std::vector<ExperimentReport> reports;
  bool all_ok = true;
  for (const auto& [suite, rs] : by_suite) {
    for (const auto& r : rs) {
      if (r.verdict == Verdict::Fail) all_ok = false;
      write_text(std::cerr, r);
      reports.push_back(r);
    }
  }

  std::ostringstream body;
  if (args.csv) {
    write_csv(body, reports);
  } else {
    body << to_json(reports) << '\n';
  }
  if (args.out.empty()) {
    std::cout << body.str();
  } else {
    std::ofstream file(args.out);
    if (!file) throw UsageError("cannot write '" + args.out + "'");
    file << body.str();
  }
  return all_ok ? kOk : kVerifyFailed;
}

int exit_code_for(ErrorCode code, const std::string& command) {
  switch (code) {
    case ErrorCode::ConvergenceFailure:
    case ErrorCode::InsufficientSpectrum:
      return kSolver;
    case ErrorCode::InversionPole:
    case ErrorCode::InvalidConformalMap:
      return kTransform;
    case ErrorCode::ParseError:
    case ErrorCode::InvalidArgument:
      return command == "gen" ? kGeneration : kUsage;
    default:
      if (command == "gen") return kGeneration;
      if (command == "moebius") return kTransform;
      if (command == "spectrum") return kSolver;
      return kUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral geometry of conformally transformed surfaces"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a surface mesh");
  gen_cmd->add_option("surface", gen.surface, "sphere | clifford | anchor | veronese | cyclide")
      ->required()
      ->check(CLI::IsMember({"sphere", "clifford", "anchor", "veronese", "cyclide"}));
  gen_cmd->add_option("--res", gen.res, "grid resolution NxM (clifford, anchor, cyclide)");
  gen_cmd->add_option("--subdiv", gen.subdiv, "subdivision level (sphere, veronese)");
  gen_cmd->add_option("--r", gen.radius, "sphere radius");
  gen_cmd->add_option("--a", gen.a, "anchor ring tube radius");
  gen_cmd->add_option("--center", gen.center, "cyclide inversion center x,y,z");
  gen_cmd->add_option("--inv-scale", gen.inv_scale, "cyclide inversion scale");
  gen_cmd->add_option("-o,--out", gen.out, "output EMESH path");

  SpectrumArgs spectrum;
  auto* spec_cmd = app.add_subcommand("spectrum", "First eigenvalues of the cotangent Laplacian");
  spec_cmd->add_option("mesh", spectrum.mesh, "EMESH file")->required();
  spec_cmd->add_option("--k", spectrum.k, "number of eigenpairs (including the zero mode)");
  spec_cmd->add_option("--tol", spectrum.tol, "relative residual tolerance");
  spec_cmd->add_option("--seed", spectrum.seed, "seed of the iterative solver start block");
  spec_cmd->add_option("--method", spectrum.method, "auto | dense | iterative");

  std::string willmore_mesh;
  auto* will_cmd = app.add_subcommand("willmore", "Mean curvature, TMC and Minkowski defect");
  will_cmd->add_option("mesh", willmore_mesh, "EMESH file")->required();

  std::string moebius_in, moebius_out;
  std::vector<std::string> inversions, translations;
  std::vector<std::uint64_t> rotations;
  std::vector<double> scales;
  bool normalize = false;
  auto* moeb_cmd = app.add_subcommand("moebius", "Apply conformal maps of E^m in command-line order");
  moeb_cmd->add_option("mesh", moebius_in, "EMESH file")->required();
  auto* inv_opt = moeb_cmd->add_option("--inversion", inversions, "inversion cx,cy,...:scale")->take_all();
  auto* rot_opt = moeb_cmd->add_option("--rotate", rotations, "seeded random rotation")->take_all();
  auto* tr_opt = moeb_cmd->add_option("--translate", translations, "translation tx,ty,...")->take_all();
  auto* sc_opt = moeb_cmd->add_option("--scale", scales, "homothety factor")->take_all();
  moeb_cmd->add_flag("--normalize-area", normalize, "rescale the image to the input area");
  moeb_cmd->add_option("-o,--out", moebius_out, "output EMESH path");

  VerifyArgs verify;
  auto* ver_cmd = app.add_subcommand("verify", "Run the verification catalog");
  ver_cmd->add_option("suite", verify.suite, "suite name or 'all'");
  ver_cmd->add_flag("--csv", verify.csv, "emit a flat CSV table instead of JSON");
  ver_cmd->add_option("-o,--out", verify.out, "write the report here instead of stdout");
  ver_cmd->add_option("--jobs", verify.jobs, "suites to run concurrently")->check(CLI::PositiveNumber);
  ver_cmd->add_option("--seed", verify.seed, "seed for rotations, inversions and random test functions");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  std::string command;
  try {
    if (gen_cmd->parsed()) {
      command = "gen";
      return cmd_gen(gen);
    }
    if (spec_cmd->parsed()) {
      command = "spectrum";
      return cmd_spectrum(spectrum);
    }
    if (will_cmd->parsed()) {
      command = "willmore";
      return cmd_willmore(willmore_mesh);
    }
    if (moeb_cmd->parsed()) {
      command = "moebius";
      // Rebuild the step list in the order the flags appeared.
      std::map<const CLI::Option*, std::size_t> next;
      std::vector<ConformalPrimitive> steps;
      for (const CLI::Option* opt : moeb_cmd->parse_order()) {
        const std::size_t i = next[opt]++;
        if (opt == inv_opt) steps.emplace_back(parse_inversion(inversions.at(i)));
        else if (opt == rot_opt) steps.emplace_back(Rotation{});  // dimension filled below
        else if (opt == tr_opt) steps.emplace_back(Translation{to_vector(parse_doubles(translations.at(i)))});
        else if (opt == sc_opt) steps.emplace_back(Homothety{scales.at(i)});
      }
      EmbeddedMesh mesh = [&] {
        try {
          return read_emesh_file(moebius_in);
        } catch (const Error& e) {
          throw UsageError(e.what());
        }
      }();
      std::size_t rot_index = 0;
      for (auto& s : steps) {
        if (auto* r = std::get_if<Rotation>(&s)) {
          *r = Rotation{random_rotation_matrix(rotations.at(rot_index++), mesh.ambient_dim())};
        }
      }
      return cmd_moebius(mesh, moebius_out, normalize, steps);
    }
    if (ver_cmd->parsed()) {
      command = "verify";
      return cmd_verify(verify);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.code(), command);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

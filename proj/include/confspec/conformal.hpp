#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Core>

#include "confspec/mesh.hpp"

namespace confspec {

struct Translation {
  Eigen::VectorXd offset;
};

struct Rotation {
  Eigen::MatrixXd matrix;  // orthogonal, acts as x -> Q x
};

struct Homothety {
  double factor = 1.0;  // x -> c x about the origin
};

/// x -> c^2 (x - p) / |x - p|^2 + p
struct Inversion {
  Eigen::VectorXd center;
  double scale = 1.0;
};

using ConformalPrimitive = std::variant<Translation, Rotation, Homothety, Inversion>;

/// A Moebius transformation of E^m written as a flat sequence of generators,
/// applied first to last. No simplification is ever performed.
class ConformalMap {
 public:
  ConformalMap() = default;
  explicit ConformalMap(std::vector<ConformalPrimitive> steps);

  static ConformalMap identity() { return {}; }

  /// Appends a step; the result applies *this first, then `step`.
  ConformalMap then(ConformalPrimitive step) const;
  ConformalMap then(const ConformalMap& other) const;

  const std::vector<ConformalPrimitive>& steps() const noexcept { return steps_; }
  bool empty() const noexcept { return steps_.empty(); }

  /// Ambient dimension fixed by vector/matrix steps, or -1 when only
  /// homotheties are present.
  int dimension() const noexcept;

  bool is_rigid() const noexcept;

  std::string describe() const;

 private:
  std::vector<ConformalPrimitive> steps_;
};

Eigen::VectorXd apply_point(const ConformalMap& map, const Eigen::VectorXd& x);

/// Maps every vertex. Refuses meshes with a vertex within 1e-6 x diameter of
/// an inversion center (checked against the intermediate image at that step).
EmbeddedMesh apply_mesh(const ConformalMap& map, const EmbeddedMesh& mesh);

struct AreaNormalized {
  EmbeddedMesh mesh;
  double scale;
};

/// Rescales `target` so its area matches `reference`.
AreaNormalized area_normalize(const EmbeddedMesh& reference, const EmbeddedMesh& target);
/// Rescales `target` to the given area.
AreaNormalized area_normalize_to(double area, const EmbeddedMesh& target);

/// Seeded, reproducible rotation with det +1 (QR of a Gaussian matrix).
ConformalMap random_rotation(std::uint64_t seed, int m);
Eigen::MatrixXd random_rotation_matrix(std::uint64_t seed, int m);

}  // namespace confspec

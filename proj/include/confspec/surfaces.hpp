#pragma once

#include "confspec/mesh.hpp"

namespace confspec {

/// Samples per periodic parameter of a grid surface.
struct GridResolution {
  int n_u = 0;
  int n_v = 0;

  static GridResolution square(int n) { return {n, n}; }
};

/// Flat torus S^1(1) x S^1(1) in E^4 sampled on a uniform periodic grid.
EmbeddedMesh gen_clifford(GridResolution res);

/// Torus of revolution with tube radius a and center-circle radius sqrt(2) a:
/// ((sqrt2 + cos u) a cos v, (sqrt2 + cos u) a sin v, a sin u).
EmbeddedMesh gen_anchor_ring(double a, GridResolution res);

/// Icosahedron refined `subdiv` times by edge midpoints, projected to radius r.
EmbeddedMesh gen_sphere(double r, int subdiv);

/// Quadratic Veronese map E^3 -> E^5 on the sphere of radius sqrt(3); even in p.
Eigen::VectorXd veronese_map(const Eigen::Vector3d& p);

/// Real projective plane in S^4(1/sqrt3): antipodal quotient of the radius
/// sqrt(3) icosphere pushed through veronese_map.
EmbeddedMesh gen_veronese(int subdiv);

/// Cyclide of Dupin: the anchor ring inverted in the sphere about `center`
/// with radius `inv_scale`.
EmbeddedMesh gen_cyclide(double a, const Eigen::Vector3d& center, double inv_scale, GridResolution res);

}  // namespace confspec

#pragma once

// Small hand-built meshes and seeded generators shared by the unit tests.

#include <cmath>
#include <random>
#include <vector>

#include <Eigen/Core>

#include "confspec/mesh.hpp"

namespace fixtures {

using confspec::Face;
using confspec::VertexArray;

inline VertexArray rows(std::initializer_list<std::initializer_list<double>> pts) {
  VertexArray v(static_cast<Eigen::Index>(pts.size()), static_cast<Eigen::Index>(pts.begin()->size()));
  int i = 0;
  for (const auto& p : pts) {
    int j = 0;
    for (double x : p) v(i, j++) = x;
    ++i;
  }
  return v;
}

inline confspec::EmbeddedMesh octahedron(double r = 1.0) {
  auto v = rows({{r, 0, 0}, {-r, 0, 0}, {0, r, 0}, {0, -r, 0}, {0, 0, r}, {0, 0, -r}});
  std::vector<Face> f{{0, 2, 4}, {2, 1, 4}, {1, 3, 4}, {3, 0, 4}, {2, 0, 5}, {1, 2, 5}, {3, 1, 5}, {0, 3, 5}};
  return confspec::validate_mesh(std::move(v), std::move(f));
}

// Flat periodic grid with unit spacing in angle, embedded as the flat torus
// (cos u, sin u, cos v, sin v). The stiffness is the 5-point stencil.
inline std::vector<Face> grid_faces(int n) {
  std::vector<Face> f;
  auto id = [n](int i, int j) { return ((i + n) % n) * n + (j + n) % n; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      f.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
      f.push_back({id(i, j), id(i + 1, j + 1), id(i, j + 1)});
    }
  return f;
}

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  double normal() { return std::normal_distribution<double>()(gen); }
  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(gen); }
  Eigen::VectorXd normal_vec(int n) {
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v[i] = normal();
    return v;
  }
};

inline double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace fixtures

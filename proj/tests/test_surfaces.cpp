#include <doctest.h>

#include <cmath>
#include <numbers>

#include "confspec/conformal.hpp"
#include "confspec/surfaces.hpp"
#include "fixtures.hpp"

using namespace confspec;
using std::numbers::pi;
using fixtures::rel;

namespace {

void check_closed(const EmbeddedMesh& m) {
  for (const auto& e : edge_incidence(m.faces())) REQUIRE(e.faces.size() == 2);
}

}  // namespace

TEST_CASE("clifford 3x3") {
  auto m = gen_clifford({3, 3});
  CHECK(m.vertex_count() == 9);
  CHECK(m.face_count() == 18);
  CHECK(m.ambient_dim() == 4);
  check_closed(m);
  for (int i = 0; i < 9; ++i) {
    auto x = m.vertex(i);
    CHECK(std::abs(x.head<2>().norm() - 1) < 1e-15);
    CHECK(std::abs(x.tail<2>().norm() - 1) < 1e-15);
  }
}

TEST_CASE("clifford area") {
  CHECK(rel(surface_area(gen_clifford(GridResolution::square(96))), 4 * pi * pi) < 0.01);
}

TEST_CASE("anchor ring") {
  auto m = gen_anchor_ring(1.0, GridResolution::square(8));
  CHECK((m.vertex(0) - Eigen::Vector3d(std::sqrt(2.0) + 1, 0, 0)).norm() < 1e-15);
  check_closed(m);
  CHECK(rel(surface_area(gen_anchor_ring(1.0, GridResolution::square(128))), 4 * pi * pi * std::sqrt(2.0)) < 0.005);
  CHECK(rel(surface_area(gen_anchor_ring(std::pow(2.0, -0.25), GridResolution::square(128))), 4 * pi * pi) < 0.005);
}

TEST_CASE("sphere") {
  auto ico = gen_sphere(1.0, 0);
  CHECK(ico.vertex_count() == 12);
  CHECK(ico.face_count() == 20);
  CHECK(gen_sphere(1.0, 2).vertex_count() == 162);
  auto m = gen_sphere(2.5, 3);
  check_closed(m);
  for (int i = 0; i < m.vertex_count(); ++i) CHECK(std::abs(m.vertex(i).norm() - 2.5) < 2.5e-15);
  CHECK(rel(surface_area(gen_sphere(1.0, 5)), 4 * pi) < 0.005);
}

TEST_CASE("sphere vertex set is antipodally symmetric") {
  auto m = gen_sphere(1.0, 3);
  for (int i = 0; i < m.vertex_count(); ++i) {
    bool found = false;
    for (int j = 0; j < m.vertex_count() && !found; ++j) found = (m.vertex(i) + m.vertex(j)).norm() < 1e-14;
    CHECK(found);
  }
}

TEST_CASE("veronese map values") {
  auto x = veronese_map(Eigen::Vector3d(0, 0, std::sqrt(3.0)));
  Eigen::VectorXd want(5);
  want << 0, 0, 0, 0, -1 / std::sqrt(3.0);
  CHECK((x - want).norm() < 1e-15);

  const double s = std::sqrt(1.5);
  auto y = veronese_map(Eigen::Vector3d(s, s, 0));
  CHECK(y[2] == doctest::Approx(0.5));
  CHECK(y.norm() == doctest::Approx(1 / std::sqrt(3.0)).epsilon(1e-14));

  CHECK_THROWS_AS(veronese_map(Eigen::Vector3d(1, 0, 0)), Error);
}

TEST_CASE("property: veronese map is even and lands on S^4(1/sqrt3)") {
  fixtures::Rng rng(11);
  for (int t = 0; t < 1000; ++t) {
    Eigen::Vector3d p(rng.normal(), rng.normal(), rng.normal());
    p *= std::sqrt(3.0) / p.norm();
    auto a = veronese_map(p), b = veronese_map(-p);
    REQUIRE((a - b).norm() == 0.0);
    REQUIRE(std::abs(a.norm() - 1 / std::sqrt(3.0)) < 1e-14);
  }
}

TEST_CASE("veronese surface") {
  auto m = gen_veronese(1);
  CHECK(m.vertex_count() == 21);
  CHECK(m.face_count() == 40);
  CHECK(m.is_quotient());
  auto big = gen_veronese(5);
  for (int i = 0; i < big.vertex_count(); ++i) REQUIRE(std::abs(big.vertex(i).norm() - 1 / std::sqrt(3.0)) < 1e-12);
  CHECK(rel(surface_area(big), 2 * pi) < 0.01);
}

TEST_CASE("cyclide") {
  const GridResolution res = GridResolution::square(32);
  auto ring = gen_anchor_ring(1.0, res);
  // a far-away inversion with scale ~ distance is close to a reflection
  auto far = gen_cyclide(1.0, Eigen::Vector3d(100, 0, 0), 100.0, res);
  CHECK(rel(surface_area(far), surface_area(ring)) < 0.25);

  auto cyc = gen_cyclide(1.0, Eigen::Vector3d(5, 0, 0), 1.0, res);
  check_closed(cyc);
  auto back = apply_mesh(ConformalMap({Inversion{Eigen::Vector3d(5, 0, 0), 1.0}}), cyc);
  CHECK((back.vertices() - ring.vertices()).cwiseAbs().maxCoeff() < 1e-10 * diameter(ring));

  try {
    gen_cyclide(1.0, Eigen::Vector3d(std::sqrt(2.0) + 1, 0, 0), 1.0, res);
    FAIL("expected CenterOnSurface");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CenterOnSurface);
  }
}

TEST_CASE("property: generators are centered") {
  std::vector<EmbeddedMesh> meshes{gen_clifford(GridResolution::square(24)), gen_anchor_ring(0.7, {20, 28}),
                                   gen_sphere(3.0, 3), gen_veronese(3)};
  for (const auto& m : meshes) CHECK(center_of_gravity(m).norm() <= 1e-10 * diameter(m));
}

TEST_CASE("property: area error shrinks under refinement") {
  auto err = [](const EmbeddedMesh& m, double exact) { return std::abs(surface_area(m) - exact); };
  const double sq2 = std::sqrt(2.0);
  for (int s : {2, 3, 4}) CHECK(err(gen_sphere(1, s), 4 * pi) >= 3 * err(gen_sphere(1, s + 1), 4 * pi));
  for (int n : {24, 48}) {
    CHECK(err(gen_clifford(GridResolution::square(n)), 4 * pi * pi) >=
          3 * err(gen_clifford(GridResolution::square(2 * n)), 4 * pi * pi));
    CHECK(err(gen_anchor_ring(1, GridResolution::square(n)), 4 * pi * pi * sq2) >=
          3 * err(gen_anchor_ring(1, GridResolution::square(2 * n)), 4 * pi * pi * sq2));
  }
  for (int s : {2, 3, 4}) CHECK(err(gen_veronese(s), 2 * pi) >= 3 * err(gen_veronese(s + 1), 2 * pi));
}

TEST_CASE("grid resolution limits") {
  CHECK_THROWS_AS(gen_clifford({2, 5}), Error);
  CHECK_THROWS_AS(gen_sphere(-1.0, 1), Error);
  CHECK_THROWS_AS(gen_anchor_ring(0.0, {8, 8}), Error);
}

#include <doctest.h>

#include <cmath>
#include <map>
#include <numbers>

#include "confspec/mesh.hpp"
#include "confspec/surfaces.hpp"
#include "fixtures.hpp"

using namespace confspec;
using fixtures::rows;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidArgument;
}

// Counts faces containing both endpoints of every face edge by brute force.
std::map<std::pair<int, int>, int> brute_edge_counts(const std::vector<Face>& faces) {
  std::map<std::pair<int, int>, int> out;
  for (const auto& f : faces)
    for (int k = 0; k < 3; ++k) {
      int a = std::min(f[k], f[(k + 1) % 3]), b = std::max(f[k], f[(k + 1) % 3]);
      if (out.count({a, b})) continue;
      int n = 0;
      for (const auto& g : faces) {
        bool ha = g[0] == a || g[1] == a || g[2] == a;
        bool hb = g[0] == b || g[1] == b || g[2] == b;
        n += ha && hb;
      }
      out[{a, b}] = n;
    }
  return out;
}

EmbeddedMesh unit_square() {
  return validate_mesh(rows({{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}}), {{0, 1, 2}, {0, 2, 3}}, false,
                       {.require_closed = false});
}

}  // namespace

TEST_CASE("octahedron validates") {
  auto m = fixtures::octahedron();
  CHECK(m.vertex_count() == 6);
  CHECK(m.face_count() == 8);
  CHECK(m.ambient_dim() == 3);
  CHECK(m.warnings().empty());
  CHECK(surface_area(m) == doctest::Approx(8 * std::sqrt(3.0) / 2).epsilon(1e-14));
}

TEST_CASE("pillow is accepted with a warning") {
  auto m = validate_mesh(rows({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}), {{0, 1, 2}, {0, 2, 1}});
  CHECK(m.face_count() == 2);
  CHECK_FALSE(m.warnings().empty());
}

TEST_CASE("validation errors") {
  auto tri = rows({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}});
  CHECK(code_of([&] { validate_mesh(tri, {{0, 1, 2}}); }) == ErrorCode::NonManifoldEdge);
  CHECK(code_of([&] { validate_mesh(tri, {{0, 1, 3}, {0, 3, 1}}); }) == ErrorCode::IndexOutOfRange);
  CHECK(code_of([&] { validate_mesh(tri, {{0, -1, 2}, {0, 2, -1}}); }) == ErrorCode::IndexOutOfRange);
  CHECK(code_of([&] { validate_mesh(tri, {{0, 0, 2}, {0, 2, 0}}); }) == ErrorCode::DegenerateFace);

  auto collinear = rows({{0, 0, 0}, {1, 0, 0}, {2, 0, 0}});
  CHECK(code_of([&] { validate_mesh(collinear, {{0, 1, 2}, {0, 2, 1}}); }) == ErrorCode::DegenerateFace);

  // three faces on one edge
  auto fan = rows({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, -1, 0}});
  CHECK(code_of([&] { validate_mesh(fan, {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}}); }) == ErrorCode::NonManifoldEdge);

  auto flat = rows({{0, 0}, {1, 0}, {0, 1}});
  CHECK(code_of([&] { validate_mesh(flat, {{0, 1, 2}, {0, 2, 1}}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("two disjoint octahedra are disconnected") {
  auto a = fixtures::octahedron();
  VertexArray v(12, 3);
  v.topRows(6) = a.vertices();
  v.bottomRows(6) = a.vertices().rowwise() + Eigen::RowVector3d(5, 0, 0);
  auto f = a.faces();
  for (auto g : a.faces()) f.push_back({g[0] + 6, g[1] + 6, g[2] + 6});
  CHECK(code_of([&] { validate_mesh(v, f); }) == ErrorCode::DisconnectedMesh);
  ValidationOptions loose{.require_closed = true, .require_connected = false};
  CHECK(validate_mesh(v, f, false, loose).face_count() == 16);
}

TEST_CASE("unit square patch has area 1") {
  CHECK(surface_area(unit_square()) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("vertex measure sums to the area") {
  auto m = gen_sphere(1.0, 3);
  auto vm = vertex_measure(m);
  CHECK(vm.total == doctest::Approx(surface_area(m)).epsilon(1e-13));
  CHECK(vm.area.sum() == doctest::Approx(vm.total).epsilon(1e-13));
  CHECK(vm.area.minCoeff() > 0);
}

TEST_CASE("center of gravity") {
  auto oct = fixtures::octahedron();
  CHECK(center_of_gravity(oct).norm() < 1e-15);
  Eigen::Vector3d t(1.5, -2, 0.25);
  auto moved = translate_mesh(oct, t);
  CHECK((center_of_gravity(moved) - t).norm() < 1e-14);

  auto back = center_mesh(moved);
  CHECK(center_of_gravity(back).norm() < 1e-14);

  // already centered: returned unchanged, bit for bit
  auto same = center_mesh(oct);
  CHECK(same.vertices() == oct.vertices());
}

TEST_CASE("diameter is the bounding box diagonal") {
  CHECK(diameter(fixtures::octahedron()) == doctest::Approx(2 * std::sqrt(3.0)));
  CHECK(diameter(unit_square()) == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("scale_mesh") {
  auto sq = unit_square();
  CHECK(surface_area(scale_mesh(sq, 2.0)) == doctest::Approx(4.0).epsilon(1e-15));
  auto one = scale_mesh(sq, 1.0);
  CHECK(one.vertices() == sq.vertices());
  CHECK(code_of([&] { scale_mesh(sq, 0.0); }) == ErrorCode::NonpositiveScale);
  CHECK(code_of([&] { scale_mesh(sq, -1.0); }) == ErrorCode::NonpositiveScale);
}

TEST_CASE("property: area scales by c^2") {
  std::vector<EmbeddedMesh> meshes{gen_sphere(1.0, 2), gen_clifford(GridResolution::square(12)),
                                   gen_anchor_ring(1.0, GridResolution::square(16)), gen_veronese(2)};
  for (const auto& m : meshes) {
    const double a = surface_area(m);
    for (double c : {0.1, 0.5, 1.0, 2.0, 3.0, 17.0}) {
      CHECK(fixtures::rel(surface_area(scale_mesh(m, c)), c * c * a) < 1e-13);
    }
  }
}

TEST_CASE("antipodal quotient of the icosahedron") {
  auto q = quotient_antipodal(gen_sphere(1.0, 0));
  CHECK(q.vertex_count() == 6);
  CHECK(q.face_count() == 10);
  CHECK(q.is_quotient());
}

TEST_CASE("antipodal quotient of a subdivided sphere, brute-force edge audit") {
  auto cover = gen_sphere(1.0, 3);
  auto q = quotient_antipodal(cover);
  CHECK(q.vertex_count() == cover.vertex_count() / 2);
  CHECK(q.face_count() == cover.face_count() / 2);
  auto counts = brute_edge_counts(q.faces());
  CHECK(counts.size() == brute_edge_counts(cover.faces()).size() / 2);
  for (const auto& [e, n] : counts) CHECK(n == 2);
  // Euler characteristic of RP^2
  CHECK(q.vertex_count() - static_cast<int>(counts.size()) + q.face_count() == 1);
}

TEST_CASE("hemi-octahedron") {
  auto q = quotient_antipodal(fixtures::octahedron());
  CHECK(q.vertex_count() == 3);
  CHECK(q.face_count() == 4);
  // every vertex pair carries two edge classes, two faces each
  for (const auto& [e, n] : brute_edge_counts(q.faces())) CHECK(n == 4);
}

TEST_CASE("quotient halves the area of an even image") {
  // Pushing the cover through the even map covers the quotient image twice.
  auto cover = gen_sphere(std::sqrt(3.0), 3);
  VertexArray img(cover.vertex_count(), 5);
  for (int i = 0; i < cover.vertex_count(); ++i) img.row(i) = veronese_map(cover.vertex(i)).transpose();
  auto doubled = validate_mesh(img, cover.faces(), false, {.require_closed = false, .require_connected = true});
  auto q = gen_veronese(3);
  CHECK(fixtures::rel(surface_area(q), 0.5 * surface_area(doubled)) < 1e-12);
}

TEST_CASE("quotient errors") {
  auto shifted = translate_mesh(fixtures::octahedron(), Eigen::Vector3d(0.1, 0, 0));
  CHECK(code_of([&] { quotient_antipodal(shifted); }) == ErrorCode::NoAntipodalPairing);
  auto torus = gen_anchor_ring(1.0, {9, 9});
  CHECK(code_of([&] { quotient_antipodal(torus); }) == ErrorCode::NoAntipodalPairing);
}

TEST_CASE("with_vertices rejects collapsed faces") {
  auto oct = fixtures::octahedron();
  VertexArray v = oct.vertices();
  v.row(4) = v.row(0);  // apex collapses onto a base vertex
  CHECK(code_of([&] { (void)oct.with_vertices(v); }) == ErrorCode::DegenerateFace);
}

TEST_CASE("edge_incidence on the octahedron") {
  auto inc = edge_incidence(fixtures::octahedron().faces());
  CHECK(inc.size() == 12);
  for (const auto& e : inc) CHECK(e.faces.size() == 2);
}

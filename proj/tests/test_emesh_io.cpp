#include <doctest.h>

#include <sstream>

#include "confspec/emesh_io.hpp"
#include "confspec/surfaces.hpp"
#include "fixtures.hpp"

using namespace confspec;

namespace {

EmbeddedMesh round_trip(const EmbeddedMesh& m) {
  std::stringstream ss;
  write_emesh(ss, m);
  return read_emesh(ss);
}

ErrorCode parse_code(const std::string& text) {
  std::istringstream in(text);
  try {
    read_emesh(in);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown for: " << text);
  return ErrorCode::InvalidArgument;
}

const char* kOctahedron =
    "EMESH 3 6 8 0\n"
    "1 0 0\n-1 0 0\n0 1 0\n0 -1 0\n0 0 1\n0 0 -1\n"
    "0 2 4\n2 1 4\n1 3 4\n3 0 4\n2 0 5\n1 2 5\n3 1 5\n0 3 5\n";

}  // namespace

TEST_CASE("header and layout") {
  std::ostringstream out;
  write_emesh(out, fixtures::octahedron());
  CHECK(out.str() == kOctahedron);
}

TEST_CASE("comments and blank lines are skipped") {
  std::istringstream in("# octahedron\n\nEMESH 3 6 8 0\n# coordinates\n1 0 0\n-1 0 0 # x\n0 1 0\n0 -1 0\n"
                        "0 0 1\n\n0 0 -1\n0 2 4\n2 1 4\n1 3 4\n3 0 4\n2 0 5\n1 2 5\n3 1 5\n0 3 5\n");
  auto m = read_emesh(in);
  CHECK(m.vertex_count() == 6);
  CHECK(m.vertices() == fixtures::octahedron().vertices());
}

TEST_CASE("property: round trip is bit-exact") {
  fixtures::Rng rng(7);
  std::vector<EmbeddedMesh> meshes{gen_sphere(1.0, 2), gen_clifford(GridResolution::square(7)), gen_veronese(1),
                                   gen_anchor_ring(0.3, {5, 11})};
  for (const auto& m : meshes) {
    for (int trial = 0; trial < 5; ++trial) {
      VertexArray v = m.vertices();
      for (Eigen::Index i = 0; i < v.size(); ++i) v.data()[i] += 1e-3 * rng.normal() * std::exp(rng.normal());
      auto jittered = m.with_vertices(v);
      auto back = round_trip(jittered);
      CHECK(back.vertices() == jittered.vertices());
      CHECK(back.faces() == jittered.faces());
      CHECK(back.is_quotient() == jittered.is_quotient());
    }
  }
}

TEST_CASE("quotient flag survives") {
  auto q = round_trip(gen_veronese(2));
  CHECK(q.is_quotient());
  CHECK(q.ambient_dim() == 5);
}

TEST_CASE("malformed input") {
  CHECK(parse_code("") == ErrorCode::ParseError);
  CHECK(parse_code("MESH 3 6 8 0\n") == ErrorCode::ParseError);
  CHECK(parse_code("EMESH 2 3 2 0\n0 0\n1 0\n0 1\n0 1 2\n0 2 1\n") == ErrorCode::ParseError);
  CHECK(parse_code("EMESH 3 3 2 0\n0 0 0\n1 0 x\n0 1 0\n0 1 2\n0 2 1\n") == ErrorCode::ParseError);
  CHECK(parse_code("EMESH 3 3 2 0\n0 0 0\n1 0 0\n0 1 0\n0 1 2\n") == ErrorCode::ParseError);
  CHECK(parse_code("EMESH 3 3 2 0\n0 0 0\n1 0 0\n0 1 0\n0 1 2\n0 2 1\n7\n") == ErrorCode::ParseError);
  CHECK(parse_code("EMESH 3 3 2 2\n0 0 0\n1 0 0\n0 1 0\n0 1 2\n0 2 1\n") == ErrorCode::ParseError);
}

TEST_CASE("parsed meshes are validated") {
  CHECK(parse_code("EMESH 3 3 1 0\n0 0 0\n1 0 0\n0 1 0\n0 1 2\n") == ErrorCode::NonManifoldEdge);
  CHECK(parse_code("EMESH 3 3 2 0\n0 0 0\n1 0 0\n0 1 0\n0 1 5\n0 5 1\n") == ErrorCode::IndexOutOfRange);
}

TEST_CASE("missing file") {
  CHECK_THROWS_AS(read_emesh_file("/nonexistent/x.emesh"), Error);
}

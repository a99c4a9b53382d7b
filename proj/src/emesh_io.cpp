#include "confspec/emesh_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace confspec {

namespace {

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

/// Yields whitespace-separated tokens, skipping blank lines and comments.
class TokenReader {
 public:
  explicit TokenReader(std::istream& in) : in_(in) {}

  bool next(std::string& token) {
    while (!(line_ >> token)) {
      std::string raw;
      if (!std::getline(in_, raw)) return false;
      ++line_number_;
      if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
      line_.clear();
      line_.str(raw);
    }
    return true;
  }

  std::string expect(const char* what) {
    std::string token;
    if (!next(token)) fail(std::string("unexpected end of input while reading ") + what);
    return token;
  }

  template <typename T>
  T number(const char* what) {
    const std::string token = expect(what);
    T value{};
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) fail("bad " + std::string(what) + " '" + token + "'");
    return value;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line_number_) + ": " + message);
  }

 private:
  std::istream& in_;
  std::istringstream line_;
  int line_number_ = 0;
};

}  // namespace

void write_emesh(std::ostream& out, const EmbeddedMesh& mesh) {
  out << "EMESH " << mesh.ambient_dim() << ' ' << mesh.vertex_count() << ' ' << mesh.face_count() << ' '
      << (mesh.is_quotient() ? 1 : 0) << '\n';
  const auto& V = mesh.vertices();
  for (int i = 0; i < mesh.vertex_count(); ++i) {
    for (int k = 0; k < mesh.ambient_dim(); ++k) {
      if (k) out << ' ';
      out << format_double(V(i, k));
    }
    out << '\n';
  }
  for (const auto& [a, b, c] : mesh.faces()) out << a << ' ' << b << ' ' << c << '\n';
}

void write_emesh_file(const std::string& path, const EmbeddedMesh& mesh) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot open '" + path + "' for writing");
  write_emesh(out, mesh);
  if (!out) throw Error(ErrorCode::InvalidArgument, "failed writing '" + path + "'");
}

EmbeddedMesh read_emesh(std::istream& in) {
  TokenReader reader(in);
  if (reader.expect("header") != "EMESH") reader.fail("missing EMESH magic");
  const int m = reader.number<int>("ambient dimension");
  const int nv = reader.number<int>("vertex count");
  const int nf = reader.number<int>("face count");
  const int quotient = reader.number<int>("quotient flag");
  if (m < 3) reader.fail("ambient dimension must be at least 3, got " + std::to_string(m));
  if (nv <= 0 || nf <= 0) reader.fail("vertex and face counts must be positive");
  if (quotient != 0 && quotient != 1) reader.fail("quotient flag must be 0 or 1");

  VertexArray vertices(nv, m);
  for (int i = 0; i < nv; ++i) {
    for (int k = 0; k < m; ++k) vertices(i, k) = reader.number<double>("coordinate");
  }
  std::vector<Face> faces(static_cast<std::size_t>(nf));
  for (auto& f : faces) {
    for (int& idx : f) idx = reader.number<int>("face index");
  }
  std::string extra;
  if (reader.next(extra)) reader.fail("trailing data '" + extra + "'");
  return validate_mesh(std::move(vertices), std::move(faces), quotient == 1);
}

EmbeddedMesh read_emesh_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  return read_emesh(in);
}

}  // namespace confspec

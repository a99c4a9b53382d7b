#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace confspec {

enum class Verdict { Pass, Fail, NotApplicable };
enum class Relation { LessEqual, GreaterEqual };

std::string_view to_string(Verdict verdict) noexcept;

/// One asserted inequality `quantities[quantity] <relation> bound`.
struct Check {
  std::string name;
  std::string quantity;
  Relation relation = Relation::LessEqual;
  double bound = 0.0;
};

struct MeshInfo {
  std::string generator;
  std::string parameters;
  int resolution = 0;  // grid samples per direction or subdivision level
  int vertices = 0;
  int faces = 0;
  int ambient_dim = 0;
};

/// A quantity tracked over increasing resolutions.
struct RefinementSeries {
  std::string quantity;
  std::vector<int> resolutions;
  std::vector<double> values;

  /// values[i-1] / values[i]; > 1 means the quantity shrank.
  std::vector<double> ratios() const;
  bool is_valid() const;  // resolutions strictly increasing, sizes agree
};

/// Structured record of one experiment. The verdict is a pure function of
/// `checks`, `quantities` and `applicable`, see recompute_verdict.
struct ExperimentReport {
  std::string id;
  MeshInfo mesh;
  std::map<std::string, double> quantities;
  std::vector<Check> checks;
  std::map<std::string, double> tolerances;
  std::vector<RefinementSeries> series;
  bool applicable = true;
  std::string note;
  Verdict verdict = Verdict::Fail;

  std::optional<double> quantity(const std::string& key) const;
  void set(const std::string& key, double value) { quantities[key] = value; }
  void require(std::string name, std::string quantity, Relation relation, double bound);

  /// Signed slack of every check: positive when the inequality holds.
  std::map<std::string, double> margins() const;
  /// Smallest signed slack over all checks (empty when there are none).
  std::optional<double> min_margin() const;
  /// Recomputes `verdict` from the stored data and returns it.
  Verdict finalize();
};

double check_margin(const Check& check, double value);
Verdict recompute_verdict(const ExperimentReport& report);

std::string to_json(const std::vector<ExperimentReport>& reports);
void write_csv(std::ostream& out, const std::vector<ExperimentReport>& reports);
void write_text(std::ostream& out, const ExperimentReport& report);

}  // namespace confspec

#include "confspec/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include <json.hpp>

namespace confspec {

std::string_view to_string(Verdict verdict) noexcept {
  switch (verdict) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::NotApplicable: return "not-applicable";
  }
  return "unknown";
}

std::vector<double> RefinementSeries::ratios() const {
  std::vector<double> out;
  for (std::size_t i = 1; i < values.size(); ++i) out.push_back(values[i - 1] / values[i]);
  return out;
}

bool RefinementSeries::is_valid() const {
  if (resolutions.size() != values.size()) return false;
  for (std::size_t i = 1; i < resolutions.size(); ++i) {
    if (resolutions[i] <= resolutions[i - 1]) return false;
  }
  return true;
}

std::optional<double> ExperimentReport::quantity(const std::string& key) const {
  if (auto it = quantities.find(key); it != quantities.end()) return it->second;
  return std::nullopt;
}

void ExperimentReport::require(std::string name, std::string quantity_key, Relation relation, double bound) {
  checks.push_back({std::move(name), std::move(quantity_key), relation, bound});
}

double check_margin(const Check& check, double value) {
  return check.relation == Relation::LessEqual ? check.bound - value : value - check.bound;
}

std::map<std::string, double> ExperimentReport::margins() const {
  std::map<std::string, double> out;
  for (const auto& c : checks) {
    const auto v = quantity(c.quantity);
    out[c.name] = v ? check_margin(c, *v) : -INFINITY;
  }
  return out;
}

std::optional<double> ExperimentReport::min_margin() const {
  std::optional<double> worst;
  for (const auto& [name, m] : margins()) {
    if (!worst || m < *worst) worst = m;
  }
  return worst;
}

Verdict recompute_verdict(const ExperimentReport& report) {
  if (!report.applicable) return Verdict::NotApplicable;
  for (const auto& c : report.checks) {
    const auto v = report.quantity(c.quantity);
    if (!v || std::isnan(*v) || !(check_margin(c, *v) >= 0.0)) return Verdict::Fail;
  }
  return Verdict::Pass;
}

Verdict ExperimentReport::finalize() {
  verdict = recompute_verdict(*this);
  return verdict;
}

namespace {

nlohmann::ordered_json number(double x) {
  if (std::isfinite(x)) return x;
  return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
}

nlohmann::ordered_json report_json(const ExperimentReport& r) {
  nlohmann::ordered_json j;
  j["id"] = r.id;
  j["mesh"] = {{"generator", r.mesh.generator},     {"parameters", r.mesh.parameters},
               {"resolution", r.mesh.resolution},   {"vertices", r.mesh.vertices},
               {"faces", r.mesh.faces},             {"ambient_dim", r.mesh.ambient_dim}};
  auto& q = j["quantities"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.quantities) q[k] = number(v);
  auto& checks = j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name},
                      {"quantity", c.quantity},
                      {"relation", c.relation == Relation::LessEqual ? "<=" : ">="},
                      {"bound", number(c.bound)}});
  }
  auto& m = j["margins"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.margins()) m[k] = number(v);
  auto& t = j["tolerances"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.tolerances) t[k] = number(v);
  auto& s = j["series"] = nlohmann::ordered_json::array();
  for (const auto& series : r.series) {
    nlohmann::ordered_json entry{{"quantity", series.quantity}, {"resolutions", series.resolutions}};
    auto& vals = entry["values"] = nlohmann::ordered_json::array();
    for (double v : series.values) vals.push_back(number(v));
    auto& ratios = entry["ratios"] = nlohmann::ordered_json::array();
    for (double v : series.ratios()) ratios.push_back(number(v));
    s.push_back(std::move(entry));
  }
  j["applicable"] = r.applicable;
  if (!r.note.empty()) j["note"] = r.note;
  j["verdict"] = std::string(to_string(r.verdict));
  return j;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

}  // namespace

std::string to_json(const std::vector<ExperimentReport>& reports) {
  nlohmann::ordered_json root;
  root["reports"] = nlohmann::ordered_json::array();
  for (const auto& r : reports) root["reports"].push_back(report_json(r));
  return root.dump(2);
}

void write_csv(std::ostream& out, const std::vector<ExperimentReport>& reports) {
  out << "experiment,mesh,n,A,lambda1,mult,TMC,lambda1A,margin,verdict\n";
  auto cell = [](const ExperimentReport& r, const char* key) {
    const auto v = r.quantity(key);
    return v ? fmt(*v) : std::string();
  };
  for (const auto& r : reports) {
    const auto margin = r.min_margin();
    out << r.id << ',' << r.mesh.generator << ',' << r.mesh.vertices << ',' << cell(r, "A") << ','
        << cell(r, "lambda1") << ',' << cell(r, "multiplicity") << ',' << cell(r, "TMC") << ','
        << cell(r, "lambda1A") << ',' << (margin ? fmt(*margin) : std::string()) << ',' << to_string(r.verdict)
        << '\n';
  }
}

void write_text(std::ostream& out, const ExperimentReport& r) {
  out << "[" << to_string(r.verdict) << "] " << r.id << "  (" << r.mesh.generator;
  if (!r.mesh.parameters.empty()) out << " " << r.mesh.parameters;
  out << ", n=" << r.mesh.vertices << ")\n";
  if (!r.note.empty()) out << "    note: " << r.note << '\n';
  const auto margins = r.margins();
  for (const auto& c : r.checks) {
    const auto v = r.quantity(c.quantity);
    out << "    " << c.name << ": " << c.quantity << " = " << (v ? fmt(*v) : "missing")
        << (c.relation == Relation::LessEqual ? " <= " : " >= ") << fmt(c.bound) << "  margin "
        << fmt(margins.at(c.name)) << '\n';
  }
}

}  // namespace confspec

#include "imx/report.hpp"

#include <cstdio>
#include <sstream>

#include "imx/error.hpp"

namespace imx {

namespace {

template <class E>
E enum_from(const std::string& s, E last) {
  for (int k = 0; k <= static_cast<int>(last); ++k)
    if (to_string(static_cast<E>(k)) == s) return static_cast<E>(k);
  throw Error(ErrorCode::ParseError, "unknown tag \"" + s + "\"");
}

Json optional_matrix(const std::optional<Matrix>& m) { return m ? to_json(*m) : Json(nullptr); }

std::optional<Matrix> optional_matrix_from(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return matrix_from_json(j);
}

Json matrix_list(const std::vector<Matrix>& ms) {
  Json out = Json::array();
  for (const Matrix& m : ms) out.push_back(to_json(m));
  return out;
}

std::vector<Matrix> matrix_list_from(const Json& j) {
  std::vector<Matrix> out;
  for (const Json& m : j) out.push_back(matrix_from_json(m));
  return out;
}

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

std::string matrix_text(const Matrix& m, const std::string& indent) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += indent + "[";
    for (std::size_t j = 0; j < m.cols(); ++j) out += (j ? ", " : "") + num(m(i, j));
    out += "]\n";
  }
  return out;
}

}  // namespace

Json to_json(const Interval& x) { return Json::array({x.lo(), x.hi()}); }

Json to_json(std::span<const Interval> v) {
  Json out = Json::array();
  for (const Interval& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const IntervalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const ClassReport& r) {
  Json j;
  j["class"] = std::string(to_string(r.cls));
  j["verdict"] = std::string(to_string(r.verdict));
  j["cost"] = std::string(to_string(r.cost));
  if (!r.note.empty()) j["note"] = r.note;
  Json c = Json::object();
  if (r.certificate.vector) c["vector"] = *r.certificate.vector;
  if (r.certificate.witness) c["witness"] = to_json(*r.certificate.witness);
  if (r.certificate.signs) c["signs"] = std::vector<int>(r.certificate.signs->entries().begin(), r.certificate.signs->entries().end());
  if (!r.certificate.violated.empty()) c["violated"] = r.certificate.violated;
  c["checked_matrices"] = r.certificate.checked.size();
  j["certificate"] = c;
  return j;
}

Json to_json(const ScalarRange& r) {
  Json j;
  j["strategy"] = std::string(to_string(r.strategy));
  j["lower"] = r.lower ? Json(*r.lower) : Json(nullptr);
  j["upper"] = r.upper ? Json(*r.upper) : Json(nullptr);
  j["lower_attainer"] = optional_matrix(r.lower_attainer);
  j["upper_attainer"] = optional_matrix(r.upper_attainer);
  return j;
}

Json to_json(const MatrixRange& r) {
  Json j;
  j["strategy"] = std::string(to_string(r.strategy));
  j["value"] = to_json(r.value);
  j["lower_attainers"] = matrix_list(r.lower_attainers);
  j["upper_attainers"] = matrix_list(r.upper_attainers);
  return j;
}

Json to_json(const HullResult& r) {
  Json j;
  j["method"] = std::string(to_string(r.method));
  j["label"] = r.label;
  j["exactness"] = std::string(to_string(r.exactness));
  j["hull"] = to_json(r.hull);
  Json att = Json::array();
  for (std::size_t i = 0; i < r.lower_matrix.size(); ++i) {
    Json a;
    a["lower_matrix"] = to_json(r.lower_matrix[i]);
    a["lower_rhs"] = i < r.lower_rhs.size() ? Json(r.lower_rhs[i]) : Json(nullptr);
    a["upper_matrix"] = to_json(r.upper_matrix[i]);
    a["upper_rhs"] = i < r.upper_rhs.size() ? Json(r.upper_rhs[i]) : Json(nullptr);
    att.push_back(a);
  }
  j["attainers"] = att;
  return j;
}

Interval interval_from_json(const Json& j) {
  if (j.is_number()) return Interval(j.get<double>());
  return Interval(j.at(0).get<double>(), j.at(1).get<double>());
}

IntervalVector interval_vector_from_json(const Json& j) {
  IntervalVector out;
  for (const Json& x : j) out.push_back(interval_from_json(x));
  return out;
}

Matrix matrix_from_json(const Json& j) {
  const std::size_t rows = j.size(), cols = rows ? j.at(0).size() : 0;
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = j.at(i).at(k).get<double>();
  return m;
}

IntervalMatrix interval_matrix_from_json(const Json& j) {
  const std::size_t rows = j.size(), cols = rows ? j.at(0).size() : 0;
  IntervalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < cols; ++k) m.set(i, k, interval_from_json(j.at(i).at(k)));
  return m;
}

ScalarRange scalar_range_from_json(const Json& j) {
  ScalarRange r;
  r.strategy = enum_from(j.at("strategy").get<std::string>(), Strategy::DiagonallyIntervalCube);
  if (!j.at("lower").is_null()) r.lower = j.at("lower").get<double>();
  if (!j.at("upper").is_null()) r.upper = j.at("upper").get<double>();
  r.lower_attainer = optional_matrix_from(j.at("lower_attainer"));
  r.upper_attainer = optional_matrix_from(j.at("upper_attainer"));
  return r;
}

MatrixRange matrix_range_from_json(const Json& j) {
  MatrixRange r;
  r.strategy = enum_from(j.at("strategy").get<std::string>(), Strategy::DiagonallyIntervalCube);
  r.value = interval_matrix_from_json(j.at("value"));
  r.lower_attainers = matrix_list_from(j.at("lower_attainers"));
  r.upper_attainers = matrix_list_from(j.at("upper_attainers"));
  return r;
}

HullResult hull_from_json(const Json& j) {
  HullResult r;
  r.method = enum_from(j.at("method").get<std::string>(), SolveMethod::Popova);
  r.label = j.at("label").get<std::string>();
  r.exactness = j.at("exactness").get<std::string>() == to_string(Exactness::ExactHull) ? Exactness::ExactHull
                                                                                        : Exactness::Enclosure;
  r.hull = interval_vector_from_json(j.at("hull"));
  for (const Json& a : j.at("attainers")) {
    r.lower_matrix.push_back(matrix_from_json(a.at("lower_matrix")));
    r.upper_matrix.push_back(matrix_from_json(a.at("upper_matrix")));
    if (!a.at("lower_rhs").is_null()) r.lower_rhs.push_back(a.at("lower_rhs").get<Vector>());
    if (!a.at("upper_rhs").is_null()) r.upper_rhs.push_back(a.at("upper_rhs").get<Vector>());
  }
  return r;
}

std::string format_interval(const Interval& x) { return "[" + num(x.lo()) + ", " + num(x.hi()) + "]"; }

std::string render_text(const ClassReport& r) {
  std::string out = std::string(to_string(r.cls)) + ": " + std::string(to_string(r.verdict));
  if (r.cost == CostPath::Exponential) out += " (exponential)";
  if (!r.note.empty()) out += "  " + r.note;
  if (!r.certificate.violated.empty()) out += "  violated: " + r.certificate.violated;
  out += "\n";
  if (r.certificate.witness) out += "  witness:\n" + matrix_text(*r.certificate.witness, "    ");
  return out;
}

std::string render_text(const ScalarRange& r, const std::string& name) {
  std::string out = name + " = [" + (r.lower ? num(*r.lower) : std::string("?")) + ", " +
                    (r.upper ? num(*r.upper) : std::string("?")) + "]  strategy: " + std::string(to_string(r.strategy)) +
                    "\n";
  if (r.lower_attainer) out += "  lower attained at:\n" + matrix_text(*r.lower_attainer, "    ");
  if (r.upper_attainer) out += "  upper attained at:\n" + matrix_text(*r.upper_attainer, "    ");
  return out;
}

std::string render_text(const MatrixRange& r, const std::string& name) {
  std::string out = name + "  strategy: " + std::string(to_string(r.strategy)) + "\n";
  for (std::size_t i = 0; i < r.value.rows(); ++i) {
    out += "  ";
    for (std::size_t j = 0; j < r.value.cols(); ++j) out += (j ? " " : "") + format_interval(r.value(i, j));
    out += "\n";
  }
  if (r.lower_attainers.size() == 1) {
    out += "  lower attained at:\n" + matrix_text(r.lower_attainers.front(), "    ");
    out += "  upper attained at:\n" + matrix_text(r.upper_attainers.front(), "    ");
  } else if (!r.lower_attainers.empty()) {
    out += "  per-entry attainers in json output\n";
  }
  return out;
}

std::string render_text(const HullResult& r) {
  std::ostringstream os;
  os << "method: " << r.label << " (" << to_string(r.exactness) << ")\n";
  for (std::size_t i = 0; i < r.hull.size(); ++i) os << "  x" << i + 1 << " in " << format_interval(r.hull[i]) << "\n";
  return os.str();
}

}  // namespace imx

#include "imx/problem_io.hpp"

#include <fstream>
#include <sstream>

#include "imx/error.hpp"
#include "json.hpp"

namespace imx {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& source, const std::string& where, const std::string& what) {
  throw Error(ErrorCode::ParseError, source + ": " + where + ": " + what);
}

struct Reader {
  const std::string& source;

  const json& field(const json& obj, const char* name) const {
    if (!obj.contains(name)) fail(source, name, "missing field");
    return obj.at(name);
  }

  double number(const json& v, const std::string& where) const {
    if (!v.is_number()) fail(source, where, "expected a number");
    return v.get<double>();
  }

  Interval interval(const json& v, const std::string& where) const {
    if (v.is_number()) return Interval(v.get<double>());
    if (!v.is_array() || v.size() != 2) fail(source, where, "expected a number or a [lo, hi] pair");
    const double lo = number(v[0], where + "[0]");
    const double hi = number(v[1], where + "[1]");
    if (lo > hi) fail(source, where, "lower endpoint " + json(lo).dump() + " exceeds upper endpoint " + json(hi).dump());
    return Interval(lo, hi);
  }

  IntervalVector ivector(const json& v, const std::string& where) const {
    if (!v.is_array()) fail(source, where, "expected an array");
    IntervalVector out;
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(interval(v[i], where + "[" + std::to_string(i) + "]"));
    return out;
  }

  IntervalMatrix imatrix(const json& v, const std::string& where) const {
    if (!v.is_array() || v.empty()) fail(source, where, "expected a non-empty array of rows");
    const std::size_t rows = v.size();
    std::size_t cols = 0;
    std::vector<IntervalVector> data;
    for (std::size_t i = 0; i < rows; ++i) {
      data.push_back(ivector(v[i], where + "[" + std::to_string(i) + "]"));
      if (i == 0) cols = data.back().size();
      if (data.back().size() != cols || cols == 0)
        fail(source, where + "[" + std::to_string(i) + "]", "rows must be non-empty and of equal length");
    }
    IntervalMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m.set(i, j, data[i][j]);
    return m;
  }

  Matrix rmatrix(const json& v, const std::string& where) const {
    const IntervalMatrix m = imatrix(v, where);
    if (!m.is_point()) fail(source, where, "entries must be real numbers");
    return m.mid();
  }

  Vector rvector(const json& v, const std::string& where) const {
    const IntervalVector iv = ivector(v, where);
    Vector out;
    for (std::size_t i = 0; i < iv.size(); ++i) {
      if (!iv[i].is_degenerate()) fail(source, where + "[" + std::to_string(i) + "]", "entry must be a real number");
      out.push_back(iv[i].lo());
    }
    return out;
  }
};

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

json interval_json(const Interval& x) {
  if (x.is_degenerate()) return x.lo();
  return json::array({x.lo(), x.hi()});
}

json matrix_json(const IntervalMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(interval_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json matrix_json(const Matrix& m) { return matrix_json(IntervalMatrix(m)); }

json vector_json(std::span<const Interval> v) {
  json out = json::array();
  for (const Interval& x : v) out.push_back(interval_json(x));
  return out;
}

json vector_json(const Vector& v) { return json(v); }

}  // namespace

std::string_view to_string(ProblemKind k) {
  switch (k) {
    case ProblemKind::Matrix: return "matrix";
    case ProblemKind::System: return "system";
    case ProblemKind::Parametric: return "parametric";
  }
  return "?";
}

Problem parse_problem(std::string_view text, const std::string& source) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_column(text, e.byte);
    std::string msg = e.what();
    if (const auto pos = msg.find("syntax error"); pos != std::string::npos) msg = msg.substr(pos);
    throw Error(ErrorCode::ParseError, source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + msg);
  }
  if (!doc.is_object()) fail(source, "<root>", "expected an object");
  const Reader rd{source};
  const json& version = rd.field(doc, "format_version");
  if (!version.is_number_integer() || version.get<int>() != kFormatVersion)
    fail(source, "format_version", "unsupported version " + version.dump() + " (expected 1)");
  const json& kind = rd.field(doc, "kind");
  if (!kind.is_string()) fail(source, "kind", "expected a string");

  Problem p;
  if (doc.contains("symmetric")) {
    if (!doc["symmetric"].is_boolean()) fail(source, "symmetric", "expected true or false");
    p.symmetric = doc["symmetric"].get<bool>();
  }
  const std::string k = kind.get<std::string>();
  if (k == "matrix") {
    p.kind = ProblemKind::Matrix;
    p.matrix = rd.imatrix(rd.field(doc, "matrix"), "matrix");
  } else if (k == "system") {
    p.kind = ProblemKind::System;
    p.matrix = rd.imatrix(rd.field(doc, "matrix"), "matrix");
    p.rhs = rd.ivector(rd.field(doc, "rhs"), "rhs");
    if (!p.matrix.is_square()) fail(source, "matrix", "system matrix must be square");
    if (p.rhs.size() != p.matrix.rows())
      fail(source, "rhs", "length " + std::to_string(p.rhs.size()) + " does not match " +
                              std::to_string(p.matrix.rows()) + " matrix rows");
  } else if (k == "parametric") {
    p.kind = ProblemKind::Parametric;
    const json& mats = rd.field(doc, "matrices");
    if (!mats.is_array()) fail(source, "matrices", "expected an array of matrices");
    std::vector<Matrix> a;
    for (std::size_t i = 0; i < mats.size(); ++i) a.push_back(rd.rmatrix(mats[i], "matrices[" + std::to_string(i) + "]"));
    const IntervalVector params = rd.ivector(rd.field(doc, "params"), "params");
    std::size_t n = 0;
    if (doc.contains("matrix"))
      n = rd.rmatrix(doc["matrix"], "matrix").rows();
    else if (!a.empty())
      n = a.front().rows();
    else
      fail(source, "matrices", "need a constant matrix or at least one parameter matrix");
    const Matrix a0 = doc.contains("matrix") ? rd.rmatrix(doc["matrix"], "matrix") : Matrix(n, n);
    const Vector b0 = doc.contains("rhs") ? rd.rvector(doc["rhs"], "rhs") : Vector(n, 0.0);
    std::vector<Vector> b;
    if (doc.contains("vectors")) {
      const json& vs = doc["vectors"];
      if (!vs.is_array()) fail(source, "vectors", "expected an array of vectors");
      for (std::size_t i = 0; i < vs.size(); ++i) b.push_back(rd.rvector(vs[i], "vectors[" + std::to_string(i) + "]"));
    } else {
      b.assign(a.size(), Vector(n, 0.0));
    }
    try {
      p.parametric.emplace(a0, b0, a, b, params);
    } catch (const Error& e) {
      fail(source, "parametric", e.what());
    }
  } else {
    fail(source, "kind", "unknown kind \"" + k + "\" (expected matrix, system or parametric)");
  }
  return p;
}

Problem load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, path + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_problem(ss.str(), path);
}

std::string dump_problem(const Problem& p) {
  json doc;
  doc["format_version"] = kFormatVersion;
  doc["kind"] = std::string(to_string(p.kind));
  if (p.symmetric) doc["symmetric"] = true;
  switch (p.kind) {
    case ProblemKind::Matrix:
      doc["matrix"] = matrix_json(p.matrix);
      break;
    case ProblemKind::System:
      doc["matrix"] = matrix_json(p.matrix);
      doc["rhs"] = vector_json(p.rhs);
      break;
    case ProblemKind::Parametric: {
      const ParametricSystem& s = *p.parametric;
      doc["matrix"] = matrix_json(s.a0);
      doc["rhs"] = vector_json(s.b0);
      doc["matrices"] = json::array();
      for (const Matrix& m : s.a) doc["matrices"].push_back(matrix_json(m));
      doc["vectors"] = json::array();
      for (const Vector& v : s.b) doc["vectors"].push_back(vector_json(v));
      doc["params"] = vector_json(s.p);
      break;
    }
  }
  return doc.dump(2) + "\n";
}

Problem matrix_problem(IntervalMatrix a, bool symmetric) {
  Problem p;
  p.kind = ProblemKind::Matrix;
  p.matrix = std::move(a);
  p.symmetric = symmetric;
  return p;
}

Problem system_problem(IntervalMatrix a, IntervalVector b) {
  Problem p;
  p.kind = ProblemKind::System;
  p.matrix = std::move(a);
  p.rhs = std::move(b);
  return p;
}

Problem parametric_problem(ParametricSystem sys) {
  Problem p;
  p.kind = ProblemKind::Parametric;
  p.parametric = std::move(sys);
  return p;
}

}  // namespace imx

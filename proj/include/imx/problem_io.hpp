#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "imx/interval_matrix.hpp"
#include "imx/parametric.hpp"

namespace imx {

inline constexpr int kFormatVersion = 1;

enum class ProblemKind { Matrix, System, Parametric };

std::string_view to_string(ProblemKind k);

/// Problem file contents. Intervals are [lo, hi] pairs; a bare number is a
/// degenerate interval.
///
///   {"format_version": 1, "kind": "matrix",     "matrix": [[...]], "symmetric": false}
///   {"format_version": 1, "kind": "system",     "matrix": [[...]], "rhs": [...]}
///   {"format_version": 1, "kind": "parametric", "matrix": A0, "rhs": b0,
///    "matrices": [A1, ...], "vectors": [b1, ...], "params": [p1, ...]}
///
/// For parametric problems "matrix", "rhs" and "vectors" are optional and
/// default to zero; all their entries must be real.
struct Problem {
  ProblemKind kind = ProblemKind::Matrix;
  IntervalMatrix matrix;
  IntervalVector rhs;
  std::optional<ParametricSystem> parametric;
  bool symmetric = false;
};

/// Throws ParseError with "source:line:column" for syntax errors and the
/// offending field path for semantic ones.
Problem parse_problem(std::string_view text, const std::string& source = "<input>");
Problem load_problem(const std::string& path);

std::string dump_problem(const Problem& p);

Problem matrix_problem(IntervalMatrix a, bool symmetric = false);
Problem system_problem(IntervalMatrix a, IntervalVector b);
Problem parametric_problem(ParametricSystem sys);

}  // namespace imx

#pragma once

#include <string>

#include "imx/classify.hpp"
#include "imx/linsolve.hpp"
#include "imx/ranges.hpp"
#include "json.hpp"

namespace imx {

using Json = nlohmann::json;

// Machine-readable reports. Doubles are written in shortest round-trip form,
// so reading a report back reproduces every number bit-exactly.
Json to_json(const Interval& x);
Json to_json(std::span<const Interval> v);
Json to_json(const Matrix& m);
Json to_json(const IntervalMatrix& m);
Json to_json(const ClassReport& r);
Json to_json(const ScalarRange& r);
Json to_json(const MatrixRange& r);
Json to_json(const HullResult& r);

Interval interval_from_json(const Json& j);
IntervalVector interval_vector_from_json(const Json& j);
Matrix matrix_from_json(const Json& j);
IntervalMatrix interval_matrix_from_json(const Json& j);
ScalarRange scalar_range_from_json(const Json& j);
MatrixRange matrix_range_from_json(const Json& j);
HullResult hull_from_json(const Json& j);

std::string format_interval(const Interval& x);
std::string render_text(const ClassReport& r);
std::string render_text(const ScalarRange& r, const std::string& name);
std::string render_text(const MatrixRange& r, const std::string& name);
std::string render_text(const HullResult& r);

}  // namespace imx

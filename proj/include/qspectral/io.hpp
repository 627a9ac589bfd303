#pragma once

// JSON encodings:
//   quaternion  [x0, x1, x2, x3]
//   matrix      {"n": n, "entries": [[q, ...], ...]} row-major
//   series      {"side": "left"|"right", "radius": r, "coefficients": [q, ...]}
//   spectrum    {"spheres": [{"u": u, "v": v, "mult": m}, ...]}
// Floats are written with 17 significant digits.

#include <json.hpp>
#include <string>

#include "qspectral/qmatrix.hpp"
#include "qspectral/slice_function.hpp"
#include "qspectral/spectrum.hpp"

namespace qspectral::io {

using Json = nlohmann::json;

Json to_json(const Quaternion& q);
Json to_json(const QMatrix& t);
Json to_json(const SliceSeries& f);
Json to_json(const SpectrumResult& s);

Quaternion quaternion_from_json(const Json& j);
QMatrix matrix_from_json(const Json& j);
SliceSeries series_from_json(const Json& j);

/// Compact serialization with %.17g floats; integral doubles print without a fraction.
std::string dump(const Json& j);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// "x0,x1,x2,x3"
Quaternion parse_quaternion(const std::string& text);
/// "e1" | "e2" | "e3" | "x,y,z" (normalized)
ImaginaryUnit parse_unit(const std::string& text);

}  // namespace qspectral::io

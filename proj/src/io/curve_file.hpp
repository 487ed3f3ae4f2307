#pragma once

#include <string>

#include "hcurve/curve.hpp"
#include "io/text.hpp"

namespace ncm::io {

struct CurveFile {
  std::string name;
  hcurve::WeightedP1 curve;
};

// [curve] rank, base_point, optional name; one [point] per weighted point
// with xi, weight and composition "n1,n2,...". Validation failures are
// ParseError carrying the offending line.
CurveFile parse_curve_file(std::string_view text, const std::string& file);
std::string emit_curve_file(const CurveFile& c);
CurveFile load_curve(const std::string& path);

}  // namespace ncm::io

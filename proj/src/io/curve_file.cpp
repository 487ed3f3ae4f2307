#include "io/curve_file.hpp"

namespace ncm::io {

namespace {

hcurve::Point parse_point(const std::string& file, const Entry& e) {
  if (e.value == "inf") return hcurve::Point::inf();
  return hcurve::Point::at(parse_rational(file, e, e.value));
}

}  // namespace

CurveFile parse_curve_file(std::string_view text, const std::string& file) {
  const auto sections = parse_sections(text, file);
  if (sections.empty() || sections[0].name != "curve") fail(file, 1, 1, "curve", "file must start with [curve]");
  CurveFile out;
  const Section& head = sections[0];
  check_keys(head, file, {"rank", "base_point", "name"}, {"rank", "base_point", "name"});
  const Entry* rank = find_entry(head, "rank");
  if (!rank) fail(file, head.line, 1, "curve", "[curve] needs 'rank'");
  out.curve.rank = parse_count(file, *rank, rank->value);
  if (const Entry* o = find_entry(head, "base_point")) out.curve.o = parse_point(file, *o);
  const Entry* name = find_entry(head, "name");
  out.name = name ? name->value : "unnamed";
  std::vector<size_t> lines;
  for (size_t i = 1; i < sections.size(); ++i) {
    const Section& s = sections[i];
    if (s.name != "point") fail(file, s.line, 1, "section", "unknown section [" + s.name + "]");
    check_keys(s, file, {"xi", "weight", "composition"}, {"xi", "weight", "composition"});
    const Entry* xi = find_entry(s, "xi");
    const Entry* w = find_entry(s, "weight");
    const Entry* c = find_entry(s, "composition");
    if (!xi || !w || !c) fail(file, s.line, 1, "point", "[point] needs xi, weight and composition");
    hcurve::SpecialPoint p{parse_point(file, *xi), parse_count(file, *w, w->value), {}};
    for (const std::string& part : split_list(c->value, ',')) p.composition.push_back(parse_count(file, *c, part));
    out.curve.points.push_back(p);
    lines.push_back(s.line);
  }
  try {
    out.curve.validate();
  } catch (const Error& e) {
    // Point the diagnostic at the offending [point] when it names one.
    // A repeated point is blamed on its later occurrence.
    size_t line = head.line;
    const std::string what = e.what();
    if (what.find("rank") != std::string::npos && what.find("point") == std::string::npos) line = rank->line;
    for (size_t i = 0; i < out.curve.points.size(); ++i)
      if (what.find("point " + hcurve::to_string(out.curve.points[i].x) + " ") != std::string::npos ||
          what.find("point " + hcurve::to_string(out.curve.points[i].x) + ":") != std::string::npos)
        line = lines[i];
    fail(file, line, 1, "curve", what);
  }
  return out;
}

std::string emit_curve_file(const CurveFile& c) {
  std::string s = "[curve]\nname = " + c.name + "\nrank = " + std::to_string(c.curve.rank) +
                  "\nbase_point = " + hcurve::to_string(c.curve.o) + "\n";
  for (const auto& p : c.curve.points) {
    s += "\n[point]\nxi = " + hcurve::to_string(p.x) + "\nweight = " + std::to_string(p.weight) + "\ncomposition = ";
    for (size_t i = 0; i < p.composition.size(); ++i) s += (i ? "," : "") + std::to_string(p.composition[i]);
    s += "\n";
  }
  return s;
}

CurveFile load_curve(const std::string& path) { return parse_curve_file(read_file(path), path); }

}  // namespace ncm::io

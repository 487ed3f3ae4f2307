#include "fixtures.hpp"

#include <sstream>

namespace fx {

using namespace ncm::alg;

namespace {

Path parse_path(const QuiverPresentation& q, const std::string& text) {
  Path p;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, '.'))
    for (size_t a = 0; a < q.arrows.size(); ++a)
      if (q.arrows[a].label == part) p.arrows.push_back(uint32_t(a));
  p.vertex = q.source(p);
  return p;
}

}  // namespace

QuiverPresentation quiver(size_t vertices, const std::vector<std::string>& arrows,
                          const std::vector<std::vector<std::pair<int, std::string>>>& relations) {
  QuiverPresentation q;
  for (size_t v = 1; v <= vertices; ++v) q.vertices.push_back(std::to_string(v));
  for (const auto& a : arrows) {
    const auto c1 = a.find(':');
    const auto c2 = a.find(':', c1 + 1);
    q.arrows.push_back({a.substr(0, c1), std::stoul(a.substr(c1 + 1, c2 - c1 - 1)) - 1, std::stoul(a.substr(c2 + 1)) - 1});
  }
  for (const auto& r : relations) {
    Relation rel;
    for (const auto& [c, path] : r) rel.push_back({c, parse_path(q, path)});
    q.relations.push_back(rel);
  }
  return q;
}

QuiverPresentation lambda_pres() {
  return quiver(3, {"a1:1:2", "a2:1:2", "b1:2:3", "b2:2:3"}, {{{1, "b1.a1"}}, {{1, "b2.a2"}}});
}
QuiverPresentation kronecker_pres() { return quiver(2, {"a:1:2", "b:1:2"}); }
QuiverPresentation kx2_pres() { return quiver(1, {"x:1:1"}, {{{1, "x.x"}}}); }
QuiverPresentation a2_pres() { return quiver(2, {"a:1:2"}); }

AlgebraPtr lambda() { return algebra_from_quiver(lambda_pres(), 32, "Lambda").algebra; }
AlgebraPtr kronecker() { return algebra_from_quiver(kronecker_pres(), 32, "Kronecker").algebra; }
AlgebraPtr kx2() { return algebra_from_quiver(kx2_pres(), 32, "k[x]/x^2").algebra; }
AlgebraPtr a2() { return algebra_from_quiver(a2_pres(), 32, "A2").algebra; }
AlgebraPtr k() { return field_algebra("e1"); }
AlgebraPtr mat2() { return matrix_algebra(2); }

}  // namespace fx

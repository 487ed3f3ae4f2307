#include <algorithm>
#include <functional>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "hcurve/canonical.hpp"
#include "hcurve/local_order.hpp"
#include "homalg/heredity.hpp"
#include "oracles.hpp"

using namespace ncm;
using namespace ncm::hcurve;

namespace {

SpecialPoint sp(const Scalar& xi, size_t weight, size_t rank) {
  SpecialPoint s{Point::at(xi), weight, std::vector<size_t>(weight, 1)};
  s.composition.back() += rank - weight;
  return s;
}

CurvePtr curve(const std::vector<Scalar>& xs, const std::vector<size_t>& weights, Point o = Point::inf()) {
  size_t rank = 1;
  for (size_t w : weights) rank = std::max(rank, w);
  WeightedP1 c{rank, o, {}};
  for (size_t i = 0; i < xs.size(); ++i) c.points.push_back(sp(xs[i], weights[i], rank));
  return make_curve(c);
}

// Curves of the test corpus.
std::vector<CurvePtr> corpus() {
  std::vector<CurvePtr> out{curve({}, {}), curve({0}, {2}), curve({0, 1}, {2, 2}), curve({0, 1, 2}, {2, 2, 2}),
                            curve({0, 1, 3}, {2, 3, 4}), curve({0, 1, Scalar(1, 2), -2}, {2, 2, 3, 2})};
  WeightedP1 c{3, Point::at(5), {}};
  c.points.push_back(SpecialPoint{Point::inf(), 3, {1, 1, 1}});
  c.points.push_back(SpecialPoint{Point::at(0), 2, {2, 1}});
  out.push_back(make_curve(c));
  return out;
}

// Hom table on the tilting set: O(D) with D one of 0, o - x, o, -o, read
// off from which pair of objects is involved.
enum class Kind { O, OminusX, Oo, Minus };
Kind table(const ChainSheaf& a, const ChainSheaf& b) {
  const auto point_of = [](const ChainSheaf& s) -> std::optional<std::pair<size_t, size_t>> {
    for (size_t p = 0; p < s.index.size(); ++p)
      if (s.index[p]) return std::make_pair(p, s.index[p]);
    return std::nullopt;
  };
  const bool b_l = !point_of(b) && b.twist.coefficients().empty();
  const bool a_lo = !point_of(a) && !a.twist.coefficients().empty();
  const auto pa = point_of(a), pb = point_of(b);
  if (a.same_object(b)) return Kind::O;
  if (pa && b_l) return Kind::O;
  if (pa && pb && pa->first == pb->first && pa->second > pb->second) return Kind::O;
  if (a_lo && pb) return Kind::OminusX;
  if (a_lo && b_l) return Kind::Oo;
  return Kind::Minus;
}

size_t table_dim(Kind k) { return k == Kind::Oo ? 2 : (k == Kind::Minus ? 0 : 1); }

Scalar binom(size_t n, size_t k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return Scalar(r);
}

// dim of sections of O(D) by linear algebra on p / prod_{D(xi)>0} (t-xi)^{D(xi)}
// with p of degree <= bound: vanishing conditions at negative points and a
// degree condition at infinity.
size_t sections_dim_oracle(const Divisor& d) {
  long qdeg = 0;
  for (const auto& [p, m] : d.coefficients())
    if (!p.infinite && m > 0) qdeg += m;
  const long dinf = d.at(Point::inf());
  const long top = qdeg + dinf;  // deg p <= deg q + D(inf)
  if (top < 0) return 0;
  const size_t n = size_t(top + 1);
  std::vector<Vec> rows;
  for (const auto& [p, m] : d.coefficients()) {
    if (p.infinite || m >= 0) continue;
    for (size_t j = 0; j < size_t(-m); ++j) {
      Vec r(n);
      for (size_t k = j; k < n; ++k) {
        Scalar pw = 1;
        for (size_t e = 0; e < k - j; ++e) pw *= p.xi;
        r[k] = binom(k, j) * pw;
      }
      rows.push_back(r);
    }
  }
  if (rows.empty()) return n;
  return n - la::rank(Mat::from_rows(rows, n));
}

std::vector<Divisor> divisor_samples() {
  std::vector<Divisor> out;
  const std::vector<Point> pts{Point::at(0), Point::at(1), Point::at(Scalar(-3, 2)), Point::inf()};
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int i = 0; i < 200; ++i) {
    Divisor d;
    for (const Point& p : pts) d.add(p, coef(rng));
    out.push_back(d);
  }
  return out;
}

// Paths of the canonical quiver: within each arm every subpath, with the r
// long paths reduced to 2 by the relations.
size_t canonical_dim_oracle(const std::vector<size_t>& w) {
  size_t v = 2, d = 0;
  for (size_t k : w) {
    v += k - 1;
    d += k * (k + 1) / 2 - 1;
  }
  return v + d + 2;
}

}  // namespace

TEST_CASE("rational functions and divisors") {
  const RationalFunction f(Poly(Vec{-1, 0, 1}), Poly(Vec{1, 1}));  // (t^2-1)/(t+1)
  CHECK(f.den() == Poly::constant(1));
  CHECK(f.num() == Poly::linear(1));
  const RationalFunction g(Poly(Vec{1}), Poly(Vec{0, 0, 2}));
  CHECK(g.order_at(Point::at(0)) == -2);
  CHECK(g.order_at(Point::inf()) == 2);
  CHECK(to_string(g) == "1/2/(t^2)");
  CHECK(to_string(RationalFunction::polynomial(Poly::linear(3))) == "t - 3");
  CHECK((f * inverse(f)) == RationalFunction::constant(1));
  Divisor d = Divisor::point(Point::inf()) - Divisor::point(Point::at(2), 2);
  CHECK(d.degree() == -1);
  CHECK(to_string(d) == "-2*[2] + [inf]");
  d.add(Point::at(2), 2);
  CHECK(d == Divisor::point(Point::inf()));
}

TEST_CASE("sections of line bundles") {
  using RF = RationalFunction;
  CHECK(sections_basis(Divisor{}) == std::vector<RF>{RF::constant(1)});
  CHECK(sections_basis(Divisor::point(Point::inf())) ==
        std::vector<RF>{RF::constant(1), RF::polynomial(Poly::monomial(1))});
  const Divisor two = Divisor::point(Point::at(1)) + Divisor::point(Point::at(4));
  CHECK(sections_basis(two) == std::vector<RF>{RF::constant(1), RF(Poly::constant(1), Poly::linear(1)),
                                               RF(Poly::constant(1), Poly::linear(4))});
  for (const Divisor& d : divisor_samples()) {
    const auto basis = sections_basis(d);
    CAPTURE(to_string(d));
    CHECK(basis.size() == sections_dim_oracle(d));
    CHECK(basis.size() == size_t(std::max<long>(d.degree() + 1, 0)));
    for (size_t i = 0; i < basis.size(); ++i) {
      CHECK(in_sections(basis[i], d));
      const auto c = section_coordinates(basis, d, basis[i]);
      REQUIRE(c);
      CHECK(*c == la::unit_vector(basis.size(), i));
    }
  }
  CHECK_FALSE(in_sections(RF(Poly::constant(1), Poly::linear(0)), Divisor{}));
  CHECK_FALSE(section_coordinates(sections_basis(Divisor{}), Divisor{}, RF::polynomial(Poly::monomial(1))));
}

TEST_CASE("curve validation and object sets") {
  CHECK_THROWS_AS(curve({0, 0}, {2, 2}), Error);
  CHECK_THROWS_AS(curve({0}, {1}), Error);
  CHECK_THROWS_AS(curve({0}, {2}, Point::at(0)), Error);
  WeightedP1 bad{2, Point::inf(), {SpecialPoint{Point::at(0), 2, {1, 2}}}};
  try {
    make_curve(bad);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidCurve);
  }
  CHECK(tilting_set(curve({}, {})).size() == 2);
  CHECK(tilting_set(curve({0}, {2})).size() == 3);
  CHECK(tilting_set(curve({0, 1, 2}, {2, 2, 2})).size() == 5);
  CHECK(generating_set(curve({0, 1, 2}, {2, 2, 2})).size() == 7);
  const auto t = tilting_set(curve({0, 1}, {3, 2}));
  std::vector<std::string> labels;
  for (const auto& s : t) labels.push_back(s.label());
  CHECK(labels == std::vector<std::string>{"L", "L(-o)", "L_{0,1}", "L_{0,2}", "L_{1,1}"});
}

TEST_CASE("hom divisors reproduce the tilting table") {
  for (const CurvePtr& c : corpus()) {
    const auto t = tilting_set(c);
    const Divisor o = Divisor::point(c->o);
    for (const auto& a : t)
      for (const auto& b : t) {
        CAPTURE(a.label());
        CAPTURE(b.label());
        const Divisor d = hom_divisor(a, b);
        const ExtDims e = hom_and_ext_dims(a, b);
        const Kind k = table(a, b);
        CHECK(e.h0 == table_dim(k));
        CHECK(e.h1 == 0);
        if (k == Kind::O) CHECK(d == Divisor{});
        if (k == Kind::Oo) CHECK(d == o);
        if (k == Kind::OminusX) {
          size_t p = 0;
          while (!b.index[p]) ++p;
          CHECK(d == o - Divisor::point(c->points[p].x));
        }
        if (k == Kind::Minus) CHECK(d.degree() == -1);
        // Degree pairing.
        const long both = d.degree() + hom_divisor(b, a).degree();
        CHECK(both <= 0);
        CHECK((both == 0) == (a.index == b.index));
      }
  }
  const CurvePtr c = curve({0}, {2});
  const auto l = ChainSheaf::base(c);
  const Divisor o = Divisor::point(Point::inf());
  CHECK(hom_divisor(ChainSheaf::twisted(c, o), l) == o);
  const auto l2 = ChainSheaf::twisted(c, o + o);
  CHECK(hom_divisor(l, l2) == Divisor::point(Point::inf(), -2));
  CHECK(hom_and_ext_dims(l, l2).h1 == 1);
  CHECK(hom_and_ext_dims(l, l2).h0 == 0);
  CHECK(hom_and_ext_dims(l2, l).h0 == 3);
  // Generating set includes L_{x,kappa} = L(-x).
  const auto lk = ChainSheaf::chain(c, 0, 2);
  CHECK(hom_divisor(lk, ChainSheaf::twisted(c, Divisor::point(Point::at(0)))) == Divisor{});
  try {
    hom_divisor(l, ChainSheaf::base(curve({1}, {2})));
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CurveMismatch);
  }
}

TEST_CASE("composition of sections") {
  const CurvePtr c = curve({0, 1, 3}, {2, 3, 2});
  const auto l = ChainSheaf::base(c);
  const auto lo = ChainSheaf::twisted(c, Divisor::point(c->o));
  const HomElement id{l, l, RationalFunction::constant(1)};
  const HomElement t{lo, l, RationalFunction::polynomial(Poly::linear(2))};
  CHECK(compose(id, t).f == t.f);
  CHECK(compose(t, HomElement{lo, lo, RationalFunction::constant(1)}).f == t.f);
  try {
    compose(t, id);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ChainMismatch);
  }
  try {
    compose(id, HomElement{l, l, RationalFunction::polynomial(Poly::monomial(1))});
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DivisorViolation);
  }
  // theta_{x,1} after theta_{x,2} for weight 2 is the section 1 of Hom(L(-x), L).
  const auto th = theta_maps(c, Point::at(0));
  const HomElement twice = compose(th.steps[0], th.steps[1]);
  CHECK(twice.f == RationalFunction::constant(1));
  CHECK(hom_divisor(twice.src, twice.tgt) == Divisor::point(Point::at(0)));
  // Random associativity over the generating set.
  auto objs = generating_set(c);
  objs.push_back(lo);
  std::mt19937 rng(11);
  std::uniform_int_distribution<size_t> pick(0, objs.size() - 1);
  std::uniform_int_distribution<int> coef(-3, 3);
  const auto random_element = [&](const ChainSheaf& a, const ChainSheaf& b) {
    const HomSpace h = hom_basis(a, b);
    RationalFunction f;
    for (const auto& g : h.basis) f = f + Scalar(coef(rng)) * g;
    return HomElement{a, b, f};
  };
  for (int i = 0; i < 300; ++i) {
    const auto &a = objs[pick(rng)], &b = objs[pick(rng)], &x = objs[pick(rng)], &y = objs[pick(rng)];
    const HomElement f = random_element(a, b), g = random_element(b, x), h = random_element(x, y);
    CHECK(compose(h, compose(g, f)).f == compose(compose(h, g), f).f);
  }
}

TEST_CASE("theta maps") {
  const CurvePtr c = curve({0, 1, Scalar(7, 2)}, {2, 3, 2});
  std::vector<Vec> coords;
  for (const auto& p : c->points) {
    const ThetaMaps t = theta_maps(c, p.x);
    CHECK(t.steps.size() == p.weight);
    for (const auto& s : t.steps) CHECK(s.f == RationalFunction::constant(1));
    CHECK(t.composite.f == RationalFunction::polynomial(Poly::linear(p.x.xi)));
    CHECK(t.coords == Vec{Scalar(-p.x.xi), 1});
    coords.push_back(t.coords);
  }
  // Any two generate Hom(L(-o), L).
  for (size_t i = 0; i < coords.size(); ++i)
    for (size_t j = i + 1; j < coords.size(); ++j) CHECK(la::rank(Mat::from_columns({coords[i], coords[j]}, 2)) == 2);
  CHECK(theta_composite(c, Point::at(9)).f == RationalFunction::polynomial(Poly::linear(9)));
  try {
    theta_maps(c, Point::at(9));
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PointNotSpecial);
  }
  // Finite base point: theta_x = (t - x)/(t - o), and 1/(t - o) at infinity.
  const CurvePtr f = corpus().back();
  const auto ti = theta_maps(f, Point::inf());
  CHECK(ti.composite.f == RationalFunction(Poly::constant(1), Poly::linear(5)));
  const auto t0 = theta_maps(f, Point::at(0));
  CHECK(t0.composite.f == RationalFunction(Poly::linear(0), Poly::linear(5)));
  CHECK(la::rank(Mat::from_columns({ti.coords, t0.coords}, 2)) == 2);
}

TEST_CASE("canonical algebras") {
  const auto r11 = canonical_algebra({1, 1}, {});
  CHECK(r11.algebra.algebra->dim() == 4);
  CHECK(homalg::algebra_gldim(r11.algebra.algebra, 12).value == 1);
  CHECK(r11.algebra.algebra->dim() == fx::kronecker()->dim());
  const auto r23 = canonical_algebra({2, 3}, {});
  CHECK(r23.quiver.relations.empty());
  CHECK(r23.algebra.algebra->dim() == oracle::path_algebra_dim(r23.quiver, 5));
  CHECK(homalg::algebra_gldim(r23.algebra.algebra, 12).value == 1);
  const auto r222 = canonical_algebra({2, 2, 2}, {3});
  CHECK(r222.algebra.algebra->dim() == 13);
  CHECK(r222.algebra.algebra->dim() == oracle::path_algebra_dim(r222.quiver, 3));
  CHECK(homalg::algebra_gldim(r222.algebra.algebra, 12).value == 2);
  CHECK(r222.quiver.path_label(r222.quiver.relations[0][0].path) == "a3_2.a3_1");
  for (const auto& w : std::vector<std::vector<size_t>>{{2, 2, 3}, {2, 3, 4}, {2, 2, 2, 2}, {3, 3, 3}}) {
    std::vector<Scalar> ls;
    for (size_t j = 2; j < w.size(); ++j) ls.push_back(Scalar(long(j) + 1));
    const auto r = canonical_algebra(w, ls);
    CHECK(r.algebra.algebra->dim() == canonical_dim_oracle(w));
    CHECK(r.algebra.algebra->dim() == oracle::path_algebra_dim(r.quiver, 8));
  }
  const auto err = [](const std::vector<size_t>& w, const std::vector<Scalar>& l) {
    try {
      canonical_algebra(w, l);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvalidInput;
  };
  CHECK(err({2}, {}) == ErrorKind::InvalidWeights);
  CHECK(err({2, 1, 2}, {2}) == ErrorKind::InvalidWeights);
  CHECK(err({2, 2, 2}, {}) == ErrorKind::InvalidWeights);
  CHECK(err({2, 2, 2, 2}, {2, 2}) == ErrorKind::RepeatedLambda);
  CHECK(err({2, 2, 2}, {0}) == ErrorKind::RepeatedLambda);
}

TEST_CASE("tilting endomorphism algebras") {
  const auto kr = tilting_endomorphism_algebra(curve({}, {}));
  CHECK(kr.algebra->dim() == 4);
  CHECK(homalg::algebra_gldim(kr.algebra, 12).value == 1);
  const auto one = tilting_endomorphism_algebra(curve({0}, {2}));
  CHECK(one.algebra->dim() == canonical_dim_oracle({2, 1}));
  const auto t = tilting_endomorphism_algebra(curve({0, 1, 2}, {2, 2, 2}));
  CHECK(t.algebra->dim() == 13);
  CHECK(homalg::algebra_gldim(t.algebra, 12).value == 2);
  for (const CurvePtr& c : corpus()) {
    const auto ta = tilting_endomorphism_algebra(c);
    std::vector<size_t> w;
    for (const auto& p : c->points) w.push_back(p.weight);
    if (w.size() == 1) w.push_back(1);
    while (w.size() < 2) w.push_back(1);
    CHECK(ta.algebra->dim() == canonical_dim_oracle(w));
  }
}

TEST_CASE("matching the canonical form") {
  const auto r2 = tilting_endomorphism_algebra(curve({0, 1}, {2, 2}));
  const auto m2 = match_canonical(r2.algebra, r2);
  CHECK(m2.weights == std::vector<size_t>{2, 2});
  CHECK(m2.lambdas.empty());
  for (const Scalar mu : {Scalar(3), Scalar(-1), Scalar(1, 2), Scalar(5), Scalar(-7, 3)}) {
    const auto t = tilting_endomorphism_algebra(curve({0, 1, mu}, {2, 2, 2}));
    const auto m = match_canonical(t.algebra, t);
    CHECK(m.weights == std::vector<size_t>{2, 2, 2});
    // t - mu = a t + b (t - 1): b = mu, a = 1 - mu.
    CHECK(m.lambdas == std::vector<Scalar>{mu / (1 - mu)});
  }
  // Round trip from parameters: lambda = mu/(1-mu) gives mu = lambda/(1+lambda).
  for (const auto& [w, ls] : std::vector<std::pair<std::vector<size_t>, std::vector<Scalar>>>{
           {{2, 3, 2}, {Scalar(4)}}, {{2, 2, 2, 2}, {Scalar(2), Scalar(-1, 3)}}, {{3, 2, 4}, {Scalar(1, 5)}}}) {
    std::vector<Scalar> xs{0, 1};
    for (const Scalar& l : ls) xs.push_back(l / (1 + l));
    const auto t = tilting_endomorphism_algebra(curve(xs, w));
    const auto m = match_canonical(t.algebra, t);
    CHECK(m.weights == w);
    CHECK(m.lambdas == ls);
    CHECK(alg::is_algebra_isomorphism(*canonical_algebra(w, ls).algebra.algebra, *t.algebra, m.identification));
  }
  for (const CurvePtr& c : corpus()) CHECK_NOTHROW(match_canonical(tilting_endomorphism_algebra(c).algebra,
                                                                   tilting_endomorphism_algebra(c)));

  // Negative control: drop the constant term of theta_3 = t - 3.
  const auto t = tilting_endomorphism_algebra(curve({0, 1, 3}, {2, 2, 2}));
  const auto a1 = t.block(t.object_index("Lo").value(), t.object_index("L3_1").value()).offset;
  const auto a2 = t.block(t.object_index("L3_1").value(), t.object_index("L").value()).offset;
  const auto top = t.block(t.object_index("Lo").value(), t.object_index("L").value()).offset;
  auto tensor = t.algebra->tensor();
  CHECK(tensor[a1][a2][top] == -3);
  tensor[a1][a2][top] = 0;
  const auto tampered =
      alg::Algebra::from_structure_constants(t.algebra->labels(), tensor, t.algebra->unit(), "tampered");
  try {
    match_canonical(tampered, t);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotCanonicalShape);
  }
}

TEST_CASE("local hereditary orders") {
  CHECK_THROWS_AS(local_order({}), Error);
  const LocalOrder h11 = local_order({1, 1});
  CHECK(h11.pattern(0, 1) == 1);
  CHECK(h11.pattern(1, 0) == 0);
  CHECK(h11.contains({0, 1, 0, 0}));
  CHECK_FALSE(h11.contains({0, 0, 0, 0}));
  CHECK(h11.contains({std::nullopt, std::nullopt, 0, 5}));
  const LocalOrder h21 = local_order({2, 1});
  for (size_t r = 0; r < 3; ++r)
    for (size_t c = 0; c < 3; ++c) CHECK(h21.pattern(r, c) == ((c == 2 && r < 2) ? 1 : 0));
  const LocalOrder full = local_order({3});
  for (size_t r = 0; r < 3; ++r)
    for (size_t c = 0; c < 3; ++c) CHECK(full.pattern(r, c) == 0);

  const auto s11 = local_projectives_and_simples(h11);
  REQUIRE(s11.lattices.size() == 3);
  CHECK(s11.lattices[0].valuation == std::vector<long>{0, 0});
  CHECK(s11.lattices[1].valuation == std::vector<long>{0, 1});
  CHECK(s11.lattices[2].valuation == std::vector<long>{1, 1});
  CHECK(s11.simples[0].dim == 1);
  CHECK(s11.simples[1].dim == 1);
  const auto sn = local_projectives_and_simples(local_order({3}));
  CHECK(sn.lattices.size() == 2);
  CHECK(sn.simples.size() == 1);
  CHECK(sn.simples[0].dim == 3);

  // Every composition with n <= 4.
  std::vector<std::vector<size_t>> comps;
  std::function<void(std::vector<size_t>, size_t)> gen = [&](std::vector<size_t> cur, size_t left) {
    if (left == 0) {
      comps.push_back(cur);
      return;
    }
    for (size_t p = 1; p <= left; ++p) {
      cur.push_back(p);
      gen(cur, left - p);
      cur.pop_back();
    }
  };
  for (size_t n = 1; n <= 4; ++n) gen({}, n);
  CHECK(comps.size() == 15);
  for (const auto& comp : comps) {
    CAPTURE(composition_string(comp));
    const LocalOrder h = local_order(comp);
    const auto s = local_projectives_and_simples(h);
    CHECK(s.periodic);
    CHECK(s.gldim == 1);
    // Oracle: the stable 0/1 valuation vectors are exactly the chain.
    const auto stable = [&](const std::vector<long>& v) {
      for (size_t r = 0; r < h.n; ++r)
        for (size_t c = 0; c < h.n; ++c) {
          size_t br = 0, bc = 0, acc = 0;
          for (size_t b = 0; b < comp.size(); ++b) {
            if (r >= acc && r < acc + comp[b]) br = b;
            if (c >= acc && c < acc + comp[b]) bc = b;
            acc += comp[b];
          }
          if (v[r] + (bc > br ? 1 : 0) < v[c]) return false;
        }
      return true;
    };
    size_t count = 0;
    for (size_t mask = 0; mask < (size_t(1) << h.n); ++mask) {
      std::vector<long> v(h.n);
      for (size_t c = 0; c < h.n; ++c) v[c] = (mask >> c) & 1;
      if (!stable(v)) continue;
      ++count;
      bool listed = false;
      for (const auto& l : s.lattices) listed = listed || l.valuation == v;
      CHECK(listed);
    }
    CHECK(count == comp.size() + 1);
    for (size_t i = 0; i < comp.size(); ++i) {
      const auto& u = s.simples[i];
      CHECK(u.simple);
      CHECK(u.projective_resolution);
      CHECK_FALSE(u.split);
      CHECK(u.pd == 1);
      CHECK(u.dim == comp[comp.size() - 1 - i]);
      // t L_i lies in L_{i+1}: the quotient is torsion, so it cannot split off.
      for (size_t c = 0; c < h.n; ++c) CHECK(s.lattices[i].valuation[c] + 1 >= s.lattices[i + 1].valuation[c]);
    }
  }
}

TEST_CASE("Morita canonical form") {
  CHECK(morita_canonical_form({1, 2, 1}) == std::vector<size_t>{1, 1, 2});
  CHECK(morita_canonical_form({4}) == std::vector<size_t>{4});
  CHECK(morita_canonical_form({2, 2}) == std::vector<size_t>{2, 2});
  std::mt19937 rng(3);
  std::uniform_int_distribution<size_t> part(1, 4), len(1, 6);
  for (int i = 0; i < 200; ++i) {
    std::vector<size_t> c(len(rng));
    for (auto& x : c) x = part(rng);
    const auto canon = morita_canonical_form(c);
    CHECK(morita_canonical_form(canon) == canon);
    auto rot = c;
    for (size_t k = 0; k < c.size(); ++k) {
      std::rotate(rot.begin(), rot.begin() + 1, rot.end());
      CHECK(morita_canonical_form(rot) == canon);
      CHECK(canon <= rot);
    }
  }
}

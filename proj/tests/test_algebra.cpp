#include "algebra/basic.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace ncm;
using namespace ncm::alg;

namespace {

size_t find_label(const Algebra& a, const std::string& l) {
  for (size_t i = 0; i < a.dim(); ++i)
    if (a.labels()[i] == l) return i;
  FAIL("missing label " << l);
  return 0;
}

Vec sum_of(const Algebra& a, std::initializer_list<const char*> labels) {
  Vec v(a.dim());
  for (const char* l : labels) v[find_label(a, l)] += 1;
  return v;
}

// Commutation system assembled directly from element products.
size_t center_dim_by_products(const Algebra& a) {
  const size_t n = a.dim();
  Mat sys(n * n, n);
  for (size_t k = 0; k < n; ++k)
    for (size_t i = 0; i < n; ++i) {
      const Vec d = a.multiply(a.basis_vector(k), a.basis_vector(i)) - a.multiply(a.basis_vector(i), a.basis_vector(k));
      for (size_t r = 0; r < n; ++r) sys(i * n + r, k) = d[r];
    }
  return n - la::rank(sys);
}

}  // namespace

TEST_CASE("structure constant constructor") {
  auto k = Algebra::from_structure_constants({"1"}, {{{1}}}, {1});
  CHECK(k->dim() == 1);
  CHECK(matrix_algebra(2)->dim() == 4);

  StructureTensor t = matrix_algebra(2)->tensor();
  t[1][2][0] = 2;  // E12*E21 = 2 E11
  try {
    Algebra::from_structure_constants(matrix_algebra(2)->labels(), t, matrix_algebra(2)->unit());
    FAIL("expected AssociativityViolation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::AssociativityViolation);
    CHECK(std::string(e.what()).find("indices") != std::string::npos);
  }
  try {
    Algebra::from_structure_constants({"1"}, {{{1}}}, {2});
    FAIL("expected UnitViolation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnitViolation);
  }
}

TEST_CASE("quiver algebras") {
  QuiverPresentation point;
  point.vertices = {"1"};
  CHECK(algebra_from_quiver(point).algebra->dim() == 1);

  auto kr = fx::kronecker();
  CHECK(kr->labels() == std::vector<std::string>{"e1", "e2", "a", "b"});

  auto lam = algebra_from_quiver(fx::lambda_pres());
  CHECK(lam.algebra->dim() == 9);
  CHECK(lam.algebra->labels() ==
        std::vector<std::string>{"e1", "e2", "e3", "a1", "a2", "b1", "b2", "b1.a2", "b2.a1"});
  CHECK(fx::kx2()->dim() == 2);

  for (const auto& q : {fx::lambda_pres(), fx::kronecker_pres(), fx::kx2_pres(), fx::a2_pres()})
    CHECK(algebra_from_quiver(q).algebra->dim() == oracle::path_algebra_dim(q, 6));

  QuiverPresentation loop = fx::quiver(1, {"x:1:1"});
  CHECK_THROWS_AS(algebra_from_quiver(loop, 6), Error);
}

TEST_CASE("quiver algebra with a commutativity relation") {
  // Square 1->2->4, 1->3->4 with c.a = d.b.
  auto q = fx::quiver(4, {"a:1:2", "b:1:3", "c:2:4", "d:3:4"}, {{{1, "c.a"}, {-1, "d.b"}}});
  auto a = algebra_from_quiver(q);
  CHECK(a.algebra->dim() == 9);
  CHECK(a.algebra->dim() == oracle::path_algebra_dim(q, 4));
}

TEST_CASE("multiplication") {
  auto lam = fx::lambda();
  AlgebraElement one = unit_element(lam);
  AlgebraElement x{lam, sum_of(*lam, {"a1", "b2"})};
  CHECK(multiply(one, x).coords == x.coords);
  CHECK(la::is_zero(lam->multiply(sum_of(*lam, {"e1"}), sum_of(*lam, {"e2"}))));
  CHECK(la::is_zero(lam->multiply(sum_of(*lam, {"b1"}), sum_of(*lam, {"a1"}))));
  CHECK(lam->multiply(sum_of(*lam, {"b1"}), sum_of(*lam, {"a2"})) == sum_of(*lam, {"b1.a2"}));
  AlgebraElement y{fx::kronecker(), fx::kronecker()->unit()};
  CHECK_THROWS_AS(multiply(one, y), Error);
}

TEST_CASE("radical") {
  CHECK(radical(diagonal_algebra(3)).cols() == 0);
  auto kx = fx::kx2();
  Mat r = radical(kx);
  REQUIRE(r.cols() == 1);
  CHECK(sgn(r(0, 0)) == 0);

  auto lam = fx::lambda();
  Mat rl = radical(lam);
  CHECK(rl.cols() == 6);
  Mat arrows(9, 6);
  for (size_t j = 0; j < 6; ++j) arrows(3 + j, j) = 1;
  CHECK(la::rank(rl.hstack(arrows)) == 6);
  CHECK(nilpotency_index(*lam, rl) == 3);

  for (auto a : {fx::lambda(), fx::kx2(), fx::kronecker(), matrix_algebra(2), fx::a2()}) {
    Mat ra = radical(a);
    CHECK(is_two_sided_ideal(*a, ra));
    CHECK(nilpotency_index(*a, ra) <= a->dim() + 1);
    auto q = quotient_by_ideal(a, ra);
    CHECK(radical(q.algebra).cols() == 0);
  }
}

TEST_CASE("center") {
  CHECK(center(*fx::kx2()).cols() == 2);
  Mat z = center(*matrix_algebra(2));
  REQUIRE(z.cols() == 1);
  CHECK(la::rank(z.hstack(Mat::from_columns({matrix_algebra(2)->unit()}, 4))) == 1);
  CHECK(center(*fx::lambda()).cols() == center_dim_by_products(*fx::lambda()));
  CHECK(center(*fx::lambda()).cols() == 1);
  CHECK(center(*fx::kronecker()).cols() == center_dim_by_products(*fx::kronecker()));
}

TEST_CASE("primitive idempotents") {
  auto d = diagonal_algebra(3);
  Idempotents di = primitive_idempotents(d);
  REQUIRE(di.elements.size() == 3);
  for (size_t i = 0; i < 3; ++i) CHECK(di.elements[i] == d->basis_vector(i));

  auto lam = fx::lambda();
  Idempotents li = primitive_idempotents(lam);
  CHECK(li.labels == std::vector<std::string>{"e1", "e2", "e3"});

  CHECK_THROWS_AS(primitive_idempotents(matrix_algebra(2)), Error);
  try {
    primitive_idempotents(matrix_algebra(2));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonBasicTop);
  }

  // A non-standard basis of k x k: {1, f} with f idempotent.
  auto kk = Algebra::from_structure_constants({"1", "f"}, {{{1, 0}, {0, 1}}, {{0, 1}, {0, 1}}}, {1, 0});
  Idempotents ki = primitive_idempotents(kk);
  REQUIRE(ki.elements.size() == 2);

  for (auto a : {fx::lambda(), fx::kx2(), fx::kronecker(), fx::a2(), kk, diagonal_algebra(4)}) {
    Idempotents ids = primitive_idempotents(a);
    Vec sum(a->dim());
    for (size_t i = 0; i < ids.elements.size(); ++i) {
      sum = sum + ids.elements[i];
      for (size_t j = 0; j < ids.elements.size(); ++j) {
        Vec p = a->multiply(ids.elements[i], ids.elements[j]);
        if (i == j)
          CHECK(p == ids.elements[i]);
        else
          CHECK(la::is_zero(p));
      }
    }
    CHECK(sum == a->unit());
    auto q = quotient_by_ideal(a, radical(a));
    for (const Vec& e : ids.elements) {
      const Vec eb = q.map.projection.apply(e);
      std::vector<Vec> corner;
      for (size_t j = 0; j < q.algebra->dim(); ++j)
        corner.push_back(q.algebra->multiply(q.algebra->multiply(eb, q.algebra->basis_vector(j)), eb));
      CHECK(la::rank(Mat::from_columns(corner, q.algebra->dim())) == 1);
    }
  }
}

TEST_CASE("regular and simple modules") {
  auto kb = make_basic(fx::k());
  CHECK(regular_module(fx::k()).dim == 1);
  CHECK(kb->simples.size() == 1);

  auto lb = make_basic(fx::lambda());
  REQUIRE(lb->simples.size() == 3);
  for (const auto& s : lb->simples) CHECK(s.dim == 1);
  CHECK(lb->projectives[0].dim == 5);
  CHECK(lb->projectives[1].dim == 3);
  CHECK(lb->projectives[2].dim == 1);

  auto xb = make_basic(fx::kx2());
  REQUIRE(xb->simples.size() == 1);
  CHECK(xb->simples[0].dim == 1);

  for (auto m : {regular_module(fx::lambda()), lb->simples[0], lb->projectives[1], lb->injective(0)})
    CHECK_FALSE(module_violation(m));
}

TEST_CASE("hom spaces") {
  auto lb = make_basic(fx::lambda());
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) CHECK(hom_space(lb->simples[i], lb->simples[j]).size() == (i == j ? 1u : 0u));
  const Representation reg = regular_module(fx::lambda());
  CHECK(hom_space(reg, reg).size() == 9);
  for (const auto& m : {lb->simples[2], lb->projectives[0], lb->injective(1), reg})
    CHECK(hom_space(reg, m).size() == m.dim);
  // Hom(Ae_i, Ae_j) = e_i A e_j.
  for (const Mat& f : hom_space(lb->projectives[1], lb->projectives[0]))
    CHECK(is_homomorphism(lb->projectives[1], lb->projectives[0], f));
  CHECK(hom_space(lb->projectives[1], lb->projectives[0]).size() == 2);
  CHECK(hom_space(lb->projectives[0], lb->projectives[1]).empty());
  CHECK(hom_space(lb->projectives[2], lb->projectives[0]).size() == 2);
  CHECK_THROWS_AS(hom_space(reg, regular_module(fx::kronecker())), Error);
}

TEST_CASE("isomorphism search") {
  auto lb = make_basic(fx::lambda());
  auto sum1 = direct_sum(lb->simples[0], lb->projectives[1]);
  auto sum2 = direct_sum(lb->projectives[1], lb->simples[0]);
  auto f = find_isomorphism(sum1, sum2);
  REQUIRE(f);
  CHECK(is_homomorphism(sum1, sum2, *f));
  CHECK_FALSE(find_isomorphism(lb->simples[0], lb->simples[1]));
}

TEST_CASE("opposite algebra") {
  auto kx = fx::kx2();
  CHECK(opposite(kx)->tensor() == kx->tensor());
  auto lam = fx::lambda();
  CHECK(opposite(opposite(lam))->same_structure(*lam));
  CHECK(opposite(matrix_algebra(2))->dim() == 4);
}

TEST_CASE("dual modules over the opposite algebra") {
  auto lam = fx::lambda();
  auto op = opposite(lam);
  auto lb = make_basic(lam);
  for (const auto& m : lb->projectives) CHECK_FALSE(module_violation(dual_module(m, op)));
}

#include "exactla/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace ncm::la {

std::string to_string(const Scalar& s) { return s.get_str(); }

namespace {

bool is_integer_literal(std::string_view t) {
  if (t.empty()) return false;
  size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
  if (i == t.size()) return false;
  for (; i < t.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
  return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!is_integer_literal(num) || (slash != std::string_view::npos && !is_integer_literal(den)) ||
      (!den.empty() && (den[0] == '-' || den[0] == '+')))
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  std::string n(num[0] == '+' ? num.substr(1) : num);
  mpz_class p(n, 10);
  mpz_class q = 1;
  if (!den.empty()) {
    q = mpz_class(std::string(den), 10);
    if (q == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  Scalar r(p, q);
  r.canonicalize();
  return r;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

Vec operator+(const Vec& a, const Vec& b) {
  Vec r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  Vec r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec operator*(const Scalar& s, const Vec& v) {
  Vec r(v);
  for (auto& x : r) x *= s;
  return r;
}

void axpy(Vec& dst, const Scalar& factor, const Vec& src) {
  if (sgn(factor) == 0) return;
  Scalar tmp;
  for (size_t i = 0; i < dst.size(); ++i) {
    if (sgn(src[i]) == 0) continue;
    tmp = factor * src[i];
    dst[i] += tmp;
  }
}

Vec unit_vector(size_t n, size_t i) {
  Vec v(n);
  v[i] = 1;
  return v;
}

}  // namespace ncm::la

#include "hcurve/rational.hpp"

#include <algorithm>

#include "common/error.hpp"

namespace ncm::hcurve {

namespace {

void trim(Vec& c) {
  while (!c.empty() && la::is_zero(c.back())) c.pop_back();
}

// Multiplicity of (t - x) in p, p nonzero.
long multiplicity(Poly p, const Scalar& x) {
  long m = 0;
  const Poly lin = Poly::linear(x);
  while (!p.is_zero() && p.eval(x) == 0) {
    Poly q, r;
    divmod(p, lin, q, r);
    p = q;
    ++m;
  }
  return m;
}

// prod over finite points of (t - xi)^{D(xi)} split into numerator and denominator.
void finite_factor(const Divisor& d, Poly& pos, Poly& neg) {
  pos = Poly::constant(1);
  neg = Poly::constant(1);
  for (const auto& [p, m] : d.coefficients()) {
    if (p.infinite) continue;
    if (m > 0) pos = pos * power(Poly::linear(p.xi), size_t(m));
    else neg = neg * power(Poly::linear(p.xi), size_t(-m));
  }
}

std::string scalar_text(const Scalar& s, bool parens) {
  std::string t = la::to_string(s);
  if (parens && t.find('/') != std::string::npos) return "(" + t + ")";
  return t;
}

}  // namespace

Poly::Poly(Vec coeffs) : c(std::move(coeffs)) { trim(c); }

Poly Poly::constant(const Scalar& s) { return Poly(Vec{s}); }
Poly Poly::linear(const Scalar& root) { return Poly(Vec{-root, 1}); }
Poly Poly::monomial(size_t k) {
  Vec v(k + 1);
  v[k] = 1;
  return Poly(std::move(v));
}

Scalar Poly::eval(const Scalar& x) const {
  Scalar acc = 0;
  for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

Poly operator+(const Poly& a, const Poly& b) {
  Vec v(std::max(a.c.size(), b.c.size()));
  for (size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
  return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) { return a + Scalar(-1) * b; }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Vec v(a.c.size() + b.c.size() - 1);
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) v[i + j] += a.c[i] * b.c[j];
  return Poly(std::move(v));
}

Poly operator*(const Scalar& s, const Poly& a) {
  Vec v = a.c;
  for (auto& x : v) x *= s;
  return Poly(std::move(v));
}

void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  if (b.is_zero()) throw Error(ErrorKind::InvalidInput, "polynomial division by zero");
  Vec rem = a.c;
  Vec quo(a.c.size() >= b.c.size() ? a.c.size() - b.c.size() + 1 : 0);
  for (size_t k = quo.size(); k-- > 0;) {
    const Scalar f = rem[k + b.c.size() - 1] / b.lead();
    quo[k] = f;
    for (size_t j = 0; j < b.c.size(); ++j) rem[k + j] -= f * b.c[j];
  }
  q = Poly(std::move(quo));
  r = Poly(std::move(rem));
}

Poly monic_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return Scalar(1 / a.lead()) * a;
}

Poly power(const Poly& p, size_t k) {
  Poly out = Poly::constant(1);
  for (size_t i = 0; i < k; ++i) out = out * p;
  return out;
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (size_t k = p.c.size(); k-- > 0;) {
    const Scalar& a = p.c[k];
    if (la::is_zero(a)) continue;
    const bool neg = sgn(a) < 0;
    const Scalar mag = neg ? Scalar(-a) : a;
    if (s.empty()) s += neg ? "-" : "";
    else s += neg ? " - " : " + ";
    const std::string mono = k == 0 ? "" : (k == 1 ? "t" : "t^" + std::to_string(k));
    if (mono.empty()) s += la::to_string(mag);
    else if (mag == 1) s += mono;
    else s += scalar_text(mag, false) + "*" + mono;
  }
  return s;
}

bool Point::operator<(const Point& o) const {
  if (infinite != o.infinite) return !infinite;
  return !infinite && xi < o.xi;
}

std::string to_string(const Point& p) { return p.infinite ? "inf" : la::to_string(p.xi); }

RationalFunction::RationalFunction(Poly num, Poly den) {
  if (den.is_zero()) throw Error(ErrorKind::InvalidInput, "rational function with zero denominator");
  if (num.is_zero()) {
    den_ = Poly::constant(1);
    return;
  }
  const Poly g = monic_gcd(num, den);
  Poly q, r;
  divmod(num, g, num_, r);
  divmod(den, g, q, r);
  const Scalar lead = q.lead();
  den_ = Scalar(1 / lead) * q;
  num_ = Scalar(1 / lead) * num_;
}

long RationalFunction::order_at(const Point& p) const {
  if (p.infinite) return den_.degree() - num_.degree();
  return multiplicity(num_, p.xi) - multiplicity(den_, p.xi);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return {a.num() * b.den() + b.num() * a.den(), a.den() * b.den()};
}
RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return {a.num() * b.den() - b.num() * a.den(), a.den() * b.den()};
}
RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return {a.num() * b.num(), a.den() * b.den()};
}
RationalFunction operator*(const Scalar& s, const RationalFunction& a) { return {s * a.num(), a.den()}; }

RationalFunction inverse(const RationalFunction& a) {
  if (a.is_zero()) throw Error(ErrorKind::InvalidInput, "inverse of the zero function");
  return {a.den(), a.num()};
}

std::string to_string(const RationalFunction& f) {
  if (f.den().degree() == 0) return to_string(f.num());
  std::string n = to_string(f.num());
  size_t terms = 0;
  for (const Scalar& x : f.num().c) terms += la::is_zero(x) ? 0 : 1;
  if (terms > 1) n = "(" + n + ")";
  return n + "/(" + to_string(f.den()) + ")";
}

Divisor Divisor::point(const Point& p, long m) {
  Divisor d;
  d.add(p, m);
  return d;
}

long Divisor::degree() const {
  long s = 0;
  for (const auto& [p, m] : coeffs_) s += m;
  return s;
}

long Divisor::at(const Point& p) const {
  auto it = coeffs_.find(p);
  return it == coeffs_.end() ? 0 : it->second;
}

void Divisor::add(const Point& p, long m) {
  long& c = coeffs_[p];
  c += m;
  if (c == 0) coeffs_.erase(p);
}

Divisor operator+(const Divisor& a, const Divisor& b) {
  Divisor d = a;
  for (const auto& [p, m] : b.coefficients()) d.add(p, m);
  return d;
}

Divisor operator-(const Divisor& a, const Divisor& b) {
  Divisor d = a;
  for (const auto& [p, m] : b.coefficients()) d.add(p, -m);
  return d;
}

std::string to_string(const Divisor& d) {
  if (d.coefficients().empty()) return "0";
  std::string s;
  for (const auto& [p, m] : d.coefficients()) {
    const long mag = m < 0 ? -m : m;
    if (s.empty()) s += m < 0 ? "-" : "";
    else s += m < 0 ? " - " : " + ";
    if (mag != 1) s += std::to_string(mag) + "*";
    s += "[" + to_string(p) + "]";
  }
  return s;
}

bool in_sections(const RationalFunction& f, const Divisor& d) {
  if (f.is_zero()) return true;
  Poly pos, neg;
  finite_factor(d, pos, neg);
  // g = f * prod (t - xi)^{D(xi)} must be a polynomial of degree <= deg D.
  const RationalFunction g = f * RationalFunction(pos, neg);
  return g.den().degree() == 0 && g.num().degree() <= d.degree();
}

std::vector<RationalFunction> sections_basis(const Divisor& d) {
  std::vector<RationalFunction> out;
  const long deg = d.degree();
  if (deg < 0) return out;
  bool effective = true;
  for (const auto& [p, m] : d.coefficients()) effective = effective && m > 0;
  if (effective) {
    const long top = d.at(Point::inf());
    for (long k = 0; k <= top; ++k) out.push_back(RationalFunction::polynomial(Poly::monomial(size_t(k))));
    for (const auto& [p, m] : d.coefficients()) {
      if (p.infinite) continue;
      for (long e = 1; e <= m; ++e) out.emplace_back(Poly::constant(1), power(Poly::linear(p.xi), size_t(e)));
    }
    return out;
  }
  Poly pos, neg;
  finite_factor(d, pos, neg);
  for (long k = 0; k <= deg; ++k) out.emplace_back(Poly::monomial(size_t(k)) * neg, pos);
  return out;
}

std::optional<Vec> section_coordinates(const std::vector<RationalFunction>& basis, const Divisor& d,
                                       const RationalFunction& f) {
  if (!in_sections(f, d)) return std::nullopt;
  if (basis.empty()) return Vec{};
  Poly pos, neg;
  finite_factor(d, pos, neg);
  const RationalFunction z(pos, neg);
  const size_t n = size_t(d.degree() + 1);
  Mat a(n, basis.size());
  for (size_t j = 0; j < basis.size(); ++j) {
    const RationalFunction g = basis[j] * z;
    for (size_t i = 0; i < n; ++i) a(i, j) = g.num().coeff(i);
  }
  const RationalFunction g = f * z;
  Vec rhs(n);
  for (size_t i = 0; i < n; ++i) rhs[i] = g.num().coeff(i);
  return la::solve(a, rhs);
}

}  // namespace ncm::hcurve

#pragma once

#include <map>
#include <string>
#include <vector>

#include "exactla/mat.hpp"

namespace ncm::hcurve {

using la::Mat;
using la::Scalar;
using la::Vec;
using la::operator+;
using la::operator-;
using la::operator*;

// Polynomial in t, coefficients in ascending degree, no trailing zeros.
struct Poly {
  Vec c;

  Poly() = default;
  explicit Poly(Vec coeffs);
  static Poly constant(const Scalar& s);
  static Poly linear(const Scalar& root);  // t - root
  static Poly monomial(size_t k);

  long degree() const { return static_cast<long>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  const Scalar& lead() const { return c.back(); }
  Scalar coeff(size_t k) const { return k < c.size() ? c[k] : Scalar(0); }
  Scalar eval(const Scalar& x) const;
  bool operator==(const Poly&) const = default;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(const Scalar& s, const Poly& a);
// a = q b + r with deg r < deg b.
void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
Poly monic_gcd(Poly a, Poly b);
Poly power(const Poly& p, size_t k);
std::string to_string(const Poly& p);

// A point of P^1 over Q.
struct Point {
  bool infinite = false;
  Scalar xi;

  static Point at(const Scalar& x) { return Point{false, x}; }
  static Point inf() { return Point{true, 0}; }
  bool operator==(const Point& o) const { return infinite == o.infinite && (infinite || xi == o.xi); }
  bool operator<(const Point& o) const;
};
std::string to_string(const Point& p);

// Element of Q(t), reduced with monic denominator.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Poly::constant(1)) {}
  RationalFunction(Poly num, Poly den);
  static RationalFunction constant(const Scalar& s) { return {Poly::constant(s), Poly::constant(1)}; }
  static RationalFunction polynomial(Poly p) { return {std::move(p), Poly::constant(1)}; }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  // Zero or pole order; the zero function has no order (callers check is_zero).
  long order_at(const Point& p) const;
  bool operator==(const RationalFunction&) const = default;

 private:
  Poly num_, den_;
};

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
RationalFunction operator*(const Scalar& s, const RationalFunction& a);
RationalFunction inverse(const RationalFunction& a);
std::string to_string(const RationalFunction& f);

// Finite formal sum of points. Zero coefficients are never stored.
class Divisor {
 public:
  Divisor() = default;
  static Divisor point(const Point& p, long m = 1);

  long degree() const;
  long at(const Point& p) const;
  void add(const Point& p, long m);
  const std::map<Point, long>& coefficients() const { return coeffs_; }
  bool operator==(const Divisor&) const = default;

 private:
  std::map<Point, long> coeffs_;
};

Divisor operator+(const Divisor& a, const Divisor& b);
Divisor operator-(const Divisor& a, const Divisor& b);
std::string to_string(const Divisor& d);

// f lies in the global sections of O(D): div f + D >= 0.
bool in_sections(const RationalFunction& f, const Divisor& d);

// Basis of the global sections of O(D). When D is effective: 1, t, ...,
// t^{D(inf)}, then 1/(t-xi)^p by ascending xi and p. Otherwise
// t^k / prod (t-xi)^{D(xi)} for k = 0..deg D.
std::vector<RationalFunction> sections_basis(const Divisor& d);

// Coordinates of f in a basis of the sections of O(D); nullopt when f is
// not in their span.
std::optional<Vec> section_coordinates(const std::vector<RationalFunction>& basis, const Divisor& d,
                                       const RationalFunction& f);

}  // namespace ncm::hcurve

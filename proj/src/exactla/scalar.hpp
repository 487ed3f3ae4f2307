#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace ncm::la {

// Exact rational. mpq_class keeps numerator/denominator coprime with a
// positive denominator after every arithmetic operation.
using Scalar = mpq_class;
using Vec = std::vector<Scalar>;

std::string to_string(const Scalar& s);

// Accepts "p", "-p", "p/q"; throws std::invalid_argument otherwise.
Scalar parse_scalar(std::string_view text);

inline bool is_zero(const Scalar& s) { return sgn(s) == 0; }

bool is_zero(const Vec& v);

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Scalar& s, const Vec& v);

// Adds factor * src to dst in place.
void axpy(Vec& dst, const Scalar& factor, const Vec& src);

Vec unit_vector(size_t n, size_t i);

}  // namespace ncm::la

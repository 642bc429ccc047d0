#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace liecone {

// Exact rational number; GMP keeps it in lowest terms with a positive denominator.
using Scalar = mpq_class;
using Vec = std::vector<Scalar>;

// Accepts "n", "-n", "n/d" (d > 0 after sign handling). Throws ParseError otherwise.
Scalar parse_scalar(std::string_view text);

// "n" for integers, "n/d" otherwise.
std::string to_string(const Scalar& value);

// base^exponent; a negative exponent requires base != 0.
Scalar power(const Scalar& base, long exponent);

bool is_integer(const Scalar& value);

// Least common multiple of the denominators.
mpz_class common_denominator(const Vec& values);

Vec unit_vector(int dim, int index);  // index is 1-based
Vec zero_vector(int dim);
bool is_zero(const Vec& v);

}  // namespace liecone

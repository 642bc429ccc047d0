#include "liecone/scalar.hpp"

#include <cctype>

#include "liecone/errors.hpp"

namespace liecone {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  std::string_view s = trim(text);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  std::string_view num = s;
  std::string_view den = "1";
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("not an exact rational: '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  Scalar q(n, d);
  q.canonicalize();
  return negative ? Scalar(-q) : q;
}

std::string to_string(const Scalar& value) { return value.get_str(10); }

Scalar power(const Scalar& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw Error("zero to a negative power");
    return Scalar(1) / power(base, -exponent);
  }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  Scalar r(num, den);
  r.canonicalize();
  return r;
}

bool is_integer(const Scalar& value) { return value.get_den() == 1; }

mpz_class common_denominator(const Vec& values) {
  mpz_class l = 1;
  for (const auto& v : values) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  }
  return l;
}

Vec unit_vector(int dim, int index) {
  Vec v(dim, Scalar(0));
  v.at(index - 1) = 1;
  return v;
}

Vec zero_vector(int dim) { return Vec(dim, Scalar(0)); }

bool is_zero(const Vec& v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

}  // namespace liecone

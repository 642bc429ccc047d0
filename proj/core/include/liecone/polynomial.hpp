#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "liecone/scalar.hpp"

namespace liecone {

// Univariate polynomial with rational coefficients, stored lowest degree first.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(Vec coefficients);

  int degree() const;  // -1 for the zero polynomial
  bool is_zero() const { return coeffs_.empty(); }
  const Vec& coefficients() const { return coeffs_; }
  Scalar coefficient(int i) const;
  Scalar leading() const;

  Scalar operator()(const Scalar& x) const;
  UPoly derivative() const;
  UPoly monic() const;

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.coeffs_ == b.coeffs_; }

  // Euclidean division; throws on division by zero.
  static void divmod(const UPoly& a, const UPoly& b, UPoly& quotient, UPoly& remainder);
  static UPoly gcd(UPoly a, UPoly b);

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  Vec coeffs_;
};

// Distinct rational roots, ascending.
Vec rational_roots(const UPoly& p);

// Number of distinct real roots, counted with a Sturm sequence.
int count_real_roots(const UPoly& p);

// Multivariate polynomial with rational coefficients in named variables.
class Polynomial {
 public:
  using Monomial = std::map<std::string, int>;
  using Bindings = std::map<std::string, Scalar>;

  Polynomial() = default;
  Polynomial(const Scalar& constant);  // NOLINT(google-explicit-constructor)
  Polynomial(long constant) : Polynomial(Scalar(constant)) {}  // NOLINT
  static Polynomial variable(const std::string& name);

  // Grammar: sums/differences of products/quotients of powers; division only by
  // nonzero constants; e.g. "-(ab(1-b)-2a-b)" must be written "-(a*b*(1-b)-2*a-b)".
  static Polynomial parse(std::string_view text);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Scalar constant_value() const;  // throws unless is_constant()
  std::set<std::string> variables() const;
  const std::map<Monomial, Scalar>& terms() const { return terms_; }

  Scalar evaluate(const Bindings& bindings) const;  // throws MissingParameter
  Polynomial substitute(const Bindings& bindings) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }
  Polynomial pow(int exponent) const;

  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Scalar& c);
  std::map<Monomial, Scalar> terms_;
};

}  // namespace liecone

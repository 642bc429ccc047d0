#include "liecone/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "liecone/errors.hpp"

namespace liecone {

// ---------------------------------------------------------------- UPoly

UPoly::UPoly(Vec coefficients) : coeffs_(std::move(coefficients)) { trim(); }

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

int UPoly::degree() const { return static_cast<int>(coeffs_.size()) - 1; }

Scalar UPoly::coefficient(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[i];
}

Scalar UPoly::leading() const { return coeffs_.empty() ? Scalar(0) : coeffs_.back(); }

Scalar UPoly::operator()(const Scalar& x) const {
  Scalar acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly UPoly::derivative() const {
  Vec d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * static_cast<long>(i));
  return UPoly(d);
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  Vec c = coeffs_;
  Scalar lc = leading();
  for (auto& x : c) x /= lc;
  return UPoly(c);
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  Vec c(std::max(a.coeffs_.size(), b.coeffs_.size()), Scalar(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return UPoly(c);
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  Vec c(std::max(a.coeffs_.size(), b.coeffs_.size()), Scalar(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
  return UPoly(c);
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  Vec c(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UPoly(c);
}

void UPoly::divmod(const UPoly& a, const UPoly& b, UPoly& quotient, UPoly& remainder) {
  if (b.is_zero()) throw Error("polynomial division by zero");
  Vec r = a.coeffs_;
  int db = b.degree();
  Vec q(std::max(0, a.degree() - db + 1), Scalar(0));
  for (int i = a.degree(); i >= db; --i) {
    Scalar f = r[i] / b.leading();
    if (f == 0) continue;
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b.coeffs_[j];
  }
  quotient = UPoly(q);
  remainder = UPoly(r);
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::string UPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Scalar& c = coeffs_[i];
    if (c == 0) continue;
    Scalar mag = abs(c);
    os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    if (mag != 1 || i == 0) os << liecone::to_string(mag);
    if (i > 0) os << var;
    if (i > 1) os << "^" << i;
    first = false;
  }
  return os.str();
}

namespace {

std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> out;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  return out;
}

int sign_of(const Scalar& s) { return sgn(s); }

}  // namespace

Vec rational_roots(const UPoly& p) {
  if (p.is_zero()) throw Error("rational_roots of the zero polynomial");
  Vec roots;
  Vec c = p.coefficients();
  std::size_t shift = 0;
  while (shift < c.size() && c[shift] == 0) ++shift;
  if (shift > 0) roots.push_back(0);
  c.erase(c.begin(), c.begin() + static_cast<long>(shift));
  if (c.size() > 1) {
    mpz_class den = common_denominator(c);
    std::vector<mpz_class> ints;
    for (auto& x : c) {
      Scalar y = x * den;
      ints.push_back(y.get_num());
    }
    UPoly reduced(c);
    for (const auto& num : divisors(ints.front())) {
      for (const auto& dd : divisors(ints.back())) {
        for (int s : {1, -1}) {
          Scalar candidate(s * num, dd);
          candidate.canonicalize();
          if (reduced(candidate) == 0 &&
              std::find(roots.begin(), roots.end(), candidate) == roots.end()) {
            roots.push_back(candidate);
          }
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

int count_real_roots(const UPoly& p) {
  if (p.is_zero()) throw Error("count_real_roots of the zero polynomial");
  if (p.degree() == 0) return 0;
  std::vector<UPoly> seq{p, p.derivative()};
  while (!seq.back().is_zero()) {
    UPoly q, r;
    UPoly::divmod(seq[seq.size() - 2], seq.back(), q, r);
    if (r.is_zero()) break;
    seq.push_back(UPoly() - r);
  }
  auto variations = [&](bool at_plus_infinity) {
    int count = 0;
    int last = 0;
    for (const auto& s : seq) {
      if (s.is_zero()) continue;
      int sg = sign_of(s.leading());
      if (!at_plus_infinity && s.degree() % 2 == 1) sg = -sg;
      if (last != 0 && sg != last) ++count;
      last = sg;
    }
    return count;
  };
  return variations(false) - variations(true);
}

// ------------------------------------------------------------ Polynomial

Polynomial::Polynomial(const Scalar& constant) {
  if (constant != 0) terms_[{}] = constant;
}

Polynomial Polynomial::variable(const std::string& name) {
  Polynomial p;
  p.terms_[{{name, 1}}] = 1;
  return p;
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Scalar Polynomial::constant_value() const {
  if (!is_constant()) throw Error("polynomial '" + to_string() + "' is not constant");
  return terms_.empty() ? Scalar(0) : terms_.begin()->second;
}

std::set<std::string> Polynomial::variables() const {
  std::set<std::string> vars;
  for (const auto& [m, c] : terms_) {
    for (const auto& [v, e] : m) vars.insert(v);
  }
  return vars;
}

Scalar Polynomial::evaluate(const Bindings& bindings) const {
  Scalar total = 0;
  for (const auto& [m, c] : terms_) {
    Scalar term = c;
    for (const auto& [v, e] : m) {
      auto it = bindings.find(v);
      if (it == bindings.end()) throw MissingParameter("no value bound for parameter '" + v + "'");
      term *= power(it->second, e);
    }
    total += term;
  }
  return total;
}

Polynomial Polynomial::substitute(const Bindings& bindings) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    Scalar coeff = c;
    Monomial rest;
    for (const auto& [v, e] : m) {
      auto it = bindings.find(v);
      if (it == bindings.end()) {
        rest[v] = e;
      } else {
        coeff *= power(it->second, e);
      }
    }
    out.add_term(rest, coeff);
  }
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out;
  for (const auto& [m, c] : terms_) out.terms_[m] = -c;
  return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  Polynomial out = a;
  for (const auto& [m, c] : b.terms_) out.add_term(m, c);
  return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Polynomial::Monomial m = ma;
      for (const auto& [v, e] : mb) m[v] += e;
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::pow(int exponent) const {
  if (exponent < 0) throw Error("negative exponent in polynomial power");
  Polynomial out(Scalar(1));
  for (int i = 0; i < exponent; ++i) out = out * *this;
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest total degree first, then lexicographic on the monomial.
  std::vector<std::pair<Monomial, Scalar>> ordered(terms_.begin(), terms_.end());
  auto degree = [](const Monomial& m) {
    int d = 0;
    for (const auto& [v, e] : m) d += e;
    return d;
  };
  std::stable_sort(ordered.begin(), ordered.end(), [&](const auto& x, const auto& y) {
    return degree(x.first) > degree(y.first);
  });
  for (const auto& [m, c] : ordered) {
    Scalar mag = abs(c);
    os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    bool wrote = false;
    if (mag != 1 || m.empty()) {
      os << liecone::to_string(mag);
      wrote = true;
    }
    for (const auto& [v, e] : m) {
      if (wrote) os << "*";
      os << v;
      if (e > 1) os << "^" << e;
      wrote = true;
    }
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------- parser

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("expression '" + std::string(text_) + "': " + what + " at column " +
                     std::to_string(pos_ + 1));
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      if (accept('+')) {
        acc = acc + term();
      } else if (accept('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    for (;;) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        Polynomial d = unary();
        if (!d.is_constant() || d.is_zero()) fail("division only by nonzero constants");
        acc = acc * Polynomial(Scalar(1) / d.constant_value());
      } else {
        return acc;
      }
    }
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (accept('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected integer exponent");
      return base.pow(std::stoi(std::string(text_.substr(start, pos_ - start))));
    }
    return base;
  }

  Polynomial atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Polynomial(Scalar(mpz_class(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      return Polynomial::variable(std::string(text_.substr(start, pos_ - start)));
    }
    fail("unexpected character");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text) { return Parser(text).parse(); }

}  // namespace liecone

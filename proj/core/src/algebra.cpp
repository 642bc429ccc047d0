#include "liecone/algebra.hpp"

#include "liecone/errors.hpp"

namespace liecone {

// ---------------------------------------------------- StructureConstants

StructureConstants::StructureConstants(int dim) : dim_(dim) {
  if (dim < 0) throw DimensionMismatch("negative algebra dimension");
}

void StructureConstants::check(int a, int b, int c) const {
  if (a < 1 || a > dim_ || b < 1 || b > dim_ || c < 1 || c > dim_) {
    throw IndexOutOfRange("structure constant index out of range 1.." + std::to_string(dim_));
  }
}

void StructureConstants::set(int a, int b, int c, const Scalar& value) {
  check(a, b, c);
  if (b == c) {
    if (value != 0) throw Error("C^a_{bb} must vanish");
    return;
  }
  Key key = b < c ? Key{a, b, c} : Key{a, c, b};
  Scalar v = b < c ? value : Scalar(-value);
  if (v == 0) {
    entries_.erase(key);
  } else {
    entries_[key] = v;
  }
}

void StructureConstants::add(int a, int b, int c, const Scalar& value) {
  set(a, b, c, get(a, b, c) + value);
}

Scalar StructureConstants::get(int a, int b, int c) const {
  check(a, b, c);
  if (b == c) return 0;
  Key key = b < c ? Key{a, b, c} : Key{a, c, b};
  auto it = entries_.find(key);
  if (it == entries_.end()) return 0;
  return b < c ? it->second : Scalar(-it->second);
}

StructureConstants StructureConstants::scaled(const Scalar& factor) const {
  StructureConstants out(dim_);
  if (factor == 0) return out;
  for (const auto& [k, v] : entries_) out.entries_.emplace(k, v * factor);
  return out;
}

Tensor StructureConstants::as_tensor() const {
  Tensor t(dim_, {Slot::Upper, Slot::Lower, Slot::Lower});
  for (const auto& [k, v] : entries_) {
    t.set({k[0], k[1], k[2]}, v);
    t.set({k[0], k[2], k[1]}, -v);
  }
  return t;
}

// -------------------------------------------------------------- Subspace

Subspace Subspace::span(int dim, const std::vector<Vec>& vectors) {
  Subspace s;
  s.dim_ = dim;
  std::vector<Vec> rows;
  for (const auto& v : vectors) {
    if (static_cast<int>(v.size()) != dim) throw DimensionMismatch("spanning vector has wrong length");
    if (!is_zero(v)) rows.push_back(v);
  }
  s.basis_ = row_reduce(rows);
  return s;
}

Subspace Subspace::coordinates(int dim, const std::vector<int>& indices) {
  std::vector<Vec> vs;
  for (int i : indices) vs.push_back(unit_vector(dim, i));
  return span(dim, vs);
}

Subspace Subspace::full(int dim) {
  std::vector<int> all;
  for (int i = 1; i <= dim; ++i) all.push_back(i);
  return coordinates(dim, all);
}

Subspace Subspace::zero(int dim) { return span(dim, {}); }

bool Subspace::contains(const Vec& v) const {
  if (static_cast<int>(v.size()) != dim_) throw DimensionMismatch("vector has wrong length");
  if (is_zero(v)) return true;
  std::vector<Vec> rows = basis_;
  rows.push_back(v);
  return static_cast<int>(row_reduce(rows).size()) == dim();
}

bool Subspace::contains(const Subspace& other) const {
  for (const auto& v : other.basis_) {
    if (!contains(v)) return false;
  }
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  std::vector<Vec> rows = basis_;
  rows.insert(rows.end(), other.basis_.begin(), other.basis_.end());
  return span(dim_, rows);
}

// ------------------------------------------------------------ operations

Vec bracket(const StructureConstants& mu, const Vec& x, const Vec& y) {
  int n = mu.dim();
  if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n) {
    throw DimensionMismatch("bracket arguments must have length " + std::to_string(n));
  }
  Vec out(n, Scalar(0));
  for (const auto& [k, v] : mu.entries()) {
    const auto& [a, b, c] = k;
    Scalar w = x[b - 1] * y[c - 1] - x[c - 1] * y[b - 1];
    if (w != 0) out[a - 1] += v * w;
  }
  return out;
}

Tensor jacobi_defect(const StructureConstants& mu) {
  int n = mu.dim();
  Tensor j(n, {Slot::Upper, Slot::Lower, Slot::Lower, Slot::Lower});
  for (int b = 1; b <= n; ++b) {
    for (int c = b + 1; c <= n; ++c) {
      for (int d = c + 1; d <= n; ++d) {
        Vec acc(n, Scalar(0));
        auto term = [&](int x, int y, int z) {
          // sum_e C^a_{xe} C^e_{yz}
          for (int e = 1; e <= n; ++e) {
            Scalar cyz = mu.get(e, y, z);
            if (cyz == 0) continue;
            for (int a = 1; a <= n; ++a) {
              Scalar cxe = mu.get(a, x, e);
              if (cxe != 0) acc[a - 1] += cxe * cyz;
            }
          }
        };
        term(b, c, d);
        term(c, d, b);
        term(d, b, c);
        for (int a = 1; a <= n; ++a) {
          const Scalar& v = acc[a - 1];
          if (v == 0) continue;
          j.set({a, b, c, d}, v);
          j.set({a, c, d, b}, v);
          j.set({a, d, b, c}, v);
          j.set({a, c, b, d}, -v);
          j.set({a, b, d, c}, -v);
          j.set({a, d, c, b}, -v);
        }
      }
    }
  }
  return j;
}

bool is_lie_algebra(const StructureConstants& mu) { return jacobi_defect(mu).is_zero(); }

void require_lie_algebra(const StructureConstants& mu) {
  if (!is_lie_algebra(mu)) throw NotLieAlgebra("structure constants violate the Jacobi identity");
}

Matrix ad_operator(const StructureConstants& mu, const Vec& x) {
  int n = mu.dim();
  if (static_cast<int>(x.size()) != n) throw DimensionMismatch("ad argument has wrong length");
  Matrix m(n, n);
  for (const auto& [k, v] : mu.entries()) {
    const auto& [a, b, c] = k;
    // [x, e_c] picks x_b C^a_{bc}; [x, e_b] picks x_c C^a_{cb}.
    if (x[b - 1] != 0) m(a - 1, c - 1) += x[b - 1] * v;
    if (x[c - 1] != 0) m(a - 1, b - 1) -= x[c - 1] * v;
  }
  return m;
}

Subspace bracket_span(const StructureConstants& mu, const Subspace& u, const Subspace& v) {
  std::vector<Vec> out;
  for (const auto& x : u.basis()) {
    for (const auto& y : v.basis()) out.push_back(bracket(mu, x, y));
  }
  return Subspace::span(mu.dim(), out);
}

namespace {

template <typename Next>
std::vector<Subspace> series(const StructureConstants& mu, Next next) {
  require_lie_algebra(mu);
  std::vector<Subspace> chain{Subspace::full(mu.dim())};
  for (;;) {
    Subspace s = next(chain.back());
    if (s == chain.back()) break;
    chain.push_back(s);
    if (s.dim() == 0) break;
  }
  return chain;
}

}  // namespace

std::vector<Subspace> derived_series(const StructureConstants& mu) {
  return series(mu, [&](const Subspace& s) { return bracket_span(mu, s, s); });
}

std::vector<Subspace> lower_central_series(const StructureConstants& mu) {
  Subspace g = Subspace::full(mu.dim());
  return series(mu, [&](const Subspace& s) { return bracket_span(mu, g, s); });
}

bool is_abelian(const StructureConstants& mu) { return mu.is_zero(); }

bool is_solvable(const StructureConstants& mu) { return derived_series(mu).back().dim() == 0; }

bool is_nilpotent(const StructureConstants& mu) { return lower_central_series(mu).back().dim() == 0; }

Matrix killing_matrix(const StructureConstants& mu) {
  int n = mu.dim();
  std::vector<Matrix> ads;
  for (int a = 1; a <= n; ++a) ads.push_back(ad_operator(mu, unit_vector(n, a)));
  Matrix b(n, n);
  for (int a = 0; a < n; ++a) {
    for (int c = a; c < n; ++c) {
      Scalar t = 0;
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          if (ads[a](i, j) != 0 && ads[c](j, i) != 0) t += ads[a](i, j) * ads[c](j, i);
        }
      }
      b(a, c) = t;
      b(c, a) = t;
    }
  }
  return b;
}

Tensor killing_form(const StructureConstants& mu) {
  Matrix b = killing_matrix(mu);
  Tensor t(mu.dim(), {Slot::Lower, Slot::Lower});
  for (int i = 0; i < mu.dim(); ++i) {
    for (int j = 0; j < mu.dim(); ++j) t.set({i + 1, j + 1}, b(i, j));
  }
  return t;
}

bool is_semisimple(const StructureConstants& mu) {
  require_lie_algebra(mu);
  if (mu.dim() == 0) return false;
  return determinant(killing_matrix(mu)) != 0;
}

StructureConstants change_basis(const StructureConstants& mu, const Matrix& a) {
  int n = mu.dim();
  if (a.rows() != n || a.cols() != n) throw DimensionMismatch("basis change has wrong size");
  Matrix inv = inverse(a);
  std::vector<Vec> cols;
  for (int i = 0; i < n; ++i) cols.push_back(a.column(i));
  StructureConstants out(n);
  for (int b = 0; b < n; ++b) {
    for (int c = b + 1; c < n; ++c) {
      Vec z = inv.apply(bracket(mu, cols[b], cols[c]));
      for (int i = 0; i < n; ++i) {
        if (z[i] != 0) out.set(i + 1, b + 1, c + 1, z[i]);
      }
    }
  }
  return out;
}

Matrix permutation_matrix(const std::vector<int>& perm) {
  int n = static_cast<int>(perm.size());
  Matrix m(n, n);
  std::vector<bool> seen(n + 1, false);
  for (int i = 0; i < n; ++i) {
    int j = perm[i];
    if (j < 1 || j > n || seen[j]) throw Error("not a permutation of 1..n");
    seen[j] = true;
    m(j - 1, i) = 1;
  }
  return m;
}

bool subspace_bracket_check(const StructureConstants& mu, const Subspace& u, const Subspace& v,
                            const Subspace& w) {
  for (const auto& x : u.basis()) {
    for (const auto& y : v.basis()) {
      if (!w.contains(bracket(mu, x, y))) return false;
    }
  }
  return true;
}

bool is_nilpotent_subalgebra(const StructureConstants& mu, const Subspace& u) {
  if (!subspace_bracket_check(mu, u, u, u)) return false;
  Subspace term = u;
  for (int step = 0; step <= u.dim(); ++step) {
    if (term.dim() == 0) return true;
    Subspace next = bracket_span(mu, u, term);
    if (next == term) return false;
    term = next;
  }
  return term.dim() == 0;
}

}  // namespace liecone

#include "liecone/matrix.hpp"

#include <algorithm>
#include <functional>

#include "liecone/errors.hpp"

namespace liecone {

Matrix::Matrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, Scalar(0)) {
  if (rows < 0 || cols < 0) throw DimensionMismatch("negative matrix dimension");
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return Matrix();
  Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int r = 0; r < m.rows_; ++r) {
    if (static_cast<int>(rows[r].size()) != m.cols_) throw DimensionMismatch("ragged rows");
    for (int c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& columns) {
  return from_rows(columns).transpose();
}

Matrix Matrix::diagonal(const Vec& entries) {
  int n = static_cast<int>(entries.size());
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = entries[i];
  return m;
}

Vec Matrix::row(int r) const {
  return Vec(data_.begin() + static_cast<long>(r) * cols_,
             data_.begin() + static_cast<long>(r + 1) * cols_);
}

Vec Matrix::column(int c) const {
  Vec v(rows_);
  for (int r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& x) { return x == 0; });
}

Scalar Matrix::trace() const {
  if (!is_square()) throw DimensionMismatch("trace of a non-square matrix");
  Scalar t = 0;
  for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Vec Matrix::apply(const Vec& v) const {
  if (static_cast<int>(v.size()) != cols_) throw DimensionMismatch("matrix-vector size mismatch");
  Vec out(rows_, Scalar(0));
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) {
      if (v[c] != 0 && (*this)(r, c) != 0) out[r] += (*this)(r, c) * v[c];
    }
  }
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product size mismatch");
  Matrix out(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x == 0) continue;
      for (int j = 0; j < b.cols_; ++j) {
        if (b(k, j) != 0) out(i, j) += x * b(k, j);
      }
    }
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix sum size mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix difference size mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

Matrix operator*(const Scalar& s, const Matrix& m) {
  Matrix out = m;
  for (auto& x : out.data_) x *= s;
  return out;
}

namespace {

// Integer matrix after scaling each row by the lcm of its denominators.
struct IntegerRows {
  std::vector<std::vector<mpz_class>> a;
  Scalar scale = 1;  // product of the row multipliers
};

IntegerRows integerize(const Matrix& m) {
  IntegerRows out;
  out.a.resize(m.rows());
  for (int r = 0; r < m.rows(); ++r) {
    Vec row = m.row(r);
    mpz_class d = common_denominator(row);
    out.scale *= d;
    out.a[r].resize(m.cols());
    for (int c = 0; c < m.cols(); ++c) {
      Scalar v = row[c] * d;
      out.a[r][c] = v.get_num();
    }
  }
  return out;
}

// Bareiss forward elimination in place; returns the pivot columns. Every entry
// below the current step stays a minor of the input, so each division is exact.
std::vector<int> bareiss(std::vector<std::vector<mpz_class>>& a, int cols, int* swaps) {
  int rows = static_cast<int>(a.size());
  std::vector<int> pivots;
  mpz_class prev = 1;
  int r = 0;
  if (swaps) *swaps = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      if (swaps) ++*swaps;
    }
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        mpz_class v = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int rank(const Matrix& m) {
  IntegerRows ir = integerize(m);
  return static_cast<int>(bareiss(ir.a, m.cols(), nullptr).size());
}

Scalar determinant(const Matrix& m) {
  if (!m.is_square()) throw DimensionMismatch("determinant of a non-square matrix");
  int n = m.rows();
  if (n == 0) return 1;
  IntegerRows ir = integerize(m);
  int swaps = 0;
  auto pivots = bareiss(ir.a, n, &swaps);
  if (static_cast<int>(pivots.size()) < n) return 0;
  Scalar det(ir.a[n - 1][n - 1]);
  if (swaps % 2) det = -det;
  return det / ir.scale;
}

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw DimensionMismatch("inverse of a non-square matrix");
  int n = m.rows();
  std::vector<Vec> aug(n);
  for (int r = 0; r < n; ++r) {
    aug[r] = m.row(r);
    for (int c = 0; c < n; ++c) aug[r].push_back(r == c ? 1 : 0);
  }
  std::vector<int> pivots;
  auto red = row_reduce(aug, &pivots);
  if (static_cast<int>(red.size()) < n || pivots[n - 1] != n - 1) throw SingularMatrix("matrix is singular");
  Matrix inv(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) inv(r, c) = red[r][n + c];
  }
  return inv;
}

Matrix matrix_power(const Matrix& m, int exponent) {
  if (!m.is_square()) throw DimensionMismatch("power of a non-square matrix");
  if (exponent < 0) return matrix_power(inverse(m), -exponent);
  Matrix result = Matrix::identity(m.rows());
  Matrix base = m;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent) base = base * base;
  }
  return result;
}

std::vector<Vec> kernel(const Matrix& m) {
  IntegerRows ir = integerize(m);
  auto pivots = bareiss(ir.a, m.cols(), nullptr);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec x(m.cols(), Scalar(0));
    x[f] = 1;
    for (int r = static_cast<int>(pivots.size()) - 1; r >= 0; --r) {
      int pc = pivots[r];
      Scalar s = 0;
      for (int j = pc + 1; j < m.cols(); ++j) {
        if (ir.a[r][j] != 0 && x[j] != 0) s += Scalar(ir.a[r][j]) * x[j];
      }
      x[pc] = -s / Scalar(ir.a[r][pc]);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

std::vector<Vec> row_reduce(const std::vector<Vec>& input, std::vector<int>* pivots_out) {
  std::vector<Vec> rows = input;
  std::vector<int> pivots;
  if (rows.empty()) {
    if (pivots_out) pivots_out->clear();
    return rows;
  }
  int ncols = static_cast<int>(rows[0].size());
  int r = 0;
  for (int c = 0; c < ncols && r < static_cast<int>(rows.size()); ++c) {
    int p = r;
    while (p < static_cast<int>(rows.size()) && rows[p][c] == 0) ++p;
    if (p == static_cast<int>(rows.size())) continue;
    std::swap(rows[p], rows[r]);
    Scalar inv = Scalar(1) / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Scalar f = rows[i][c];
      for (int j = c; j < ncols; ++j) {
        if (rows[r][j] != 0) rows[i][j] -= f * rows[r][j];
      }
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  if (pivots_out) *pivots_out = pivots;
  return rows;
}

UPoly char_poly(const Matrix& m) {
  if (!m.is_square()) throw DimensionMismatch("characteristic polynomial of a non-square matrix");
  int n = m.rows();
  Vec c(n + 1, Scalar(0));
  c[n] = 1;
  Matrix mk(n, n);
  Matrix id = Matrix::identity(n);
  for (int k = 1; k <= n; ++k) {
    mk = m * mk + c[n - k + 1] * id;
    c[n - k] = -(m * mk).trace() / k;
  }
  return UPoly(c);
}

std::optional<int> nilpotency_index(const Matrix& m) {
  if (!m.is_square()) throw DimensionMismatch("nilpotency index of a non-square matrix");
  int n = m.rows();
  if (m.is_zero()) return 1;
  Matrix p = m;
  for (int k = 2; k <= n; ++k) {
    p = p * m;
    if (p.is_zero()) return k;
  }
  return std::nullopt;
}

std::vector<int> jordan_partition_nilpotent(const Matrix& m) {
  if (!m.is_square()) throw DimensionMismatch("Jordan partition of a non-square matrix");
  int n = m.rows();
  // ranks[j] = rank(m^j)
  std::vector<int> ranks{n};
  Matrix p = Matrix::identity(n);
  while (ranks.back() > 0) {
    if (static_cast<int>(ranks.size()) > n) throw NotNilpotent("matrix is not nilpotent");
    p = p * m;
    int r = rank(p);
    if (r == ranks.back()) throw NotNilpotent("matrix is not nilpotent");
    ranks.push_back(r);
  }
  ranks.push_back(0);
  std::vector<int> blocks;
  // blocks of size >= j: ranks[j-1] - ranks[j]; exactly j: that minus the count for j+1.
  for (int j = static_cast<int>(ranks.size()) - 2; j >= 1; --j) {
    int at_least_j = ranks[j - 1] - ranks[j];
    int at_least_next = ranks[j] - ranks[j + 1];
    for (int t = 0; t < at_least_j - at_least_next; ++t) blocks.push_back(j);
  }
  return blocks;
}

std::vector<int> jordan_type(const Matrix& m) {
  std::vector<int> out;
  for (int b : jordan_partition_nilpotent(m)) {
    if (b >= 2) out.push_back(b);
  }
  return out;
}

}  // namespace liecone

#pragma once

#include <optional>
#include <vector>

#include "liecone/polynomial.hpp"
#include "liecone/scalar.hpp"

namespace liecone {

// Small dense matrix over the rationals, row-major, 0-based element access.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols);
  static Matrix identity(int n);
  static Matrix from_rows(const std::vector<Vec>& rows);
  static Matrix from_columns(const std::vector<Vec>& columns);
  static Matrix diagonal(const Vec& entries);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Scalar& operator()(int r, int c) const {
    return data_[static_cast<std::size_t>(r) * cols_ + c];
  }

  Vec row(int r) const;
  Vec column(int c) const;
  bool is_zero() const;
  Scalar trace() const;
  Matrix transpose() const;
  Vec apply(const Vec& v) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, const Matrix& m);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  Vec data_;
};

// Fraction-free (Bareiss) elimination over integers obtained by clearing row denominators.
int rank(const Matrix& m);
Scalar determinant(const Matrix& m);
Matrix inverse(const Matrix& m);  // throws SingularMatrix
Matrix matrix_power(const Matrix& m, int exponent);

// Basis of {v : m v = 0}; one vector per free column, free coordinate set to 1.
std::vector<Vec> kernel(const Matrix& m);

// Reduced row echelon form; nonzero rows only. pivots receives the pivot columns.
std::vector<Vec> row_reduce(const std::vector<Vec>& rows, std::vector<int>* pivots = nullptr);

// det(x I - m), computed by Faddeev-LeVerrier.
UPoly char_poly(const Matrix& m);

// Least k with m^k = 0, or nullopt when m is not nilpotent.
std::optional<int> nilpotency_index(const Matrix& m);

// Block sizes, descending, including size-1 blocks. Throws NotNilpotent.
std::vector<int> jordan_partition_nilpotent(const Matrix& m);

// Nonzero blocks only (sizes >= 2); an empty result means m = 0.
std::vector<int> jordan_type(const Matrix& m);

}  // namespace liecone

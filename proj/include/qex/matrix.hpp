#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qex/field.hpp"

namespace qex {

/// Dense matrix over an exact field. All arithmetic is exact.
class Matrix {
 public:
  Matrix(Field f, size_t rows, size_t cols)
      : f_(f), rows_(rows), cols_(cols), e_(rows * cols, f.zero()) {}

  static Matrix identity(Field f, size_t n);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  const Field& field() const { return f_; }

  Scalar& at(size_t r, size_t c) { return e_[r * cols_ + c]; }
  const Scalar& at(size_t r, size_t c) const { return e_[r * cols_ + c]; }
  void set(size_t r, size_t c, const Scalar& v) { e_[r * cols_ + c] = f_.reduce(v); }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& c) const;
  Matrix transpose() const;
  bool is_zero() const;
  bool operator==(const Matrix& o) const;

  std::vector<Scalar> column_vec(size_t c) const;
  void set_column(size_t c, const std::vector<Scalar>& v);

  static Matrix hstack(const Matrix& a, const Matrix& b);
  static Matrix vstack(const Matrix& a, const Matrix& b);
  static Matrix from_columns(Field f, size_t rows,
                             const std::vector<std::vector<Scalar>>& cols);

 private:
  Field f_;
  size_t rows_, cols_;
  std::vector<Scalar> e_;
};

struct RrefResult {
  Matrix r;
  std::vector<size_t> pivots;  // pivot column per pivot row
  size_t rank;
};

/// Reduced row echelon form; row space is preserved.
RrefResult rref(const Matrix& m);

size_t rank(const Matrix& m);

/// Columns form a basis of { x : m x = 0 }; count = cols - rank.
Matrix kernel_basis(const Matrix& m);

/// Solves m x = b (b may have several columns). Empty result means b is
/// outside the column space; this is a normal outcome, not an error.
std::optional<Matrix> solve(const Matrix& m, const Matrix& b);

/// Subset of columns of m forming a basis of the column space.
Matrix column_space_basis(const Matrix& m);

/// Inverse of a square invertible matrix (throws if singular).
Matrix inverse(const Matrix& m);

}  // namespace qex

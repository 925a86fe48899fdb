#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace qex {

/// Dense matrix with arbitrary-precision integer entries.
class IntMatrix {
 public:
  IntMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), e_(rows * cols, 0) {}

  static IntMatrix identity(size_t n);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  mpz_class& at(size_t r, size_t c) { return e_[r * cols_ + c]; }
  const mpz_class& at(size_t r, size_t c) const { return e_[r * cols_ + c]; }

  IntMatrix operator*(const IntMatrix& o) const;
  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
  }

 private:
  size_t rows_, cols_;
  std::vector<mpz_class> e_;
};

struct SnfResult {
  std::vector<mpz_class> factors;  // nonzero invariant factors d1 | d2 | ...
  IntMatrix u, v;                  // unimodular; u * m * v = d
  IntMatrix d;                     // diagonal
};

/// Smith normal form by classical elimination; pivots are chosen by minimal
/// absolute value to contain coefficient growth. `column_first` flips the
/// sweep order (used as an independent cross-check path in tests).
SnfResult smith_normal_form(const IntMatrix& m, bool column_first = false);

/// True iff v is an integer linear combination of the columns of `basis`.
bool lattice_membership(const IntMatrix& basis, const std::vector<mpz_class>& v);

mpz_class det(const IntMatrix& m);

}  // namespace qex

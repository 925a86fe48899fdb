#include "qex/intmatrix.hpp"

#include <stdexcept>

namespace qex {

IntMatrix IntMatrix::identity(size_t n) {
  IntMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("int matrix product shape");
  IntMatrix r(rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      if (at(i, k) == 0) continue;
      for (size_t j = 0; j < o.cols_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
    }
  return r;
}

namespace {

void swap_rows(IntMatrix& a, size_t i, size_t j) {
  if (i == j) return;
  for (size_t c = 0; c < a.cols(); ++c) std::swap(a.at(i, c), a.at(j, c));
}

void swap_cols(IntMatrix& a, size_t i, size_t j) {
  if (i == j) return;
  for (size_t r = 0; r < a.rows(); ++r) std::swap(a.at(r, i), a.at(r, j));
}

// row_i -= q * row_t
void row_op(IntMatrix& a, size_t i, size_t t, const mpz_class& q) {
  if (q == 0) return;
  for (size_t c = 0; c < a.cols(); ++c) a.at(i, c) -= q * a.at(t, c);
}

void col_op(IntMatrix& a, size_t j, size_t t, const mpz_class& q) {
  if (q == 0) return;
  for (size_t r = 0; r < a.rows(); ++r) a.at(r, j) -= q * a.at(r, t);
}

// Nearest-integer quotient, to keep remainders small.
mpz_class near_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (2 * r > abs(b)) q += 1;
  return q;
}

bool find_min_pivot(const IntMatrix& a, size_t t, size_t& pi, size_t& pj) {
  bool found = false;
  mpz_class best;
  for (size_t i = t; i < a.rows(); ++i)
    for (size_t j = t; j < a.cols(); ++j) {
      if (a.at(i, j) == 0) continue;
      mpz_class v = abs(a.at(i, j));
      if (!found || v < best) {
        found = true;
        best = v;
        pi = i;
        pj = j;
      }
    }
  return found;
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& m, bool column_first) {
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix v = IntMatrix::identity(m.cols());
  size_t n = std::min(m.rows(), m.cols());

  for (size_t t = 0; t < n; ++t) {
    size_t pi, pj;
    if (!find_min_pivot(a, t, pi, pj)) break;
    swap_rows(a, t, pi);
    swap_rows(u, t, pi);
    swap_cols(a, t, pj);
    swap_cols(v, t, pj);

    for (;;) {
      // Clear the pivot row and column, re-picking a smaller pivot whenever
      // a nonzero remainder shows up.
      bool dirty = false;
      if (column_first) {
        for (size_t j = t + 1; j < a.cols(); ++j)
          if (a.at(t, j) != 0) {
            mpz_class q = near_div(a.at(t, j), a.at(t, t));
            col_op(a, j, t, q);
            col_op(v, j, t, q);
            if (a.at(t, j) != 0) dirty = true;
          }
        for (size_t i = t + 1; i < a.rows(); ++i)
          if (a.at(i, t) != 0) {
            mpz_class q = near_div(a.at(i, t), a.at(t, t));
            row_op(a, i, t, q);
            row_op(u, i, t, q);
            if (a.at(i, t) != 0) dirty = true;
          }
      } else {
        for (size_t i = t + 1; i < a.rows(); ++i)
          if (a.at(i, t) != 0) {
            mpz_class q = near_div(a.at(i, t), a.at(t, t));
            row_op(a, i, t, q);
            row_op(u, i, t, q);
            if (a.at(i, t) != 0) dirty = true;
          }
        for (size_t j = t + 1; j < a.cols(); ++j)
          if (a.at(t, j) != 0) {
            mpz_class q = near_div(a.at(t, j), a.at(t, t));
            col_op(a, j, t, q);
            col_op(v, j, t, q);
            if (a.at(t, j) != 0) dirty = true;
          }
      }
      if (dirty) {
        if (!find_min_pivot(a, t, pi, pj)) break;
        swap_rows(a, t, pi);
        swap_rows(u, t, pi);
        swap_cols(a, t, pj);
        swap_cols(v, t, pj);
        continue;
      }
      // Pivot must divide the rest of the submatrix for the factor chain.
      bool fixed = true;
      for (size_t i = t + 1; i < a.rows() && fixed; ++i)
        for (size_t j = t + 1; j < a.cols() && fixed; ++j)
          if (a.at(i, j) % a.at(t, t) != 0) {
            row_op(a, t, i, mpz_class(-1));  // row_t += row_i
            row_op(u, t, i, mpz_class(-1));
            fixed = false;
          }
      if (fixed) break;
    }
  }

  for (size_t t = 0; t < n; ++t)
    if (a.at(t, t) < 0) {
      for (size_t c = 0; c < a.cols(); ++c) a.at(t, c) = -a.at(t, c);
      for (size_t c = 0; c < u.cols(); ++c) u.at(t, c) = -u.at(t, c);
    }

  std::vector<mpz_class> factors;
  for (size_t t = 0; t < n; ++t)
    if (a.at(t, t) != 0) factors.push_back(a.at(t, t));
  return SnfResult{std::move(factors), std::move(u), std::move(v), std::move(a)};
}

bool lattice_membership(const IntMatrix& basis, const std::vector<mpz_class>& v) {
  if (v.size() != basis.rows())
    throw std::invalid_argument("lattice membership: vector length mismatch");
  SnfResult s = smith_normal_form(basis);
  // basis x = v  <=>  d y = u v with x = v_transform y; solvable over Z iff
  // each diagonal entry divides the matching coordinate and the rest vanish.
  std::vector<mpz_class> w(basis.rows(), 0);
  for (size_t i = 0; i < basis.rows(); ++i)
    for (size_t j = 0; j < basis.rows(); ++j) w[i] += s.u.at(i, j) * v[j];
  size_t r = s.factors.size();
  for (size_t i = 0; i < basis.rows(); ++i) {
    if (i < r) {
      if (w[i] % s.factors[i] != 0) return false;
    } else if (w[i] != 0) {
      return false;
    }
  }
  return true;
}

mpz_class det(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det of non-square");
  // Fraction-free Gaussian elimination (Bareiss).
  size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  mpz_class prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      size_t p = k + 1;
      while (p < n && a.at(p, k) == 0) ++p;
      if (p == n) return 0;
      swap_rows(a, k, p);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) {
        mpz_class t = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        mpz_divexact(a.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

}  // namespace qex

#include "qex/matrix.hpp"

#include <stdexcept>

namespace qex {

Matrix Matrix::identity(Field f, size_t n) {
  Matrix m(f, n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_ || f_ != o.f_)
    throw std::invalid_argument("matrix product shape mismatch");
  Matrix r(f_, rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (f_.is_zero(a)) continue;
      for (size_t j = 0; j < o.cols_; ++j) {
        const Scalar& b = o.at(k, j);
        if (f_.is_zero(b)) continue;
        r.at(i, j) = f_.add(r.at(i, j), f_.mul(a, b));
      }
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix sum shape mismatch");
  Matrix r(f_, rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = f_.add(e_[i], o.e_[i]);
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix difference shape mismatch");
  Matrix r(f_, rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = f_.sub(e_[i], o.e_[i]);
  return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix r(f_, rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = f_.mul(e_[i], c);
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(f_, cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool Matrix::is_zero() const {
  for (const auto& v : e_)
    if (sgn(v) != 0) return false;
  return true;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

std::vector<Scalar> Matrix::column_vec(size_t c) const {
  std::vector<Scalar> v(rows_);
  for (size_t i = 0; i < rows_; ++i) v[i] = at(i, c);
  return v;
}

void Matrix::set_column(size_t c, const std::vector<Scalar>& v) {
  if (v.size() != rows_) throw std::invalid_argument("column size mismatch");
  for (size_t i = 0; i < rows_; ++i) at(i, c) = f_.reduce(v[i]);
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_) throw std::invalid_argument("hstack row mismatch");
  Matrix r(a.f_, a.rows_, a.cols_ + b.cols_);
  for (size_t i = 0; i < a.rows_; ++i) {
    for (size_t j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
    for (size_t j = 0; j < b.cols_; ++j) r.at(i, a.cols_ + j) = b.at(i, j);
  }
  return r;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.cols_) throw std::invalid_argument("vstack col mismatch");
  Matrix r(a.f_, a.rows_ + b.rows_, a.cols_);
  for (size_t i = 0; i < a.rows_; ++i)
    for (size_t j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
  for (size_t i = 0; i < b.rows_; ++i)
    for (size_t j = 0; j < a.cols_; ++j) r.at(a.rows_ + i, j) = b.at(i, j);
  return r;
}

Matrix Matrix::from_columns(Field f, size_t rows,
                            const std::vector<std::vector<Scalar>>& cols) {
  Matrix r(f, rows, cols.size());
  for (size_t c = 0; c < cols.size(); ++c) r.set_column(c, cols[c]);
  return r;
}

RrefResult rref(const Matrix& m) {
  Matrix r = m;
  const Field& f = r.field();
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
    size_t p = row;
    while (p < r.rows() && f.is_zero(r.at(p, col))) ++p;
    if (p == r.rows()) continue;
    if (p != row)
      for (size_t j = col; j < r.cols(); ++j) std::swap(r.at(row, j), r.at(p, j));
    Scalar piv = f.inv(r.at(row, col));
    for (size_t j = col; j < r.cols(); ++j)
      r.at(row, j) = f.mul(r.at(row, j), piv);
    for (size_t i = 0; i < r.rows(); ++i) {
      if (i == row || f.is_zero(r.at(i, col))) continue;
      Scalar c = r.at(i, col);
      for (size_t j = col; j < r.cols(); ++j)
        r.at(i, j) = f.sub(r.at(i, j), f.mul(c, r.at(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return RrefResult{std::move(r), std::move(pivots), row};
}

size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix kernel_basis(const Matrix& m) {
  RrefResult rr = rref(m);
  const Field& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t p : rr.pivots) is_pivot[p] = true;
  size_t nfree = m.cols() - rr.rank;
  Matrix k(f, m.cols(), nfree);
  size_t idx = 0;
  for (size_t c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    k.at(c, idx) = f.one();
    for (size_t pr = 0; pr < rr.rank; ++pr)
      k.at(rr.pivots[pr], idx) = f.neg(rr.r.at(pr, c));
    ++idx;
  }
  return k;
}

std::optional<Matrix> solve(const Matrix& m, const Matrix& b) {
  if (m.rows() != b.rows()) throw std::invalid_argument("solve shape mismatch");
  const Field& f = m.field();
  RrefResult rr = rref(Matrix::hstack(m, b));
  // Inconsistent iff some pivot lands in the b block.
  for (size_t p : rr.pivots)
    if (p >= m.cols()) return std::nullopt;
  Matrix x(f, m.cols(), b.cols());
  for (size_t pr = 0; pr < rr.pivots.size(); ++pr)
    for (size_t j = 0; j < b.cols(); ++j)
      x.at(rr.pivots[pr], j) = rr.r.at(pr, m.cols() + j);
  return x;
}

Matrix column_space_basis(const Matrix& m) {
  RrefResult rr = rref(m);
  Matrix b(m.field(), m.rows(), rr.rank);
  for (size_t i = 0; i < rr.rank; ++i)
    for (size_t r = 0; r < m.rows(); ++r) b.at(r, i) = m.at(r, rr.pivots[i]);
  return b;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square");
  auto x = solve(m, Matrix::identity(m.field(), m.rows()));
  if (!x || rank(m) != m.rows()) throw std::domain_error("singular matrix");
  return *x;
}

}  // namespace qex

#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qex {

// Exact scalar. Over Q this is an arbitrary rational; over F_p it is kept
// as the canonical representative in [0, p) with denominator 1.
using Scalar = mpq_class;

/// The ground field: the rationals, or a prime field F_p.
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime(unsigned long p);

  bool is_rational() const { return p_ == 0; }
  unsigned long characteristic() const { return p_; }

  Scalar zero() const { return Scalar(0); }
  Scalar one() const { return Scalar(1); }
  Scalar from_long(long v) const { return reduce(Scalar(v)); }

  // Canonical representative (reduces mod p eagerly; rationals come
  // canonicalized from mpq_class already).
  Scalar reduce(const Scalar& v) const;

  Scalar add(const Scalar& a, const Scalar& b) const { return reduce(a + b); }
  Scalar sub(const Scalar& a, const Scalar& b) const { return reduce(a - b); }
  Scalar mul(const Scalar& a, const Scalar& b) const { return reduce(a * b); }
  Scalar neg(const Scalar& a) const { return reduce(-a); }
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  bool is_zero(const Scalar& a) const { return sgn(a) == 0; }
  std::string str(const Scalar& a) const { return a.get_str(); }

  bool operator==(const Field& o) const { return p_ == o.p_; }
  bool operator!=(const Field& o) const { return p_ != o.p_; }

 private:
  explicit Field(unsigned long p) : p_(p) {}
  unsigned long p_;
};

}  // namespace qex

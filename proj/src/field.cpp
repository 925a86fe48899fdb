#include "qex/field.hpp"

namespace qex {

Field Field::prime(unsigned long p) {
  mpz_class z(static_cast<unsigned long>(p));
  if (p < 2 || mpz_probab_prime_p(z.get_mpz_t(), 30) == 0)
    throw std::invalid_argument("field characteristic must be prime: " +
                                std::to_string(p));
  return Field(p);
}

Scalar Field::reduce(const Scalar& v) const {
  if (p_ == 0) return v;  // mpq_class keeps fractions canonical
  mpz_class p(static_cast<unsigned long>(p_));
  mpz_class den = v.get_den() % p;
  if (den < 0) den += p;
  if (den == 0)
    throw std::domain_error("denominator not invertible mod " +
                            std::to_string(p_));
  mpz_class num = v.get_num() % p;
  if (num < 0) num += p;
  mpz_class deninv;
  if (mpz_invert(deninv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
    throw std::domain_error("denominator not invertible mod " +
                            std::to_string(p_));
  mpz_class r = (num * deninv) % p;
  if (r < 0) r += p;
  return Scalar(r);
}

Scalar Field::inv(const Scalar& a) const {
  if (is_zero(a)) throw std::domain_error("division by zero");
  if (p_ == 0) return Scalar(1) / a;
  mpz_class p(static_cast<unsigned long>(p_));
  mpz_class num = reduce(a).get_num();
  mpz_class r;
  mpz_invert(r.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
  if (r < 0) r += p;
  return Scalar(r);
}

}  // namespace qex

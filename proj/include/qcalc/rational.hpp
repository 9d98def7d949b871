#ifndef QCALC_RATIONAL_HPP
#define QCALC_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qcalc {

/// Exact rational scalar. GMP keeps values canonical (coprime, positive
/// denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

inline Rational rat_pow(const Rational& base, long e) {
  if (e < 0) {
    if (is_zero(base)) throw std::domain_error("rat_pow: 0^negative");
    return rat_pow(Rational(1) / base, -e);
  }
  Rational out(1), b = base;
  unsigned long k = static_cast<unsigned long>(e);
  while (k != 0) {
    if (k & 1) out *= b;
    b *= b;
    k >>= 1;
  }
  return out;
}

inline Rational factorial(long m) {
  if (m < 0) throw std::domain_error("factorial: negative argument");
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(m));
  return Rational(f);
}

inline std::string to_string(const Rational& x) { return x.get_str(); }

}  // namespace qcalc

#endif

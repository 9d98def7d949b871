#ifndef QCALC_RATQ_HPP
#define QCALC_RATQ_HPP

#include <complex>
#include <string>

#include "qcalc/poly.hpp"

namespace qcalc {

/// Exact rational function of the indeterminate q over the rationals.
/// Canonical form is restored after every operation: gcd(num, den) = 1, den
/// monic, and the zero element is 0/1. Equality is equality of canonical
/// forms.
class RatQ {
 public:
  RatQ() : num_(), den_(Rational(1)) {}
  RatQ(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT
  RatQ(long c) : RatQ(Rational(c)) {}                      // NOLINT
  RatQ(Poly num) : num_(std::move(num)), den_(Rational(1)) {}  // NOLINT
  RatQ(Poly num, Poly den);

  /// The indeterminate q, and integer powers q^k (k may be negative).
  static RatQ q() { return RatQ(Poly::variable()); }
  static RatQ q_pow(long k);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  /// True when the value is a constant (degree <= 0 over denominator 1).
  bool is_rational() const { return den_.is_one() && num_.degree() <= 0; }
  Rational as_rational() const;

  RatQ operator-() const;
  RatQ inverse() const;
  RatQ pow(long e) const;

  friend RatQ operator+(const RatQ& a, const RatQ& b);
  friend RatQ operator-(const RatQ& a, const RatQ& b);
  friend RatQ operator*(const RatQ& a, const RatQ& b);
  friend RatQ operator/(const RatQ& a, const RatQ& b);
  RatQ& operator+=(const RatQ& o) { return *this = *this + o; }
  RatQ& operator-=(const RatQ& o) { return *this = *this - o; }
  RatQ& operator*=(const RatQ& o) { return *this = *this * o; }
  RatQ& operator/=(const RatQ& o) { return *this = *this / o; }
  friend bool operator==(const RatQ& a, const RatQ& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::complex<double> eval(const std::complex<double>& x) const;

  /// "num / den" with terms in descending degree; plain "num" when den = 1.
  std::string str(const std::string& var = "q") const;

 private:
  void normalize();
  Poly num_, den_;
};

inline bool is_zero(const RatQ& x) { return x.is_zero(); }

/// q-number [m]_q = 1 + q + ... + q^{m-1} as a polynomial; [0]_q = 0.
Poly qnum_poly(int m);
/// q-factorial [m]_q! = prod_{k=1..m} [k]_q as a polynomial; [0]_q! = 1.
Poly qfact_poly(int m);

RatQ qnum(int m);
RatQ qfact(int m);

}  // namespace qcalc

#endif

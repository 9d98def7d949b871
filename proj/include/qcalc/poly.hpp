#ifndef QCALC_POLY_HPP
#define QCALC_POLY_HPP

#include <complex>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "qcalc/rational.hpp"

namespace qcalc {

/// Dense univariate polynomial over the rationals, coefficients stored in
/// ascending degree with no trailing zeros. The zero polynomial has an empty
/// coefficient vector and degree -1.
class Poly {
 public:
  Poly() = default;
  Poly(const Rational& c);  // NOLINT: implicit scalar embedding wanted
  Poly(long c) : Poly(Rational(c)) {}
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<Rational> coeffs);

  static Poly variable() { return monomial(1, 1); }
  static Poly monomial(const Rational& coeff, int degree);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const;
  /// Coefficient of q^k; zero outside the stored range.
  const Rational& coeff(int k) const;
  const Rational& lead() const;
  const std::vector<Rational>& coeffs() const { return c_; }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& s, Poly p);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  Poly pow(unsigned long e) const;

  /// Quotient and remainder with deg(rem) < deg(div). Division by zero throws.
  std::pair<Poly, Poly> divrem(const Poly& div) const;
  /// Exact quotient; throws std::domain_error if the remainder is nonzero.
  Poly div_exact(const Poly& div) const;
  /// Monic gcd (zero if both inputs are zero).
  static Poly gcd(Poly a, Poly b);
  /// Extended gcd: returns (g, u, v) monic with u*a + v*b = g.
  static std::tuple<Poly, Poly, Poly> xgcd(const Poly& a, const Poly& b);

  Poly monic() const;
  Rational eval(const Rational& x) const;
  std::complex<double> eval(const std::complex<double>& x) const;

  /// Canonical text, terms in descending degree, e.g. "q^2 + q + 1".
  std::string str(const std::string& var = "q") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// n-th cyclotomic polynomial Phi_n, computed by the recursive quotient
/// (q^n - 1) / prod_{d | n, d < n} Phi_d. Memoized; n >= 1.
const Poly& cyclotomic(int n);

}  // namespace qcalc

#endif

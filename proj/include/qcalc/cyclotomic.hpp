#ifndef QCALC_CYCLOTOMIC_HPP
#define QCALC_CYCLOTOMIC_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcalc/ratq.hpp"

namespace qcalc {

/// Raised when a rational function has a genuine pole at zeta_n, i.e. the
/// denominator still vanishes after all possible Phi_n cancellation.
struct PoleAtRoot : std::runtime_error {
  explicit PoleAtRoot(int n_)
      : std::runtime_error("pole at the primitive " + std::to_string(n_) +
                           "-th root of unity"),
        n(n_) {}
  int n;
};

/// Exact element of the cyclotomic field Q(zeta_n), n odd >= 3, stored as the
/// fully reduced representative polynomial in zeta_n of degree < deg Phi_n.
class CycloNum {
 public:
  /// Zero element of Q(zeta_n).
  explicit CycloNum(int n);
  CycloNum(int n, const Rational& c);
  /// Reduces an arbitrary polynomial in q modulo Phi_n.
  CycloNum(int n, const Poly& p);

  static CycloNum zeta(int n) { return zeta_pow(n, 1); }
  static CycloNum zeta_pow(int n, long k);

  int n() const { return n_; }
  bool is_zero() const;
  bool is_rational() const;
  Rational as_rational() const;
  const std::vector<Rational>& coeffs() const { return c_; }
  Poly to_poly() const;

  CycloNum operator-() const;
  CycloNum inverse() const;
  CycloNum pow(long e) const;

  friend CycloNum operator+(const CycloNum& a, const CycloNum& b);
  friend CycloNum operator-(const CycloNum& a, const CycloNum& b);
  friend CycloNum operator*(const CycloNum& a, const CycloNum& b);
  friend CycloNum operator/(const CycloNum& a, const CycloNum& b);
  CycloNum& operator+=(const CycloNum& o) { return *this = *this + o; }
  CycloNum& operator-=(const CycloNum& o) { return *this = *this - o; }
  CycloNum& operator*=(const CycloNum& o) { return *this = *this * o; }
  friend bool operator==(const CycloNum& a, const CycloNum& b) {
    return a.n_ == b.n_ && a.c_ == b.c_;
  }

  /// Numeric value with zeta_n = exp(2*pi*i/n).
  std::complex<double> to_complex() const;

  /// Coefficient-list rendering "[c0, c1, ...] mod Phi_n".
  std::string str() const;

 private:
  static void check_same(const CycloNum& a, const CycloNum& b);
  int n_;
  std::vector<Rational> c_;  // size deg Phi_n, reduced mod Phi_n
};

inline bool is_zero(const CycloNum& x) { return x.is_zero(); }

/// Evaluates x at q = zeta_n. Throws PoleAtRoot when den(x) = 0 mod Phi_n
/// (x is canonical, so that is a genuine pole - use the limits module for
/// 0/0 forms built from non-reduced quotients).
CycloNum eval_at_root(const RatQ& x, int n);

/// The canonical square root of q inside Q(zeta_n): zeta_n^{(n+1)/2}, n odd.
CycloNum q_half(int n);

/// [m]_q and [m]_q! evaluated at zeta_n.
CycloNum qnum_at_root(int m, int n);
CycloNum qfact_at_root(int m, int n);

}  // namespace qcalc

#endif

#include "qcalc/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace qcalc {

namespace {

int check_n(int n) {
  if (n < 3 || n % 2 == 0)
    throw std::domain_error("CycloNum: n must be odd and >= 3");
  return n;
}

}  // namespace

CycloNum::CycloNum(int n) : n_(check_n(n)) {
  c_.assign(static_cast<size_t>(cyclotomic(n_).degree()), Rational(0));
}

CycloNum::CycloNum(int n, const Rational& c) : CycloNum(n) { c_[0] = c; }

CycloNum::CycloNum(int n, const Poly& p) : CycloNum(n) {
  Poly r = p.divrem(cyclotomic(n_)).second;
  for (int k = 0; k <= r.degree(); ++k) c_[static_cast<size_t>(k)] = r.coeff(k);
}

CycloNum CycloNum::zeta_pow(int n, long k) {
  check_n(n);
  long e = k % n;
  if (e < 0) e += n;
  return CycloNum(n, Poly::monomial(1, static_cast<int>(e)));
}

bool CycloNum::is_zero() const {
  for (const auto& c : c_)
    if (!qcalc::is_zero(c)) return false;
  return true;
}

bool CycloNum::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (!qcalc::is_zero(c_[i])) return false;
  return true;
}

Rational CycloNum::as_rational() const {
  if (!is_rational()) throw std::domain_error("CycloNum: not rational");
  return c_[0];
}

Poly CycloNum::to_poly() const { return Poly(c_); }

CycloNum CycloNum::operator-() const {
  CycloNum out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

void CycloNum::check_same(const CycloNum& a, const CycloNum& b) {
  if (a.n_ != b.n_)
    throw std::domain_error("CycloNum: mixed cyclotomic orders");
}

CycloNum operator+(const CycloNum& a, const CycloNum& b) {
  CycloNum::check_same(a, b);
  CycloNum out = a;
  for (size_t i = 0; i < out.c_.size(); ++i) out.c_[i] += b.c_[i];
  return out;
}

CycloNum operator-(const CycloNum& a, const CycloNum& b) {
  CycloNum::check_same(a, b);
  CycloNum out = a;
  for (size_t i = 0; i < out.c_.size(); ++i) out.c_[i] -= b.c_[i];
  return out;
}

CycloNum operator*(const CycloNum& a, const CycloNum& b) {
  CycloNum::check_same(a, b);
  return CycloNum(a.n_, a.to_poly() * b.to_poly());
}

CycloNum operator/(const CycloNum& a, const CycloNum& b) {
  return a * b.inverse();
}

CycloNum CycloNum::inverse() const {
  if (is_zero()) throw std::domain_error("CycloNum: inverse of zero");
  // Phi_n is irreducible over Q, so any nonzero residue is invertible:
  // u*rep + v*Phi_n = 1 gives rep^{-1} = u mod Phi_n.
  auto [g, u, v] = Poly::xgcd(to_poly(), cyclotomic(n_));
  (void)v;
  if (!g.is_one())
    throw std::domain_error("CycloNum: xgcd did not reach 1");
  return CycloNum(n_, u);
}

CycloNum CycloNum::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycloNum out(n_, Rational(1)), base = *this;
  unsigned long k = static_cast<unsigned long>(e);
  while (k != 0) {
    if (k & 1) out *= base;
    base *= base;
    k >>= 1;
  }
  return out;
}

std::complex<double> CycloNum::to_complex() const {
  const double tau = 2.0 * std::numbers::pi / static_cast<double>(n_);
  std::complex<double> out(0.0, 0.0);
  for (size_t i = 0; i < c_.size(); ++i) {
    double a = tau * static_cast<double>(i);
    out += c_[i].get_d() * std::complex<double>(std::cos(a), std::sin(a));
  }
  return out;
}

std::string CycloNum::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i != 0) os << ", ";
    os << c_[i].get_str();
  }
  os << "] mod Phi_" << n_;
  return os.str();
}

CycloNum eval_at_root(const RatQ& x, int n) {
  check_n(n);
  CycloNum den(n, x.den());
  if (den.is_zero()) throw PoleAtRoot(n);
  return CycloNum(n, x.num()) * den.inverse();
}

CycloNum q_half(int n) {
  check_n(n);
  return CycloNum::zeta_pow(n, (n + 1) / 2);
}

CycloNum qnum_at_root(int m, int n) { return CycloNum(n, qnum_poly(m)); }

CycloNum qfact_at_root(int m, int n) { return CycloNum(n, qfact_poly(m)); }

}  // namespace qcalc

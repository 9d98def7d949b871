#include "qcalc/ratq.hpp"

#include <stdexcept>

namespace qcalc {

RatQ::RatQ(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RatQ: zero denominator");
  normalize();
}

void RatQ::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(Rational(1));
    return;
  }
  Poly g = Poly::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.div_exact(g);
    den_ = den_.div_exact(g);
  }
  Rational lead = den_.lead();
  if (lead != 1) {
    Rational inv = Rational(1) / lead;
    num_ = inv * num_;
    den_ = inv * den_;
  }
}

RatQ RatQ::q_pow(long k) {
  if (k >= 0) return RatQ(Poly::monomial(1, static_cast<int>(k)));
  return RatQ(Poly(Rational(1)), Poly::monomial(1, static_cast<int>(-k)));
}

Rational RatQ::as_rational() const {
  if (!is_rational()) throw std::domain_error("RatQ: not a constant");
  return num_.coeff(0);
}

RatQ RatQ::operator-() const {
  RatQ out = *this;
  out.num_ = -out.num_;
  return out;
}

RatQ RatQ::inverse() const {
  if (is_zero()) throw std::domain_error("RatQ: inverse of zero");
  return RatQ(den_, num_);
}

RatQ RatQ::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  RatQ out(Rational(1)), base = *this;
  unsigned long k = static_cast<unsigned long>(e);
  while (k != 0) {
    if (k & 1) out *= base;
    base *= base;
    k >>= 1;
  }
  return out;
}

RatQ operator+(const RatQ& a, const RatQ& b) {
  return RatQ(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatQ operator-(const RatQ& a, const RatQ& b) {
  return RatQ(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatQ operator*(const RatQ& a, const RatQ& b) {
  return RatQ(a.num_ * b.num_, a.den_ * b.den_);
}

RatQ operator/(const RatQ& a, const RatQ& b) {
  if (b.is_zero()) throw std::domain_error("RatQ: division by zero");
  return RatQ(a.num_ * b.den_, a.den_ * b.num_);
}

std::complex<double> RatQ::eval(const std::complex<double>& x) const {
  return num_.eval(x) / den_.eval(x);
}

std::string RatQ::str(const std::string& var) const {
  if (den_.is_one()) return num_.str(var);
  return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
}

Poly qnum_poly(int m) {
  if (m < 0) throw std::domain_error("qnum: m must be >= 0");
  std::vector<Rational> c(static_cast<size_t>(m), Rational(1));
  return Poly(std::move(c));
}

Poly qfact_poly(int m) {
  if (m < 0) throw std::domain_error("qfact: m must be >= 0");
  Poly out(Rational(1));
  for (int k = 2; k <= m; ++k) out = out * qnum_poly(k);
  return out;
}

RatQ qnum(int m) { return RatQ(qnum_poly(m)); }

RatQ qfact(int m) { return RatQ(qfact_poly(m)); }

}  // namespace qcalc

#include "qcalc/poly.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace qcalc {

namespace {
const Rational kZero(0);
}

Poly::Poly(const Rational& c) {
  if (!qcalc::is_zero(c)) c_.push_back(c);
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

Poly Poly::monomial(const Rational& coeff, int degree) {
  if (degree < 0) throw std::domain_error("Poly::monomial: negative degree");
  Poly p;
  if (!qcalc::is_zero(coeff)) {
    p.c_.assign(static_cast<size_t>(degree) + 1, kZero);
    p.c_.back() = coeff;
  }
  return p;
}

void Poly::trim() {
  while (!c_.empty() && qcalc::is_zero(c_.back())) c_.pop_back();
}

bool Poly::is_one() const { return c_.size() == 1 && c_[0] == 1; }

const Rational& Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
  return c_[static_cast<size_t>(k)];
}

const Rational& Poly::lead() const {
  if (is_zero()) throw std::domain_error("Poly::lead: zero polynomial");
  return c_.back();
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), kZero);
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), kZero);
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  Poly out;
  out.c_.assign(a.c_.size() + b.c_.size() - 1, kZero);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (qcalc::is_zero(a.c_[i])) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
  }
  out.trim();
  return out;
}

Poly operator*(const Rational& s, Poly p) {
  for (auto& c : p.c_) c *= s;
  p.trim();
  return p;
}

Poly Poly::pow(unsigned long e) const {
  Poly out(Rational(1)), base = *this;
  while (e != 0) {
    if (e & 1) out = out * base;
    base = base * base;
    e >>= 1;
  }
  return out;
}

std::pair<Poly, Poly> Poly::divrem(const Poly& div) const {
  if (div.is_zero()) throw std::domain_error("Poly::divrem: division by zero");
  Poly quo, rem = *this;
  const int dd = div.degree();
  const Rational& dl = div.lead();
  if (rem.degree() >= dd)
    quo.c_.assign(static_cast<size_t>(rem.degree() - dd) + 1, kZero);
  while (rem.degree() >= dd) {
    int k = rem.degree() - dd;
    Rational f = rem.lead() / dl;
    quo.c_[static_cast<size_t>(k)] = f;
    // rem -= f * q^k * div, computed in place
    for (size_t i = 0; i < div.c_.size(); ++i)
      rem.c_[static_cast<size_t>(k) + i] -= f * div.c_[i];
    rem.trim();
  }
  quo.trim();
  return {quo, rem};
}

Poly Poly::div_exact(const Poly& div) const {
  auto [quo, rem] = divrem(div);
  if (!rem.is_zero()) throw std::domain_error("Poly::div_exact: nonzero remainder");
  return quo;
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a.divrem(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.monic();
}

std::tuple<Poly, Poly, Poly> Poly::xgcd(const Poly& a, const Poly& b) {
  Poly r0 = a, r1 = b;
  Poly u0(Rational(1)), u1, v0, v1(Rational(1));
  while (!r1.is_zero()) {
    auto [q, r] = r0.divrem(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly u = u0 - q * u1;
    u0 = std::move(u1);
    u1 = std::move(u);
    Poly v = v0 - q * v1;
    v0 = std::move(v1);
    v1 = std::move(v);
  }
  if (r0.is_zero()) return {r0, u0, v0};
  Rational inv = Rational(1) / r0.lead();
  return {inv * r0, inv * u0, inv * v0};
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return (Rational(1) / lead()) * *this;
}

Rational Poly::eval(const Rational& x) const {
  Rational out(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) out = out * x + *it;
  return out;
}

std::complex<double> Poly::eval(const std::complex<double>& x) const {
  std::complex<double> out(0.0, 0.0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    out = out * x + std::complex<double>(it->get_d(), 0.0);
  return out;
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeff(k);
    if (qcalc::is_zero(c)) continue;
    Rational a = c;
    if (first) {
      if (sgn(a) < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (sgn(a) < 0 ? " - " : " + ");
      if (sgn(a) < 0) a = -a;
    }
    first = false;
    if (k == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

const Poly& cyclotomic(int n) {
  if (n < 1) throw std::domain_error("cyclotomic: n must be >= 1");
  static std::map<int, Poly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  // Fill proper divisors first, smallest to largest; each step only needs
  // entries already in the cache.
  for (int k = 1; k <= n; ++k) {
    if (n % k != 0 || cache.count(k)) continue;
    if (k == 1) {
      cache.emplace(1, Poly({Rational(-1), Rational(1)}));  // q - 1
      continue;
    }
    Poly xk_minus_1 = Poly::monomial(1, k) - Poly(Rational(1));
    Poly divisor(Rational(1));
    for (int d = 1; d < k; ++d)
      if (k % d == 0) divisor = divisor * cache.at(d);
    cache.emplace(k, xk_minus_1.div_exact(divisor));
  }
  return cache.at(n);
}

}  // namespace qcalc

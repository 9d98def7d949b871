#include "qcalc/limits.hpp"

#include <map>
#include <sstream>
#include <utility>

#include "qcalc/graded.hpp"

namespace qcalc {

LimitResult limit_quotient(const Poly& num, const Poly& den, int n) {
  if (den.is_zero()) throw std::domain_error("limit_quotient: zero denominator");
  const Poly& phi = cyclotomic(n);
  Poly p = num, q = den;
  int cancelled = 0;
  while (!p.is_zero()) {
    auto [pq, pr] = p.divrem(phi);
    if (!pr.is_zero()) break;
    auto [qq, qr] = q.divrem(phi);
    if (!qr.is_zero()) break;
    p = std::move(pq);
    q = std::move(qq);
    ++cancelled;
  }
  CycloNum den_val(n, q);
  if (den_val.is_zero()) throw PoleAtRoot(n);
  return LimitResult{CycloNum(n, p) * den_val.inverse(), cancelled};
}

LimitResult limit_at_root(const RatQ& x, int n) {
  return limit_quotient(x.num(), x.den(), n);
}

namespace {

std::string cyclo_str(const CycloNum& v) {
  return v.is_rational() ? to_string(v.as_rational()) : v.str();
}

LemmaRecord ratio_record(const std::string& name, int n, int r, const Poly& num,
                         const Poly& den, const Rational& expected) {
  LemmaRecord rec{name, n, r, to_string(expected), "", 0, false};
  try {
    LimitResult lr = limit_quotient(num, den, n);
    rec.got = cyclo_str(lr.value);
    rec.cancelled_order = lr.cancelled_order;
    rec.pass = (lr.value == CycloNum(n, expected));
  } catch (const PoleAtRoot&) {
    rec.got = "PoleAtRoot";
  }
  return rec;
}

}  // namespace

std::vector<LemmaRecord> lemma_suite(int n, int r_max) {
  if (r_max < 1) throw std::domain_error("lemma_suite: r_max must be >= 1");
  std::vector<LemmaRecord> out;
  for (int r = 1; r <= r_max; ++r) {
    out.push_back(ratio_record("qnum_ratio", n, r, qnum_poly(r * n),
                               qnum_poly(n), Rational(r)));
    out.push_back(ratio_record("qfact_recursion", n, r, qfact_poly(r * n),
                               qfact_poly(n) * qfact_poly((r - 1) * n),
                               Rational(r)));
    out.push_back(ratio_record("qfact_power", n, r, qfact_poly(r * n),
                               qfact_poly(n).pow(static_cast<unsigned long>(r)),
                               factorial(r)));
    // [rn+p]_q = [p]_q at zeta_n for every p in 1..n-1.
    LemmaRecord rec{"qnum_period", n, r, "[p]_q for p=1.." + std::to_string(n - 1),
                    "", 0, true};
    std::ostringstream got;
    for (int p = 1; p < n; ++p) {
      CycloNum lhs = qnum_at_root(r * n + p, n);
      CycloNum rhs = qnum_at_root(p, n);
      if (!(lhs == rhs)) {
        rec.pass = false;
        got << (got.str().empty() ? "" : "; ") << "mismatch at p=" << p;
      }
    }
    rec.got = rec.pass ? "all match" : got.str();
    out.push_back(rec);
  }
  return out;
}

bool lemma_suite_passes(int n, int r_max) {
  for (const auto& rec : lemma_suite(n, r_max))
    if (!rec.pass) return false;
  return true;
}

ThetaReduction reduce_theta_power(int m, int n) {
  if (m < 0) throw std::domain_error("reduce_theta_power: m must be >= 0");
  if (n < 3 || n % 2 == 0)
    throw std::domain_error("reduce_theta_power: n must be odd and >= 3");
  ThetaReduction out;
  out.r = m / n;
  out.p = m % n;
  out.coefficient = Rational(1) / factorial(out.r);
  return out;
}

bool qexp_factorization_check(const Rational& c, int n, int r_max) {
  if (r_max < 0) throw std::domain_error("qexp_factorization_check: r_max < 0");
  const int order = r_max * n + n - 1;
  // Left side: push every exp_q term through the theta-power reduction.
  // Coefficients are collected on the monomials z^r theta^(p).
  std::map<std::pair<int, int>, CycloNum> lhs;
  GradedElem series = qexp(RatQ(c), order);
  for (const auto& [mono, coeff] : series.terms()) {
    ThetaReduction red = reduce_theta_power(mono.a, n);
    // coeff * [a]_q! recovers the bracketed-power coefficient exactly.
    LimitResult lim = limit_at_root(coeff * qfact(mono.a), n);
    CycloNum contrib = lim.value * CycloNum(n, red.coefficient);
    auto key = std::make_pair(red.r, red.p);
    auto it = lhs.find(key);
    if (it == lhs.end())
      lhs.emplace(key, contrib);
    else
      it->second += contrib;
  }
  // Right side: exp(z C^n) times the truncated series sum_{p<n} C^p theta^(p).
  std::map<std::pair<int, int>, CycloNum> rhs;
  for (int r = 0; r <= r_max; ++r) {
    CycloNum zc(n, rat_pow(c, static_cast<long>(n) * r) / factorial(r));
    for (int p = 0; p < n; ++p)
      rhs.emplace(std::make_pair(r, p), zc * CycloNum(n, rat_pow(c, p)));
  }
  for (auto it = lhs.begin(); it != lhs.end();) {
    if (it->second.is_zero())
      it = lhs.erase(it);
    else
      ++it;
  }
  for (auto it = rhs.begin(); it != rhs.end();) {
    if (it->second.is_zero())
      it = rhs.erase(it);
    else
      ++it;
  }
  return lhs == rhs;
}

}  // namespace qcalc

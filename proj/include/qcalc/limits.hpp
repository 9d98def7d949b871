#ifndef QCALC_LIMITS_HPP
#define QCALC_LIMITS_HPP

#include <string>
#include <vector>

#include "qcalc/cyclotomic.hpp"

namespace qcalc {

/// Value of a q -> zeta_n limit together with the number of Phi_n factors
/// cancelled between numerator and denominator on the way.
struct LimitResult {
  CycloNum value;
  int cancelled_order = 0;
};

/// Exact limit of num/den as q -> zeta_n: removes the largest common power
/// of Phi_n from both polynomials, then evaluates. Throws PoleAtRoot when
/// the denominator still vanishes afterwards. Total for rational functions.
LimitResult limit_quotient(const Poly& num, const Poly& den, int n);

/// Limit of a RatQ. Canonical RatQ values are already coprime, so whenever
/// eval_at_root succeeds this agrees with it and cancelled_order is 0.
LimitResult limit_at_root(const RatQ& x, int n);

/// One record per lemma per r, machine-readable.
struct LemmaRecord {
  std::string name;
  int n = 0;
  int r = 0;
  std::string expected;
  std::string got;
  int cancelled_order = 0;
  bool pass = false;
};

/// Verifies, for 1 <= r <= r_max: L [rn]/[n] = r; L [rn]!/([n]![(r-1)n]!) = r;
/// L [rn]!/([n]!)^r = r!; and [rn+p] = [p] at zeta_n for 1 <= p <= n-1.
std::vector<LemmaRecord> lemma_suite(int n, int r_max);

bool lemma_suite_passes(int n, int r_max);

/// L theta^(m) = (z^r / r!) theta^(p) with m = r*n + p, 0 <= p <= n-1.
struct ThetaReduction {
  int r = 0;
  int p = 0;
  Rational coefficient;  // 1 / r!
};

ThetaReduction reduce_theta_power(int m, int n);

/// Expands exp_q(C theta) to order r_max*n + n - 1, pushes every term
/// through the theta-power reduction, and compares against
/// exp(z C^n) * sum_{p<n} C^p theta^(p), all scalars exact in Q(zeta_n).
bool qexp_factorization_check(const Rational& c, int n, int r_max);

}  // namespace qcalc

#endif

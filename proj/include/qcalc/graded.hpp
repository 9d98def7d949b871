#ifndef QCALC_GRADED_HPP
#define QCALC_GRADED_HPP

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "qcalc/ratq.hpp"

namespace qcalc {

/// Generators of the generic-q algebra: theta (grade 1), eps (grade 1) and
/// the left derivative D (grade -1).
enum class Gen { Theta, Eps, D };

int gen_grade(Gen g);

/// Normal-ordered word theta^a eps^e D^b. Ordering of the map key is the
/// lexicographic (a, e, b) order used for canonical rendering.
struct Monomial {
  int a = 0;
  int e = 0;
  int b = 0;
  int grade() const { return a + e - b; }
  auto operator<=>(const Monomial&) const = default;
};

/// Finite linear combination of normal-ordered monomials with RatQ
/// coefficients. Zero coefficients are never stored.
class GradedElem {
 public:
  GradedElem() = default;
  static GradedElem zero() { return GradedElem(); }
  static GradedElem one() { return scalar(RatQ(1)); }
  static GradedElem scalar(const RatQ& c) { return term(Monomial{}, c); }
  static GradedElem term(const Monomial& m, const RatQ& c);
  static GradedElem generator(Gen g);

  const std::map<Monomial, RatQ>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_scalar() const;
  RatQ scalar_part() const;  // coefficient of the empty monomial
  void add_term(const Monomial& m, const RatQ& c);

  GradedElem operator-() const;
  GradedElem& operator+=(const GradedElem& o);
  GradedElem& operator-=(const GradedElem& o);
  friend GradedElem operator+(GradedElem a, const GradedElem& b) { return a += b; }
  friend GradedElem operator-(GradedElem a, const GradedElem& b) { return a -= b; }
  friend GradedElem operator*(const GradedElem& a, const GradedElem& b);
  friend GradedElem operator*(const RatQ& s, const GradedElem& x);
  friend bool operator==(const GradedElem& a, const GradedElem& b) {
    return a.terms_ == b.terms_;
  }
  GradedElem pow(unsigned e) const;

  /// Splits into pure-grade components keyed by grade.
  std::map<int, GradedElem> grade_components() const;

  /// Canonical rendering, terms sorted by (a, e, b).
  std::string str() const;

 private:
  std::map<Monomial, RatQ> terms_;
};

/// Right/left multiplication by a single generator, normal-ordering the
/// result with the rules D theta = q theta D + 1, D eps = q^{-1} eps D,
/// eps theta = q^{-1} theta eps.
GradedElem mul_right(const GradedElem& x, Gen g);
GradedElem mul_left(Gen g, const GradedElem& x);

using Atom = std::variant<Gen, RatQ>;
using Word = std::vector<Atom>;

/// Normal form of a word, folding factors left to right.
GradedElem normal_order(const Word& w);
/// Same normal form reached by folding right to left; used to exercise
/// confluence of the rewrite rules.
GradedElem normal_order_reversed(const Word& w);

/// [A,B]_gamma = AB - q^{-g(A)g(B)} BA on pure-grade parts, extended
/// bilinearly to mixed-grade inputs.
GradedElem graded_bracket(const GradedElem& a, const GradedElem& b);

/// Derivative of a polynomial in theta: theta^m -> [m]_q theta^{m-1}.
/// Inputs containing eps or D are rejected.
GradedElem d_theta(const GradedElem& f);

/// Truncated q-exponential sum_{m=0..order} C^m theta^(m), where
/// theta^(m) = theta^m / [m]_q!.
GradedElem qexp(const RatQ& c, int order);

/// normal_order(D theta - theta D); equals 1 - (1-q) theta D.
GradedElem qN();

/// Checks sum_{m=1..r} (1-q)^m/(1-q^m) * [r]_q!/[r-m]_q! == r exactly.
bool identity_eq15(int r);

/// Verifies G_L theta = (theta + eps) G_L order by order in eps up to eps^K,
/// with G_L = sum_m eps^(m) D^m.
bool translate_check(int order_k);

/// theta^(m) = theta^m / [m]_q! as an element.
GradedElem theta_divided_power(int m);

}  // namespace qcalc

#endif

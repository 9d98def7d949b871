#ifndef QCALC_FSUSY_HPP
#define QCALC_FSUSY_HPP

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "qcalc/cyclotomic.hpp"
#include "qcalc/graded.hpp"

namespace qcalc {

/// Generators of the root-of-unity algebra. z, zeps and dz have grade zero;
/// theta and eps have grade 1, dtheta grade -1.
enum class FsGen { Z, Zeps, Theta, Eps, Dtheta, Dz };

/// Normal-ordered word z^k zeps^j theta^p eps^e dtheta^s dz^t with
/// p, e, s < n (theta^n = eps^n = dtheta^n = 0; offending monomials vanish).
struct FsMonomial {
  int k = 0;
  int j = 0;
  int p = 0;
  int e = 0;
  int s = 0;
  int t = 0;
  int grade() const { return p + e - s; }
  auto operator<=>(const FsMonomial&) const = default;
};

/// Finite linear combination of FsMonomials with coefficients in Q(zeta_n).
class FsElem {
 public:
  explicit FsElem(int n);
  static FsElem zero(int n) { return FsElem(n); }
  static FsElem one(int n) { return scalar(n, CycloNum(n, Rational(1))); }
  static FsElem scalar(int n, const CycloNum& c);
  static FsElem term(int n, const FsMonomial& m, const CycloNum& c);
  static FsElem generator(int n, FsGen g);

  int n() const { return n_; }
  const std::map<FsMonomial, CycloNum>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_scalar() const;
  CycloNum scalar_part() const;
  /// Drops zero coefficients and monomials with p, e or s >= n.
  void add_term(const FsMonomial& m, const CycloNum& c);

  FsElem operator-() const;
  FsElem& operator+=(const FsElem& o);
  FsElem& operator-=(const FsElem& o);
  friend FsElem operator+(FsElem a, const FsElem& b) { return a += b; }
  friend FsElem operator-(FsElem a, const FsElem& b) { return a -= b; }
  friend FsElem operator*(const FsElem& a, const FsElem& b);
  friend FsElem operator*(const CycloNum& s, const FsElem& x);
  friend bool operator==(const FsElem& a, const FsElem& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }
  FsElem pow(unsigned e) const;

  std::map<int, FsElem> grade_components() const;

  /// Canonical rendering, monomials ordered by (k, j, p, e, s, t).
  std::string str() const;

 private:
  int n_;
  std::map<FsMonomial, CycloNum> terms_;
};

FsElem fs_mul_right(const FsElem& x, FsGen g);
FsElem fs_mul_left(FsGen g, const FsElem& x);

using FsAtom = std::variant<FsGen, CycloNum>;
using FsWord = std::vector<FsAtom>;

/// Normal form under: dtheta theta = q theta dtheta + 1, dz z = z dz + 1,
/// eps theta = q^{-1} theta eps, dtheta eps = q^{-1} eps dtheta; z, zeps, dz
/// commute with the graded generators and with each other apart from the
/// dz z rule.
FsElem fs_normal_order(int n, const FsWord& w);
FsElem fs_normal_order_reversed(int n, const FsWord& w);

/// Graded bracket at q = zeta_n; gamma = zeta^{-g g'} with integer grades.
FsElem fs_graded_bracket(const FsElem& a, const FsElem& b);

/// theta^(m) = theta^m / [m]_q! at zeta_n; requires m < n.
FsElem fs_theta_divided_power(int n, int m);
FsElem fs_eps_divided_power(int n, int m);

/// The total derivative D = dtheta + theta^(n-1) dz.
FsElem fs_D(int n);

/// Normal form of D^k, 1 <= k <= 2n. D^n reproduces dz.
FsElem fs_D_power(int n, int k);

/// Translation generator truncated at zeps-order r_max:
/// sum_{r<=r_max} (zeps dz)^r / r! * sum_{p<n} eps^(p) D^p.
FsElem g_L(int n, int r_max);

/// Verifies G_L z - (z + zeps + sum_{p=1..n-1} eps^(p) theta^(n-p)) G_L
/// has no terms of zeps-degree <= r_max.
bool fsusy_transform_check(int n, int r_max);

/// The limit map on theta/eps polynomials: theta^a eps^e with a = r n + p
/// goes to z^r/r! theta^(p) (and the eps analogue), coefficients pushed
/// through limit_at_root. Inputs containing D are rejected; PoleAtRoot
/// propagates when a coefficient diverges.
FsElem transfer_from_generic(const GradedElem& x, int n);

}  // namespace qcalc

#endif

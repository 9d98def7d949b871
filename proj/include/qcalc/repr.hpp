#ifndef QCALC_REPR_HPP
#define QCALC_REPR_HPP

#include <Eigen/Dense>
#include <complex>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "qcalc/cyclotomic.hpp"
#include "qcalc/graded.hpp"

namespace qcalc {

/// Finitely supported linear combination of eigenkets |m>, m >= 0, with
/// exact scalar amplitudes (RatQ at generic q, CycloNum at a root of unity).
/// No truncation is ever applied; operators act exactly on finite supports.
template <typename S>
class Ket {
 public:
  Ket() = default;
  static Ket basis(long m, const S& coeff) {
    Ket k;
    k.add(m, coeff);
    return k;
  }

  void add(long m, const S& c) {
    if (m < 0 || qcalc::is_zero(c)) return;
    auto [it, inserted] = amp_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (qcalc::is_zero(it->second)) amp_.erase(it);
    }
  }

  const std::map<long, S>& amplitudes() const { return amp_; }
  bool is_zero() const { return amp_.empty(); }
  friend bool operator==(const Ket& a, const Ket& b) { return a.amp_ == b.amp_; }
  friend Ket operator+(const Ket& a, const Ket& b) {
    Ket out = a;
    for (const auto& [m, c] : b.amp_) out.add(m, c);
    return out;
  }
  friend Ket operator-(const Ket& a, const Ket& b) {
    Ket out = a;
    for (const auto& [m, c] : b.amp_) out.add(m, -c);
    return out;
  }
  friend Ket operator*(const S& s, const Ket& k) {
    Ket out;
    for (const auto& [m, c] : k.amp_) out.add(m, s * c);
    return out;
  }

 private:
  std::map<long, S> amp_;
};

/// Basis operators at generic q: D |m> = |m-1>, theta |m> = [m+1]_q |m+1>,
/// q^N |m> = q^m |m>. N is the diagonal number operator N |m> = m |m>; it
/// has no finite normal form in the algebra and lives only here.
enum class KetOp { D, Theta, QN, N };

Ket<RatQ> act(KetOp op, const Ket<RatQ>& k);
/// theta^(m) |r> = ([r+m]_q!/([r]_q! [m]_q!)) |r+m>.
Ket<RatQ> act_theta_bracket(const Ket<RatQ>& k, int m);

/// Flat-space operators at q = zeta_n. dtheta kills |m> with m = 0 mod n;
/// z raises by n with factor r+1; dz lowers by n.
enum class RootOp { D, Theta, Dtheta, QN, Z, Dz };

Ket<CycloNum> act(RootOp op, const Ket<CycloNum>& k, int n);
Ket<CycloNum> act_theta_bracket(const Ket<CycloNum>& k, int m, int n);

/// Applies a normal-ordered element (theta/D monomials only) to a ket,
/// rightmost generator first. Used as an independent oracle for the
/// rewrite engine; eps terms are rejected.
Ket<RatQ> apply_elem(const GradedElem& x, const Ket<RatQ>& k);
Ket<RatQ> apply_word(const Word& w, const Ket<RatQ>& k);

/// Kets |r, p> of the product space V_HO (x) V^n, p < n.
class ProductKet {
 public:
  explicit ProductKet(int n);
  static ProductKet basis(int n, long r, int p, const CycloNum& coeff);

  int n() const { return n_; }
  void add(long r, int p, const CycloNum& c);
  const std::map<std::pair<long, int>, CycloNum>& amplitudes() const {
    return amp_;
  }
  bool is_zero() const { return amp_.empty(); }
  friend bool operator==(const ProductKet& a, const ProductKet& b) {
    return a.n_ == b.n_ && a.amp_ == b.amp_;
  }

 private:
  int n_;
  std::map<std::pair<long, int>, CycloNum> amp_;
};

/// Relabels |m> as |m div n, m mod n>; a bijection on basis kets.
ProductKet reduce_ket(const Ket<CycloNum>& k, int n);
Ket<CycloNum> expand_ket(const ProductKet& k);

enum class ProductOp { Z, Dz, Theta, Dtheta, D };

/// z, dz act on the oscillator label; theta, dtheta on the graded label;
/// D = 1 (x) dtheta + dz (x) theta^(n-1).
ProductKet act_product(ProductOp op, const ProductKet& k);

using NumericMatrix = Eigen::MatrixXcd;

/// Hermitian-representation annihilator on V^n:
/// a |p> = sqrt(sin(p pi/n)/sin(pi/n)) |p-1>.
NumericMatrix oscillator_a(int n);
/// Its raising partner, built from the same rule (not by transposition).
NumericMatrix oscillator_adag(int n);

/// Checks a a^dag - q^{-+1/2} a^dag a = q^{+-N/2} with theta = a^dag,
/// D = q^{N/2} a: exactly on basis kets (symbolic square root of q at
/// generic q, q_half(n) at a root of unity), and for the numeric matrices
/// with q^{1/2} = exp(i pi/n) to 1e-12 together with adjointness of a.
struct DefcrReport {
  bool exact_minus = false;
  bool exact_plus = false;
  bool has_numeric = false;
  double residual_minus = 0.0;
  double residual_plus = 0.0;
  double adjoint_residual = 0.0;
  bool numeric_pass = true;
  bool pass() const { return exact_minus && exact_plus && numeric_pass; }
};

DefcrReport defcr_check(std::optional<int> n, int cutoff);

/// Diagonal intertwiner between the weighted-raising representation and the
/// hermitian one: S a_B S^{-1} = a_h and S adag_B S^{-1} = adag_h. The
/// diagonal carries phases (moduli positive, s_0 = 1); conjugation residuals
/// are checked against 1e-10.
struct IntertwinerReport {
  std::vector<std::complex<double>> diag;
  double residual_a = 0.0;
  double residual_adag = 0.0;
  bool moduli_positive = false;
  bool pass = false;
};

IntertwinerReport similarity_intertwiner(int n);

/// Matrix of a named operator as JSON: exact CycloNum entry strings, or
/// [re, im] pairs when numeric is requested. Operators a and adag are the
/// n x n hermitian pair and are numeric-only.
nlohmann::json rep_matrix_json(int n, const std::string& op, int cutoff,
                               bool numeric);

}  // namespace qcalc

#endif

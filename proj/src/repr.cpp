#include "qcalc/repr.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qcalc/limits.hpp"

namespace qcalc {

Ket<RatQ> act(KetOp op, const Ket<RatQ>& k) {
  Ket<RatQ> out;
  for (const auto& [m, c] : k.amplitudes()) {
    switch (op) {
      case KetOp::D:
        if (m >= 1) out.add(m - 1, c);
        break;
      case KetOp::Theta:
        out.add(m + 1, c * qnum(static_cast<int>(m) + 1));
        break;
      case KetOp::QN:
        out.add(m, c * RatQ::q_pow(m));
        break;
      case KetOp::N:
        out.add(m, c * RatQ(m));
        break;
    }
  }
  return out;
}

Ket<RatQ> act_theta_bracket(const Ket<RatQ>& k, int mm) {
  if (mm < 0) throw std::domain_error("act_theta_bracket: m must be >= 0");
  Ket<RatQ> out;
  for (const auto& [m, c] : k.amplitudes()) {
    RatQ f = qfact(static_cast<int>(m) + mm) /
             (qfact(static_cast<int>(m)) * qfact(mm));
    out.add(m + mm, c * f);
  }
  return out;
}

Ket<CycloNum> act(RootOp op, const Ket<CycloNum>& k, int n) {
  Ket<CycloNum> out;
  for (const auto& [m, c] : k.amplitudes()) {
    switch (op) {
      case RootOp::D:
        if (m >= 1) out.add(m - 1, c);
        break;
      case RootOp::Theta:
        out.add(m + 1, c * qnum_at_root(static_cast<int>(m) + 1, n));
        break;
      case RootOp::Dtheta:
        if (m >= 1 && m % n != 0) out.add(m - 1, c);
        break;
      case RootOp::QN:
        out.add(m, c * CycloNum::zeta_pow(n, m));
        break;
      case RootOp::Z:
        out.add(m + n, c * CycloNum(n, Rational(m / n + 1)));
        break;
      case RootOp::Dz:
        if (m >= n) out.add(m - n, c);
        break;
    }
  }
  return out;
}

Ket<CycloNum> act_theta_bracket(const Ket<CycloNum>& k, int mm, int n) {
  if (mm < 0) throw std::domain_error("act_theta_bracket: m must be >= 0");
  Ket<CycloNum> out;
  for (const auto& [m, c] : k.amplitudes()) {
    // [m+mm]_q!/([m]_q! [mm]_q!) via the limit engine; the factorials can
    // vanish individually at zeta_n while the Gaussian-binomial ratio stays
    // finite.
    LimitResult lr = limit_quotient(
        qfact_poly(static_cast<int>(m) + mm),
        qfact_poly(static_cast<int>(m)) * qfact_poly(mm), n);
    out.add(m + mm, c * lr.value);
  }
  return out;
}

Ket<RatQ> apply_elem(const GradedElem& x, const Ket<RatQ>& k) {
  Ket<RatQ> out;
  for (const auto& [mono, coeff] : x.terms()) {
    if (mono.e != 0)
      throw std::invalid_argument("apply_elem: eps has no ket action");
    Ket<RatQ> cur = k;
    for (int i = 0; i < mono.b; ++i) cur = act(KetOp::D, cur);
    for (int i = 0; i < mono.a; ++i) cur = act(KetOp::Theta, cur);
    out = out + coeff * cur;
  }
  return out;
}

Ket<RatQ> apply_word(const Word& w, const Ket<RatQ>& k) {
  Ket<RatQ> cur = k;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (std::holds_alternative<Gen>(*it)) {
      Gen g = std::get<Gen>(*it);
      if (g == Gen::Eps)
        throw std::invalid_argument("apply_word: eps has no ket action");
      cur = act(g == Gen::D ? KetOp::D : KetOp::Theta, cur);
    } else {
      cur = std::get<RatQ>(*it) * cur;
    }
  }
  return cur;
}

ProductKet::ProductKet(int n) : n_(n) {
  if (n < 3 || n % 2 == 0)
    throw std::domain_error("ProductKet: n must be odd and >= 3");
}

ProductKet ProductKet::basis(int n, long r, int p, const CycloNum& coeff) {
  ProductKet k(n);
  k.add(r, p, coeff);
  return k;
}

void ProductKet::add(long r, int p, const CycloNum& c) {
  if (p < 0 || p >= n_)
    throw std::domain_error("ProductKet: label p out of range");
  if (r < 0 || c.is_zero()) return;
  auto key = std::make_pair(r, p);
  auto [it, inserted] = amp_.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) amp_.erase(it);
  }
}

ProductKet reduce_ket(const Ket<CycloNum>& k, int n) {
  ProductKet out(n);
  for (const auto& [m, c] : k.amplitudes())
    out.add(m / n, static_cast<int>(m % n), c);
  return out;
}

Ket<CycloNum> expand_ket(const ProductKet& k) {
  Ket<CycloNum> out;
  for (const auto& [rp, c] : k.amplitudes())
    out.add(rp.first * k.n() + rp.second, c);
  return out;
}

ProductKet act_product(ProductOp op, const ProductKet& k) {
  const int n = k.n();
  ProductKet out(n);
  for (const auto& [rp, c] : k.amplitudes()) {
    const long r = rp.first;
    const int p = rp.second;
    switch (op) {
      case ProductOp::Z:
        out.add(r + 1, p, c * CycloNum(n, Rational(r + 1)));
        break;
      case ProductOp::Dz:
        if (r >= 1) out.add(r - 1, p, c);
        break;
      case ProductOp::Theta:
        if (p + 1 < n) out.add(r, p + 1, c * qnum_at_root(p + 1, n));
        break;
      case ProductOp::Dtheta:
        if (p >= 1) out.add(r, p - 1, c);
        break;
      case ProductOp::D:
        // 1 (x) dtheta + dz (x) theta^(n-1)
        if (p >= 1)
          out.add(r, p - 1, c);
        else if (r >= 1)
          out.add(r - 1, n - 1, c);
        break;
    }
  }
  return out;
}

namespace {

double sigma_ratio(int p, int n) {
  const double pi = std::numbers::pi;
  return std::sin(p * pi / n) / std::sin(pi / n);
}

}  // namespace

NumericMatrix oscillator_a(int n) {
  if (n < 3 || n % 2 == 0)
    throw std::domain_error("oscillator_a: n must be odd and >= 3");
  NumericMatrix a = NumericMatrix::Zero(n, n);
  for (int p = 1; p < n; ++p) a(p - 1, p) = std::sqrt(sigma_ratio(p, n));
  return a;
}

NumericMatrix oscillator_adag(int n) {
  if (n < 3 || n % 2 == 0)
    throw std::domain_error("oscillator_adag: n must be odd and >= 3");
  NumericMatrix ad = NumericMatrix::Zero(n, n);
  for (int p = 0; p + 1 < n; ++p) ad(p + 1, p) = std::sqrt(sigma_ratio(p + 1, n));
  return ad;
}

DefcrReport defcr_check(std::optional<int> n, int cutoff) {
  if (cutoff < 2) throw std::domain_error("defcr_check: cutoff must be >= 2");
  DefcrReport rep;
  rep.exact_minus = true;
  rep.exact_plus = true;
  if (!n) {
    // Symbolic square root: the indeterminate stands for q^{1/2}, q = s^2.
    auto snum = [](int m) {
      Poly p;
      for (int i = 0; i < m; ++i) p += Poly::monomial(1, 2 * i);
      return RatQ(p);
    };
    for (int m = 0; m < cutoff; ++m) {
      RatQ aad = snum(m + 1) * RatQ::q_pow(-m);
      RatQ ada = snum(m) * RatQ::q_pow(-(m - 1));
      if (!(aad - RatQ::q_pow(-1) * ada == RatQ::q_pow(m))) rep.exact_minus = false;
      if (!(aad - RatQ::q_pow(1) * ada == RatQ::q_pow(-m))) rep.exact_plus = false;
    }
    return rep;
  }
  const int nn = *n;
  const CycloNum s = q_half(nn);
  for (int m = 0; m < cutoff; ++m) {
    CycloNum aad = qnum_at_root(m + 1, nn) * s.pow(-m);
    CycloNum ada = qnum_at_root(m, nn) * s.pow(-(m - 1));
    if (!(aad - s.pow(-1) * ada == s.pow(m))) rep.exact_minus = false;
    if (!(aad - s * ada == s.pow(-m))) rep.exact_plus = false;
  }
  // Numeric side: the hermitian matrices with q^{1/2} = exp(i pi / n).
  rep.has_numeric = true;
  const std::complex<double> u = std::polar(1.0, std::numbers::pi / nn);
  NumericMatrix a = oscillator_a(nn);
  NumericMatrix ad = oscillator_adag(nn);
  NumericMatrix qn_plus = NumericMatrix::Zero(nn, nn);
  NumericMatrix qn_minus = NumericMatrix::Zero(nn, nn);
  for (int p = 0; p < nn; ++p) {
    qn_plus(p, p) = std::pow(u, p);
    qn_minus(p, p) = std::pow(u, -p);
  }
  rep.residual_minus = (a * ad - ad * a / u - qn_plus).norm();
  rep.residual_plus = (a * ad - ad * a * u - qn_minus).norm();
  rep.adjoint_residual = (ad - a.adjoint()).norm();
  rep.numeric_pass = rep.residual_minus < 1e-12 && rep.residual_plus < 1e-12 &&
                     rep.adjoint_residual < 1e-12;
  return rep;
}

IntertwinerReport similarity_intertwiner(int n) {
  const std::complex<double> u = std::polar(1.0, std::numbers::pi / n);
  NumericMatrix a_b = NumericMatrix::Zero(n, n);
  NumericMatrix adag_b = NumericMatrix::Zero(n, n);
  for (int p = 1; p < n; ++p) {
    a_b(p - 1, p) = std::pow(u, -(p - 1));  // q^{-N/2} dtheta
    adag_b(p, p - 1) = qnum_at_root(p, n).to_complex();
  }
  IntertwinerReport rep;
  rep.diag.assign(static_cast<size_t>(n), {1.0, 0.0});
  for (int p = 1; p < n; ++p)
    rep.diag[static_cast<size_t>(p)] = rep.diag[static_cast<size_t>(p - 1)] *
                                       std::pow(u, -(p - 1)) /
                                       std::sqrt(sigma_ratio(p, n));
  NumericMatrix s_mat = NumericMatrix::Zero(n, n);
  for (int p = 0; p < n; ++p) s_mat(p, p) = rep.diag[static_cast<size_t>(p)];
  NumericMatrix s_inv = s_mat.inverse();
  rep.residual_a = (s_mat * a_b * s_inv - oscillator_a(n)).norm();
  rep.residual_adag = (s_mat * adag_b * s_inv - oscillator_adag(n)).norm();
  rep.moduli_positive = true;
  for (const auto& d : rep.diag)
    if (!(std::abs(d) > 0.0)) rep.moduli_positive = false;
  rep.pass = rep.moduli_positive && rep.residual_a < 1e-10 &&
             rep.residual_adag < 1e-10;
  return rep;
}

namespace {

nlohmann::json complex_entry(const std::complex<double>& v) {
  return nlohmann::json::array({v.real(), v.imag()});
}

}  // namespace

nlohmann::json rep_matrix_json(int n, const std::string& op, int cutoff,
                               bool numeric) {
  nlohmann::json out;
  out["operator"] = op;
  out["n"] = n;
  if (op == "a" || op == "adag") {
    if (!numeric)
      throw std::invalid_argument("operator " + op + " is numeric-only");
    NumericMatrix m = op == "a" ? oscillator_a(n) : oscillator_adag(n);
    out["cutoff"] = n;
    out["numeric"] = true;
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < n; ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (int j = 0; j < n; ++j) row.push_back(complex_entry(m(i, j)));
      rows.push_back(row);
    }
    out["entries"] = rows;
    return out;
  }
  RootOp rop;
  if (op == "theta") rop = RootOp::Theta;
  else if (op == "dtheta") rop = RootOp::Dtheta;
  else if (op == "D") rop = RootOp::D;
  else if (op == "qN") rop = RootOp::QN;
  else if (op == "z") rop = RootOp::Z;
  else if (op == "dz") rop = RootOp::Dz;
  else throw std::invalid_argument("unknown operator: " + op);
  out["cutoff"] = cutoff;
  out["numeric"] = numeric;
  // column j of the operator on span{|0>, ..., |cutoff-1>}
  std::vector<std::vector<CycloNum>> cols;
  for (int j = 0; j < cutoff; ++j) {
    Ket<CycloNum> col = act(rop, Ket<CycloNum>::basis(j, CycloNum(n, Rational(1))), n);
    std::vector<CycloNum> entries(static_cast<size_t>(cutoff), CycloNum(n));
    for (const auto& [m, c] : col.amplitudes())
      if (m < cutoff) entries[static_cast<size_t>(m)] = c;
    cols.push_back(std::move(entries));
  }
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < cutoff; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < cutoff; ++j) {
      const CycloNum& v = cols[static_cast<size_t>(j)][static_cast<size_t>(i)];
      if (numeric)
        row.push_back(complex_entry(v.to_complex()));
      else
        row.push_back(v.str());
    }
    rows.push_back(row);
  }
  out["entries"] = rows;
  return out;
}

}  // namespace qcalc

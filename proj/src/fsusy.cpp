#include "qcalc/fsusy.hpp"

#include <sstream>
#include <stdexcept>

#include "qcalc/limits.hpp"

namespace qcalc {

namespace {

int check_fs_n(int n) {
  if (n < 3 || n % 2 == 0)
    throw std::domain_error("FsElem: n must be odd and >= 3");
  return n;
}

}  // namespace

FsElem::FsElem(int n) : n_(check_fs_n(n)) {}

FsElem FsElem::scalar(int n, const CycloNum& c) {
  return term(n, FsMonomial{}, c);
}

FsElem FsElem::term(int n, const FsMonomial& m, const CycloNum& c) {
  FsElem out(n);
  out.add_term(m, c);
  return out;
}

FsElem FsElem::generator(int n, FsGen g) {
  FsMonomial m;
  switch (g) {
    case FsGen::Z: m.k = 1; break;
    case FsGen::Zeps: m.j = 1; break;
    case FsGen::Theta: m.p = 1; break;
    case FsGen::Eps: m.e = 1; break;
    case FsGen::Dtheta: m.s = 1; break;
    case FsGen::Dz: m.t = 1; break;
  }
  return term(n, m, CycloNum(n, Rational(1)));
}

bool FsElem::is_scalar() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first == FsMonomial{});
}

CycloNum FsElem::scalar_part() const {
  auto it = terms_.find(FsMonomial{});
  return it == terms_.end() ? CycloNum(n_) : it->second;
}

void FsElem::add_term(const FsMonomial& m, const CycloNum& c) {
  if (c.n() != n_) throw std::domain_error("FsElem: mixed cyclotomic orders");
  if (m.p >= n_ || m.e >= n_ || m.s >= n_) return;  // nilpotent sector
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FsElem FsElem::operator-() const {
  FsElem out(n_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

FsElem& FsElem::operator+=(const FsElem& o) {
  if (o.n_ != n_) throw std::domain_error("FsElem: mixed cyclotomic orders");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

FsElem& FsElem::operator-=(const FsElem& o) {
  if (o.n_ != n_) throw std::domain_error("FsElem: mixed cyclotomic orders");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

FsElem operator*(const CycloNum& s, const FsElem& x) {
  FsElem out(x.n_);
  for (const auto& [m, c] : x.terms_) out.add_term(m, s * c);
  return out;
}

FsElem fs_mul_right(const FsElem& x, FsGen g) {
  const int n = x.n();
  FsElem out(n);
  for (const auto& [m, c] : x.terms()) {
    FsMonomial t;
    switch (g) {
      case FsGen::Z:
        // dz^t z = z dz^t + t dz^{t-1}; everything else commutes with z.
        t = m; t.k += 1;
        out.add_term(t, c);
        if (m.t >= 1) {
          t = m; t.t -= 1;
          out.add_term(t, c * CycloNum(n, Rational(m.t)));
        }
        break;
      case FsGen::Zeps:
        t = m; t.j += 1;
        out.add_term(t, c);
        break;
      case FsGen::Theta:
        // dtheta^s theta = q^s theta dtheta^s + [s]_q dtheta^{s-1};
        // eps^e theta = q^{-e} theta eps^e.
        t = m; t.p += 1;
        out.add_term(t, c * CycloNum::zeta_pow(n, m.s - m.e));
        if (m.s >= 1) {
          t = m; t.s -= 1;
          out.add_term(t, c * qnum_at_root(m.s, n));
        }
        break;
      case FsGen::Eps:
        t = m; t.e += 1;
        out.add_term(t, c * CycloNum::zeta_pow(n, -m.s));
        break;
      case FsGen::Dtheta:
        t = m; t.s += 1;
        out.add_term(t, c);
        break;
      case FsGen::Dz:
        t = m; t.t += 1;
        out.add_term(t, c);
        break;
    }
  }
  return out;
}

FsElem fs_mul_left(FsGen g, const FsElem& x) {
  const int n = x.n();
  FsElem out(n);
  for (const auto& [m, c] : x.terms()) {
    FsMonomial t;
    switch (g) {
      case FsGen::Z:
        t = m; t.k += 1;
        out.add_term(t, c);
        break;
      case FsGen::Zeps:
        t = m; t.j += 1;
        out.add_term(t, c);
        break;
      case FsGen::Theta:
        t = m; t.p += 1;
        out.add_term(t, c);
        break;
      case FsGen::Eps:
        // eps theta^p = q^{-p} theta^p eps
        t = m; t.e += 1;
        out.add_term(t, c * CycloNum::zeta_pow(n, -m.p));
        break;
      case FsGen::Dtheta:
        // dtheta theta^p = q^p theta^p dtheta + [p]_q theta^{p-1};
        // dtheta eps^e = q^{-e} eps^e dtheta.
        t = m; t.s += 1;
        out.add_term(t, c * CycloNum::zeta_pow(n, m.p - m.e));
        if (m.p >= 1) {
          t = m; t.p -= 1;
          out.add_term(t, c * qnum_at_root(m.p, n));
        }
        break;
      case FsGen::Dz:
        // dz z^k = z^k dz + k z^{k-1}
        t = m; t.t += 1;
        out.add_term(t, c);
        if (m.k >= 1) {
          t = m; t.k -= 1;
          out.add_term(t, c * CycloNum(n, Rational(m.k)));
        }
        break;
    }
  }
  return out;
}

FsElem operator*(const FsElem& a, const FsElem& b) {
  if (a.n_ != b.n_) throw std::domain_error("FsElem: mixed cyclotomic orders");
  FsElem out(a.n_);
  for (const auto& [mb, cb] : b.terms_) {
    FsElem acc(a.n_);
    for (const auto& [ma, ca] : a.terms_) acc.add_term(ma, ca * cb);
    for (int i = 0; i < mb.k; ++i) acc = fs_mul_right(acc, FsGen::Z);
    for (int i = 0; i < mb.j; ++i) acc = fs_mul_right(acc, FsGen::Zeps);
    for (int i = 0; i < mb.p; ++i) acc = fs_mul_right(acc, FsGen::Theta);
    for (int i = 0; i < mb.e; ++i) acc = fs_mul_right(acc, FsGen::Eps);
    for (int i = 0; i < mb.s; ++i) acc = fs_mul_right(acc, FsGen::Dtheta);
    for (int i = 0; i < mb.t; ++i) acc = fs_mul_right(acc, FsGen::Dz);
    out += acc;
  }
  return out;
}

FsElem FsElem::pow(unsigned e) const {
  FsElem out = one(n_);
  for (unsigned i = 0; i < e; ++i) out = out * *this;
  return out;
}

std::map<int, FsElem> FsElem::grade_components() const {
  std::map<int, FsElem> out;
  for (const auto& [m, c] : terms_) {
    auto it = out.find(m.grade());
    if (it == out.end()) it = out.emplace(m.grade(), FsElem(n_)).first;
    it->second.add_term(m, c);
  }
  return out;
}

std::string FsElem::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    std::string body;
    auto app = [&body](const std::string& name, int e) {
      if (e == 0) return;
      if (!body.empty()) body += "*";
      body += name;
      if (e > 1) body += "^" + std::to_string(e);
    };
    app("z", m.k);
    app("zeps", m.j);
    app("theta", m.p);
    app("eps", m.e);
    app("dtheta", m.s);
    app("dz", m.t);
    bool unit = c == CycloNum(n_, Rational(1));
    if (body.empty())
      os << (c.is_rational() ? to_string(c.as_rational()) : c.str());
    else if (unit)
      os << body;
    else if (c.is_rational())
      os << to_string(c.as_rational()) << "*" << body;
    else
      os << "(" << c.str() << ")*" << body;
  }
  return os.str();
}

FsElem fs_normal_order(int n, const FsWord& w) {
  FsElem acc = FsElem::one(n);
  for (const auto& atom : w) {
    if (std::holds_alternative<FsGen>(atom))
      acc = fs_mul_right(acc, std::get<FsGen>(atom));
    else
      acc = std::get<CycloNum>(atom) * acc;
  }
  return acc;
}

FsElem fs_normal_order_reversed(int n, const FsWord& w) {
  FsElem acc = FsElem::one(n);
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (std::holds_alternative<FsGen>(*it))
      acc = fs_mul_left(std::get<FsGen>(*it), acc);
    else
      acc = std::get<CycloNum>(*it) * acc;
  }
  return acc;
}

FsElem fs_graded_bracket(const FsElem& a, const FsElem& b) {
  if (a.n() != b.n()) throw std::domain_error("FsElem: mixed cyclotomic orders");
  const int n = a.n();
  FsElem out(n);
  for (const auto& [ga, pa] : a.grade_components()) {
    for (const auto& [gb, pb] : b.grade_components()) {
      CycloNum gamma = CycloNum::zeta_pow(n, -static_cast<long>(ga) * gb);
      out += pa * pb - gamma * (pb * pa);
    }
  }
  return out;
}

FsElem fs_theta_divided_power(int n, int m) {
  if (m < 0 || m >= n)
    throw std::domain_error("fs_theta_divided_power: need 0 <= m < n");
  FsMonomial mono;
  mono.p = m;
  return FsElem::term(n, mono, qfact_at_root(m, n).inverse());
}

FsElem fs_eps_divided_power(int n, int m) {
  if (m < 0 || m >= n)
    throw std::domain_error("fs_eps_divided_power: need 0 <= m < n");
  FsMonomial mono;
  mono.e = m;
  return FsElem::term(n, mono, qfact_at_root(m, n).inverse());
}

FsElem fs_D(int n) {
  FsMonomial theta_dz;
  theta_dz.p = n - 1;
  theta_dz.t = 1;
  return FsElem::generator(n, FsGen::Dtheta) +
         FsElem::term(n, theta_dz, qfact_at_root(n - 1, n).inverse());
}

FsElem fs_D_power(int n, int k) {
  if (k < 1 || k > 2 * n)
    throw std::domain_error("fs_D_power: need 1 <= k <= 2n");
  FsElem d = fs_D(n);
  FsElem out = d;
  for (int i = 1; i < k; ++i) out = out * d;
  return out;
}

FsElem g_L(int n, int r_max) {
  if (r_max < 0) throw std::domain_error("g_L: r_max must be >= 0");
  // Powers of D, cached up to n-1.
  std::vector<FsElem> d_pow;
  d_pow.push_back(FsElem::one(n));
  for (int p = 1; p < n; ++p) d_pow.push_back(d_pow.back() * fs_D(n));
  FsElem grassmann_factor(n);
  for (int p = 0; p < n; ++p)
    grassmann_factor += fs_eps_divided_power(n, p) * d_pow[static_cast<size_t>(p)];
  FsElem out(n);
  for (int r = 0; r <= r_max; ++r) {
    FsMonomial zdz;
    zdz.j = r;
    zdz.t = r;
    FsElem exp_term =
        FsElem::term(n, zdz, CycloNum(n, Rational(1) / factorial(r)));
    out += exp_term * grassmann_factor;
  }
  return out;
}

bool fsusy_transform_check(int n, int r_max) {
  FsElem g = g_L(n, r_max);
  FsElem z = FsElem::generator(n, FsGen::Z);
  FsElem rhs = z + FsElem::generator(n, FsGen::Zeps);
  for (int p = 1; p < n; ++p)
    rhs += fs_eps_divided_power(n, p) * fs_theta_divided_power(n, n - p);
  FsElem residual = g * z - rhs * g;
  // zeps-degree > r_max is the truncation tail of exp(zeps dz).
  for (const auto& [m, c] : residual.terms()) {
    (void)c;
    if (m.j <= r_max) return false;
  }
  return true;
}

FsElem transfer_from_generic(const GradedElem& x, int n) {
  FsElem out(check_fs_n(n));
  for (const auto& [mono, coeff] : x.terms()) {
    if (mono.b != 0)
      throw std::invalid_argument("transfer_from_generic: input contains D");
    ThetaReduction th = reduce_theta_power(mono.a, n);
    ThetaReduction ep = reduce_theta_power(mono.e, n);
    // coeff * [a]_q! [e]_q! is the coefficient on theta^(a) eps^(e); its
    // limit exists whenever the term survives (PoleAtRoot otherwise).
    LimitResult lim = limit_at_root(coeff * qfact(mono.a) * qfact(mono.e), n);
    CycloNum scale = lim.value *
                     CycloNum(n, th.coefficient * ep.coefficient) *
                     (qfact_at_root(th.p, n) * qfact_at_root(ep.p, n)).inverse();
    FsMonomial m;
    m.k = th.r;
    m.j = ep.r;
    m.p = th.p;
    m.e = ep.p;
    out.add_term(m, scale);
  }
  return out;
}

}  // namespace qcalc

#include "qcalc/graded.hpp"

#include <sstream>
#include <stdexcept>

namespace qcalc {

int gen_grade(Gen g) {
  switch (g) {
    case Gen::Theta:
    case Gen::Eps:
      return 1;
    case Gen::D:
      return -1;
  }
  return 0;
}

GradedElem GradedElem::term(const Monomial& m, const RatQ& c) {
  GradedElem out;
  out.add_term(m, c);
  return out;
}

GradedElem GradedElem::generator(Gen g) {
  switch (g) {
    case Gen::Theta:
      return term(Monomial{1, 0, 0}, RatQ(1));
    case Gen::Eps:
      return term(Monomial{0, 1, 0}, RatQ(1));
    case Gen::D:
      return term(Monomial{0, 0, 1}, RatQ(1));
  }
  return zero();
}

bool GradedElem::is_scalar() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first == Monomial{});
}

RatQ GradedElem::scalar_part() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? RatQ() : it->second;
}

void GradedElem::add_term(const Monomial& m, const RatQ& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GradedElem GradedElem::operator-() const {
  GradedElem out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

GradedElem& GradedElem::operator+=(const GradedElem& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

GradedElem& GradedElem::operator-=(const GradedElem& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

GradedElem operator*(const RatQ& s, const GradedElem& x) {
  GradedElem out;
  for (const auto& [m, c] : x.terms_) out.add_term(m, s * c);
  return out;
}

GradedElem mul_right(const GradedElem& x, Gen g) {
  GradedElem out;
  for (const auto& [m, c] : x.terms()) {
    switch (g) {
      case Gen::Theta:
        // (theta^a eps^e D^b) theta =
        //   q^{b-e} theta^{a+1} eps^e D^b + [b]_q theta^a eps^e D^{b-1}
        out.add_term(Monomial{m.a + 1, m.e, m.b},
                     c * RatQ::q_pow(m.b - m.e));
        if (m.b >= 1)
          out.add_term(Monomial{m.a, m.e, m.b - 1}, c * qnum(m.b));
        break;
      case Gen::Eps:
        // (theta^a eps^e D^b) eps = q^{-b} theta^a eps^{e+1} D^b
        out.add_term(Monomial{m.a, m.e + 1, m.b}, c * RatQ::q_pow(-m.b));
        break;
      case Gen::D:
        out.add_term(Monomial{m.a, m.e, m.b + 1}, c);
        break;
    }
  }
  return out;
}

GradedElem mul_left(Gen g, const GradedElem& x) {
  GradedElem out;
  for (const auto& [m, c] : x.terms()) {
    switch (g) {
      case Gen::Theta:
        out.add_term(Monomial{m.a + 1, m.e, m.b}, c);
        break;
      case Gen::Eps:
        // eps theta^a = q^{-a} theta^a eps
        out.add_term(Monomial{m.a, m.e + 1, m.b}, c * RatQ::q_pow(-m.a));
        break;
      case Gen::D:
        // D (theta^a eps^e D^b) =
        //   q^{a-e} theta^a eps^e D^{b+1} + [a]_q theta^{a-1} eps^e D^b
        out.add_term(Monomial{m.a, m.e, m.b + 1},
                     c * RatQ::q_pow(m.a - m.e));
        if (m.a >= 1)
          out.add_term(Monomial{m.a - 1, m.e, m.b}, c * qnum(m.a));
        break;
    }
  }
  return out;
}

GradedElem operator*(const GradedElem& a, const GradedElem& b) {
  GradedElem out;
  for (const auto& [mb, cb] : b.terms_) {
    // Push the right monomial into each left term generator by generator.
    GradedElem acc;
    for (const auto& [ma, ca] : a.terms_) acc.add_term(ma, ca * cb);
    for (int i = 0; i < mb.a; ++i) acc = mul_right(acc, Gen::Theta);
    for (int i = 0; i < mb.e; ++i) acc = mul_right(acc, Gen::Eps);
    for (int i = 0; i < mb.b; ++i) acc = mul_right(acc, Gen::D);
    out += acc;
  }
  return out;
}

GradedElem GradedElem::pow(unsigned e) const {
  GradedElem out = one();
  for (unsigned i = 0; i < e; ++i) out = out * *this;
  return out;
}

std::map<int, GradedElem> GradedElem::grade_components() const {
  std::map<int, GradedElem> out;
  for (const auto& [m, c] : terms_) out[m.grade()].add_term(m, c);
  return out;
}

std::string GradedElem::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    std::string cs = c.str();
    bool unit = c.is_one();
    std::string body;
    auto app = [&body](const std::string& name, int e) {
      if (e == 0) return;
      if (!body.empty()) body += "*";
      body += name;
      if (e > 1) body += "^" + std::to_string(e);
    };
    app("theta", m.a);
    app("eps", m.e);
    app("D", m.b);
    if (body.empty()) {
      os << cs;
    } else if (unit) {
      os << body;
    } else if (cs.find(' ') != std::string::npos ||
               cs.find('/') != std::string::npos) {
      os << "(" << cs << ")*" << body;
    } else {
      os << cs << "*" << body;
    }
  }
  return os.str();
}

GradedElem normal_order(const Word& w) {
  GradedElem acc = GradedElem::one();
  for (const auto& atom : w) {
    if (std::holds_alternative<Gen>(atom))
      acc = mul_right(acc, std::get<Gen>(atom));
    else
      acc = std::get<RatQ>(atom) * acc;
  }
  return acc;
}

GradedElem normal_order_reversed(const Word& w) {
  GradedElem acc = GradedElem::one();
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (std::holds_alternative<Gen>(*it))
      acc = mul_left(std::get<Gen>(*it), acc);
    else
      acc = std::get<RatQ>(*it) * acc;
  }
  return acc;
}

GradedElem graded_bracket(const GradedElem& a, const GradedElem& b) {
  GradedElem out;
  for (const auto& [ga, pa] : a.grade_components()) {
    for (const auto& [gb, pb] : b.grade_components()) {
      RatQ gamma = RatQ::q_pow(-static_cast<long>(ga) * gb);
      out += pa * pb - gamma * (pb * pa);
    }
  }
  return out;
}

GradedElem d_theta(const GradedElem& f) {
  GradedElem out;
  for (const auto& [m, c] : f.terms()) {
    if (m.e != 0 || m.b != 0)
      throw std::invalid_argument("d_theta: input must be a polynomial in theta");
    if (m.a >= 1) out.add_term(Monomial{m.a - 1, 0, 0}, c * qnum(m.a));
  }
  return out;
}

GradedElem qexp(const RatQ& c, int order) {
  if (order < 0) throw std::domain_error("qexp: order must be >= 0");
  GradedElem out;
  for (int m = 0; m <= order; ++m)
    out.add_term(Monomial{m, 0, 0}, c.pow(m) / qfact(m));
  return out;
}

GradedElem theta_divided_power(int m) {
  if (m < 0) throw std::domain_error("theta_divided_power: m must be >= 0");
  return GradedElem::term(Monomial{m, 0, 0}, qfact(m).inverse());
}

GradedElem qN() {
  return normal_order({Gen::D, Gen::Theta}) - normal_order({Gen::Theta, Gen::D});
}

bool identity_eq15(int r) {
  if (r < 1) throw std::domain_error("identity_eq15: r must be >= 1");
  RatQ one_minus_q = RatQ(1) - RatQ::q();
  RatQ sum;
  for (int m = 1; m <= r; ++m) {
    // (1-q)^m / (1-q^m) * [r]_q!/[r-m]_q!
    RatQ falling = qfact(r) / qfact(r - m);
    sum += one_minus_q.pow(m) / (RatQ(1) - RatQ::q_pow(m)) * falling;
  }
  return sum == RatQ(r);
}

bool translate_check(int order_k) {
  if (order_k < 0) throw std::domain_error("translate_check: order must be >= 0");
  GradedElem g_l;
  for (int m = 0; m <= order_k; ++m)
    g_l.add_term(Monomial{0, m, m}, qfact(m).inverse());
  GradedElem theta = GradedElem::generator(Gen::Theta);
  GradedElem eps = GradedElem::generator(Gen::Eps);
  GradedElem residual = g_l * theta - (theta + eps) * g_l;
  // Terms of eps-degree > order_k are truncation artifacts of the partial
  // G_L sum; everything at degree <= order_k must cancel exactly.
  for (const auto& [m, c] : residual.terms()) {
    (void)c;
    if (m.e <= order_k) return false;
  }
  return true;
}

}  // namespace qcalc

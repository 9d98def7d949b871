#include "qcalc/verify.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <sstream>

#include "qcalc/limits.hpp"
#include "qcalc/repr.hpp"

namespace qcalc {

std::uint64_t default_seed() {
  if (const char* env = std::getenv("QCALC_SEED")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0') return v;
  }
  return 1729;
}

Word random_generic_word(std::mt19937_64& rng, int max_len) {
  static const std::vector<RatQ> scalars = {
      RatQ(2), RatQ(Rational(1, 2)), RatQ::q(), RatQ(1) + RatQ::q(),
      RatQ::q_pow(-1)};
  std::uniform_int_distribution<int> len(1, max_len);
  std::uniform_int_distribution<int> pick(0, 9);
  Word w;
  int l = len(rng);
  for (int i = 0; i < l; ++i) {
    int p = pick(rng);
    if (p < 3)
      w.emplace_back(Gen::Theta);
    else if (p < 6)
      w.emplace_back(Gen::D);
    else if (p < 8)
      w.emplace_back(Gen::Eps);
    else
      w.emplace_back(scalars[rng() % scalars.size()]);
  }
  return w;
}

FsWord random_fs_word(std::mt19937_64& rng, int n, int max_len) {
  const std::vector<CycloNum> scalars = {
      CycloNum(n, Rational(2)), CycloNum(n, Rational(1, 2)),
      CycloNum::zeta(n), CycloNum(n, Rational(1)) + CycloNum::zeta(n)};
  static const std::vector<FsGen> gens = {FsGen::Z,   FsGen::Zeps,
                                          FsGen::Theta, FsGen::Eps,
                                          FsGen::Dtheta, FsGen::Dz};
  std::uniform_int_distribution<int> len(1, max_len);
  std::uniform_int_distribution<int> pick(0, 7);
  FsWord w;
  int l = len(rng);
  for (int i = 0; i < l; ++i) {
    int p = pick(rng);
    if (p < 6)
      w.emplace_back(gens[static_cast<size_t>(p)]);
    else
      w.emplace_back(scalars[rng() % scalars.size()]);
  }
  return w;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Failure {
  std::ostringstream os;
  bool any = false;
  template <typename T>
  Failure& operator<<(const T& v) {
    if (any) os << "; ";
    os << v;
    any = true;
    return *this;
  }
};

// --- criterion bodies ------------------------------------------------------

bool crit_eq15(const VerifyOptions& opts, std::string& detail) {
  for (int r = 1; r <= opts.eq15_rmax; ++r) {
    if (!identity_eq15(r)) {
      detail = "fails at r=" + std::to_string(r);
      return false;
    }
  }
  detail = "exact for r=1.." + std::to_string(opts.eq15_rmax);
  return true;
}

bool crit_lemmas(const VerifyOptions&, std::string& detail,
                 std::vector<nlohmann::json>& records) {
  bool ok = true;
  for (int n : {3, 5, 7}) {
    for (const auto& rec : lemma_suite(n, 4)) {
      records.push_back({{"lemma", rec.name},
                         {"n", rec.n},
                         {"r", rec.r},
                         {"expected", rec.expected},
                         {"got", rec.got},
                         {"cancelled_order", rec.cancelled_order},
                         {"pass", rec.pass}});
      ok = ok && rec.pass;
    }
  }
  detail = ok ? "all four lemma families, n in {3,5,7}, r <= 4"
              : "see records";
  return ok;
}

bool crit_qexp_factorization(const VerifyOptions&, std::string& detail) {
  struct Case { long c; int n; int r_max; };
  Failure fail;
  for (Case c : {Case{1, 3, 2}, Case{2, 3, 2}, Case{1, 5, 1}, Case{3, 5, 1}}) {
    if (!qexp_factorization_check(Rational(c.c), c.n, c.r_max))
      fail << "C=" << c.c << " n=" << c.n << " r_max=" << c.r_max;
  }
  detail = fail.any ? fail.os.str() : "exact for the four stated (C, n, r_max)";
  return !fail.any;
}

GradedElem random_assoc_product(const Word& w, std::mt19937_64& rng) {
  if (w.empty()) return GradedElem::one();
  if (w.size() == 1) return normal_order(w);
  std::uniform_int_distribution<size_t> split(1, w.size() - 1);
  size_t s = split(rng);
  Word left(w.begin(), w.begin() + static_cast<long>(s));
  Word right(w.begin() + static_cast<long>(s), w.end());
  return random_assoc_product(left, rng) * random_assoc_product(right, rng);
}

FsElem random_assoc_product_fs(int n, const FsWord& w, std::mt19937_64& rng) {
  if (w.empty()) return FsElem::one(n);
  if (w.size() == 1) return fs_normal_order(n, w);
  std::uniform_int_distribution<size_t> split(1, w.size() - 1);
  size_t s = split(rng);
  FsWord left(w.begin(), w.begin() + static_cast<long>(s));
  FsWord right(w.begin() + static_cast<long>(s), w.end());
  return random_assoc_product_fs(n, left, rng) *
         random_assoc_product_fs(n, right, rng);
}

bool crit_confluence(const VerifyOptions& opts, std::string& detail) {
  std::mt19937_64 rng(opts.seed);
  for (int i = 0; i < 500; ++i) {
    Word w = random_generic_word(rng, 8);
    GradedElem lr = normal_order(w);
    if (!(lr == normal_order_reversed(w)) ||
        !(lr == random_assoc_product(w, rng))) {
      detail = "generic word #" + std::to_string(i) + " is order-dependent";
      return false;
    }
  }
  for (int i = 0; i < 300; ++i) {
    int n = (i % 2 == 0) ? 3 : 5;
    FsWord w = random_fs_word(rng, n, 8);
    FsElem lr = fs_normal_order(n, w);
    if (!(lr == fs_normal_order_reversed(n, w)) ||
        !(lr == random_assoc_product_fs(n, w, rng))) {
      detail = "fsusy word #" + std::to_string(i) + " is order-dependent";
      return false;
    }
  }
  detail = "500 generic + 300 fsusy words, three evaluation orders";
  return true;
}

bool crit_leibniz(const VerifyOptions& opts, std::string& detail) {
  std::mt19937_64 rng(opts.seed + 1);
  std::uniform_int_distribution<int> exp(0, 3);
  auto gbracket = [](const GradedElem& x, const GradedElem& y, const RatQ& g) {
    return x * y - g * (y * x);
  };
  for (int i = 0; i < 100; ++i) {
    Monomial ma{exp(rng), exp(rng), exp(rng)};
    Monomial mb{exp(rng), exp(rng), exp(rng)};
    Monomial mc{exp(rng), exp(rng), exp(rng)};
    GradedElem a = GradedElem::term(ma, RatQ(1));
    GradedElem b = GradedElem::term(mb, RatQ(1));
    GradedElem c = GradedElem::term(mc, RatQ(1));
    long ga = ma.grade(), gb = mb.grade(), gc = mc.grade();
    RatQ g_ab_c = RatQ::q_pow(-(ga + gb) * gc);
    RatQ g_a_bc = RatQ::q_pow(-ga * (gb + gc));
    RatQ g_bc = RatQ::q_pow(-gb * gc);
    RatQ g_ac = RatQ::q_pow(-ga * gc);
    RatQ g_ab = RatQ::q_pow(-ga * gb);
    GradedElem left1 = gbracket(a * b, c, g_ab_c);
    GradedElem right1 = a * gbracket(b, c, g_bc) + g_bc * (gbracket(a, c, g_ac) * b);
    GradedElem left2 = gbracket(a, b * c, g_a_bc);
    GradedElem right2 = gbracket(a, b, g_ab) * c + g_ab * (b * gbracket(a, c, g_ac));
    if (!(left1 == right1) || !(left2 == right2)) {
      detail = "triple #" + std::to_string(i) + " violates a Leibniz rule";
      return false;
    }
  }
  detail = "both rules on 100 random pure-grade triples";
  return true;
}

bool crit_fsusy_structure(const VerifyOptions&, std::string& detail) {
  Failure fail;
  for (int n : {3, 5}) {
    FsElem d = fs_D(n);
    FsElem z = FsElem::generator(n, FsGen::Z);
    FsElem comm = d * z - z * d;
    if (!(comm == fs_theta_divided_power(n, n - 1)))
      fail << "[D, z] != theta^(n-1) at n=" << n;
    FsElem dn = fs_D_power(n, n);
    if (!(dn == FsElem::generator(n, FsGen::Dz))) {
      FsElem residue = dn - FsElem::generator(n, FsGen::Dz);
      fail << "D^n - dz = " << residue.str() << " at n=" << n;
    }
  }
  detail = fail.any ? fail.os.str() : "[D,z] = theta^(n-1) and D^n = dz, n in {3,5}";
  return !fail.any;
}

bool crit_fsusy_transform(const VerifyOptions&, std::string& detail) {
  Failure fail;
  for (int n : {3, 5})
    if (!fsusy_transform_check(n, 2)) fail << "fails at n=" << n;
  detail = fail.any ? fail.os.str() : "G_L z = (z + zeps + sum) G_L to zeps-order 2";
  return !fail.any;
}

bool crit_ket_identities(const VerifyOptions&, std::string& detail) {
  Failure fail;
  for (long m = 0; m <= 30; ++m) {
    Ket<RatQ> ket = Ket<RatQ>::basis(m, RatQ(1));
    Ket<RatQ> dt = act(KetOp::D, act(KetOp::Theta, ket));
    Ket<RatQ> td = act(KetOp::Theta, act(KetOp::D, ket));
    if (!(dt - RatQ::q() * td == ket)) fail << "defining relation fails at m=" << m;
    if (!(dt - td == act(KetOp::QN, ket))) fail << "q^N = D theta - theta D fails at m=" << m;
  }
  for (long r = 0; r <= 12; ++r) {
    Ket<RatQ> ket = Ket<RatQ>::basis(r, RatQ(1));
    Ket<RatQ> td = act(KetOp::Theta, act(KetOp::D, ket));
    if (!(td == qnum(static_cast<int>(r)) * ket))
      fail << "theta D != [N]_q at r=" << r;
    for (long m = 0; m <= r; ++m) {
      Ket<RatQ> cur = ket;
      for (long i = 0; i < m; ++i) cur = act(KetOp::D, cur);
      for (long i = 0; i < m; ++i) cur = act(KetOp::Theta, cur);
      RatQ expect = qfact(static_cast<int>(r)) / qfact(static_cast<int>(r - m));
      if (!(cur == expect * ket))
        fail << "theta^m D^m fails at (m,r)=(" << m << "," << r << ")";
    }
  }
  // Bracketed-power coefficients via the two routes.
  for (long m = 0; m <= 10; ++m) {
    for (int k = 1; k <= 7; ++k) {
      Ket<RatQ> ket = Ket<RatQ>::basis(m, RatQ(1));
      Ket<RatQ> repeated = ket;
      for (int i = 0; i < k; ++i) repeated = act(KetOp::Theta, repeated);
      repeated = qfact(k).inverse() * repeated;
      if (!(act_theta_bracket(ket, k) == repeated))
        fail << "divided-power coefficient fails at (m,k)=(" << m << "," << k << ")";
    }
  }
  detail = fail.any ? fail.os.str()
                    : "defining/number/factorial relations for m <= 30; divided powers for m <= 10, k <= 7";
  return !fail.any;
}

bool crit_product_reduction(const VerifyOptions&, std::string& detail) {
  Failure fail;
  struct OpPair { RootOp flat; ProductOp prod; const char* name; };
  const OpPair ops[] = {{RootOp::Theta, ProductOp::Theta, "theta"},
                        {RootOp::Dtheta, ProductOp::Dtheta, "dtheta"},
                        {RootOp::D, ProductOp::D, "D"}};
  for (int n : {3, 5}) {
    for (long m = 0; m <= 3 * n; ++m) {
      Ket<CycloNum> ket = Ket<CycloNum>::basis(m, CycloNum(n, Rational(1)));
      for (const auto& op : ops) {
        ProductKet via_flat = reduce_ket(act(op.flat, ket, n), n);
        ProductKet via_product = act_product(op.prod, reduce_ket(ket, n));
        if (!(via_flat == via_product))
          fail << op.name << " fails to intertwine at (n,m)=(" << n << ","
               << m << ")";
      }
    }
  }
  detail = fail.any ? fail.os.str()
                    : "theta, dtheta, D intertwine through |m> -> |r,p> for n in {3,5}";
  return !fail.any;
}

bool crit_defcr(const VerifyOptions&, std::string& detail) {
  Failure fail;
  DefcrReport generic = defcr_check(std::nullopt, 10);
  if (!generic.pass()) fail << "generic exact check fails";
  std::ostringstream worst;
  double max_resid = 0.0;
  for (int n = 3; n <= 13; n += 2) {
    DefcrReport rep = defcr_check(n, 10);
    if (!rep.exact_minus || !rep.exact_plus)
      fail << "exact root-of-unity check fails at n=" << n;
    if (!rep.numeric_pass)
      fail << "numeric residuals exceed 1e-12 at n=" << n;
    max_resid = std::max({max_resid, rep.residual_minus, rep.residual_plus,
                          rep.adjoint_residual});
  }
  std::ostringstream ok;
  ok << "both signs exact (generic & odd n <= 13); max numeric residual "
     << max_resid;
  detail = fail.any ? fail.os.str() : ok.str();
  return !fail.any;
}

bool crit_translate(const VerifyOptions&, std::string& detail) {
  for (int k = 0; k <= 3; ++k) {
    if (!translate_check(k)) {
      detail = "fails at eps-order " + std::to_string(k);
      return false;
    }
  }
  detail = "G_L theta = (theta + eps) G_L to eps-order 3";
  return true;
}

struct CriterionSpec {
  int id;
  const char* name;
  double limit_s;
  std::function<bool(const VerifyOptions&, std::string&,
                     std::vector<nlohmann::json>&)> body;
};

const std::vector<CriterionSpec>& criteria() {
  auto plain = [](bool (*fn)(const VerifyOptions&, std::string&)) {
    return [fn](const VerifyOptions& o, std::string& d,
                std::vector<nlohmann::json>&) { return fn(o, d); };
  };
  static const std::vector<CriterionSpec> specs = {
      {1, "eq15-identity", 5.0, plain(crit_eq15)},
      {2, "limit-lemmas", 5.0, crit_lemmas},
      {3, "qexp-factorization", 10.0, plain(crit_qexp_factorization)},
      {4, "normal-order-confluence", 30.0, plain(crit_confluence)},
      {5, "leibniz-rules", 30.0, plain(crit_leibniz)},
      {6, "fsusy-structure", 10.0, plain(crit_fsusy_structure)},
      {7, "fsusy-transformation", 30.0, plain(crit_fsusy_transform)},
      {8, "ket-identities", 10.0, plain(crit_ket_identities)},
      {9, "product-reduction", 10.0, plain(crit_product_reduction)},
      {10, "deformed-oscillator", 5.0, plain(crit_defcr)},
      {11, "translation-generic", 10.0, plain(crit_translate)},
  };
  return specs;
}

}  // namespace

const std::vector<int>& all_criteria() {
  static const std::vector<int> ids = [] {
    std::vector<int> v;
    for (const auto& c : criteria()) v.push_back(c.id);
    return v;
  }();
  return ids;
}

std::vector<int> suite_criteria(const std::string& suite) {
  if (suite == "all") return all_criteria();
  if (suite == "eq15") return {1};
  if (suite == "lemmas") return {2, 3};
  if (suite == "fsusy") return {6, 7, 9};
  if (suite == "defcr") return {8, 10};
  throw std::invalid_argument(
      "unknown suite '" + suite + "' (expected lemmas, eq15, defcr, fsusy or all)");
}

CriterionResult run_criterion(int id, const VerifyOptions& opts) {
  for (const auto& spec : criteria()) {
    if (spec.id != id) continue;
    CriterionResult res;
    res.id = spec.id;
    res.name = spec.name;
    res.limit_s = spec.limit_s;
    auto start = Clock::now();
    res.pass = spec.body(opts, res.detail, res.records);
    res.ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    if (res.ms > spec.limit_s * 1000.0) {
      res.pass = false;
      res.detail += " [time limit " + std::to_string(spec.limit_s) + "s exceeded]";
    }
    return res;
  }
  throw std::invalid_argument("unknown criterion id " + std::to_string(id));
}

std::vector<CriterionResult> run_suite(const std::string& suite,
                                       const VerifyOptions& opts) {
  std::vector<CriterionResult> out;
  for (int id : suite_criteria(suite)) out.push_back(run_criterion(id, opts));
  return out;
}

}  // namespace qcalc

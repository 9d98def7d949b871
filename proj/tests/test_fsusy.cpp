#include <random>

#include "doctest.h"
#include "qcalc/fsusy.hpp"
#include "qcalc/verify.hpp"

using namespace qcalc;

namespace {

FsElem fs_mono(int n, FsMonomial m, const CycloNum& c) {
  return FsElem::term(n, m, c);
}

CycloNum one_of(int n) { return CycloNum(n, Rational(1)); }

}  // namespace

TEST_CASE("fsusy rewrite rules") {
  const int n = 3;
  // dtheta theta = q theta dtheta + 1
  FsElem lhs = fs_normal_order(n, {FsGen::Dtheta, FsGen::Theta});
  FsElem expect = fs_mono(n, FsMonomial{0, 0, 1, 0, 1, 0}, CycloNum::zeta(n)) +
                  FsElem::one(n);
  CHECK(lhs == expect);
  // theta * theta^{n-1} = 0
  FsElem t = FsElem::generator(n, FsGen::Theta);
  FsElem tn1 = fs_mono(n, FsMonomial{0, 0, n - 1, 0, 0, 0}, one_of(n));
  CHECK((t * tn1).is_zero());
  // dz z = z dz + 1
  CHECK(fs_normal_order(n, {FsGen::Dz, FsGen::Z}) ==
        fs_mono(n, FsMonomial{1, 0, 0, 0, 0, 1}, one_of(n)) + FsElem::one(n));
}

TEST_CASE("nilpotency is stable under products") {
  std::mt19937_64 rng(41);
  for (int n : {3, 5}) {
    for (int trial = 0; trial < 100; ++trial) {
      FsMonomial m1{static_cast<int>(rng() % 2), static_cast<int>(rng() % 2),
                    static_cast<int>(rng() % n), static_cast<int>(rng() % n),
                    static_cast<int>(rng() % n), static_cast<int>(rng() % 2)};
      FsMonomial m2{static_cast<int>(rng() % 2), static_cast<int>(rng() % 2),
                    static_cast<int>(rng() % n), static_cast<int>(rng() % n),
                    static_cast<int>(rng() % n), static_cast<int>(rng() % 2)};
      FsElem prod = fs_mono(n, m1, one_of(n)) * fs_mono(n, m2, one_of(n));
      for (const auto& [m, c] : prod.terms()) {
        (void)c;
        CHECK(m.p < n);
        CHECK(m.e < n);
        CHECK(m.s < n);
      }
      if (m1.p + m2.p >= n && m1.s == 0)
        CHECK(prod.is_zero());  // theta powers alone cannot fold back below n
    }
  }
}

TEST_CASE("fs_D and the commutator with z") {
  FsElem d3 = fs_D(3);
  FsElem expect = FsElem::generator(3, FsGen::Dtheta) +
                  qfact_at_root(2, 3).inverse() *
                      fs_mono(3, FsMonomial{0, 0, 2, 0, 0, 1}, one_of(3));
  CHECK(d3 == expect);
  for (int n : {3, 5, 7}) {
    FsElem d = fs_D(n);
    FsElem z = FsElem::generator(n, FsGen::Z);
    CHECK(d * z - z * d == fs_theta_divided_power(n, n - 1));
  }
}

TEST_CASE("D^n collapses to dz") {
  CHECK(fs_D_power(3, 1) == fs_D(3));
  for (int n : {3, 5, 7}) {
    FsElem dn = fs_D_power(n, n);
    CHECK(dn == FsElem::generator(n, FsGen::Dz));
    // the weaker canonical-pair statement [D^n, z] = 1 follows
    FsElem z = FsElem::generator(n, FsGen::Z);
    CHECK(dn * z - z * dn == FsElem::one(n));
    // one past n: D^{n+1} = dz D = D dz
    CHECK(fs_D_power(n, n + 1) ==
          fs_D(n) * FsElem::generator(n, FsGen::Dz));
  }
  CHECK_THROWS_AS(fs_D_power(3, 0), std::domain_error);
  CHECK_THROWS_AS(fs_D_power(3, 7), std::domain_error);
}

TEST_CASE("g_L structure") {
  const int n = 3;
  FsElem g0 = g_L(n, 0);
  // leading term is 1
  CHECK(g0.terms().count(FsMonomial{}) == 1);
  CHECK(g0.terms().at(FsMonomial{}) == one_of(n));
  // eps-degree-1 part equals eps * D
  FsElem eps_d = FsElem::generator(n, FsGen::Eps) * fs_D(n);
  FsElem g0_e1(n), eps_d_e1(n);
  for (const auto& [m, c] : g0.terms())
    if (m.e == 1) g0_e1.add_term(m, c);
  for (const auto& [m, c] : eps_d.terms())
    if (m.e == 1) eps_d_e1.add_term(m, c);
  CHECK(g0_e1 == eps_d_e1);
  CHECK(eps_d == eps_d_e1);  // the product is pure eps-degree 1

  // zeps^2 part of g_L(3, 2) is (zeps^2/2) dz^2 * sum_p eps^(p) D^p
  FsElem g2 = g_L(n, 2);
  FsElem grassmann2(n);
  FsElem dpow = FsElem::one(n);
  for (int p = 0; p < n; ++p) {
    grassmann2 += fs_eps_divided_power(n, p) * dpow;
    dpow = dpow * fs_D(n);
  }
  FsElem expect = fs_mono(n, FsMonomial{0, 2, 0, 0, 0, 2},
                          CycloNum(n, Rational(1, 2))) *
                  grassmann2;
  FsElem g2_j2(n);
  for (const auto& [m, c] : g2.terms())
    if (m.j == 2) g2_j2.add_term(m, c);
  CHECK(g2_j2 == expect);

  // with eps and zeps switched off only the constant term survives
  FsElem bare(n);
  for (const auto& [m, c] : g2.terms())
    if (m.e == 0 && m.j == 0) bare.add_term(m, c);
  CHECK(bare == FsElem::one(n));
}

TEST_CASE("fsusy transformation of z") {
  CHECK(fsusy_transform_check(3, 2));
  CHECK(fsusy_transform_check(5, 1));
  CHECK(fsusy_transform_check(5, 2));
}

TEST_CASE("fs confluence on random words") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 60; ++i) {
    int n = (i % 2 == 0) ? 3 : 5;
    FsWord w = random_fs_word(rng, n, 8);
    CHECK(fs_normal_order(n, w) == fs_normal_order_reversed(n, w));
  }
}

TEST_CASE("transfer_from_generic") {
  const int n = 3;
  CHECK(transfer_from_generic(theta_divided_power(3), n) ==
        FsElem::generator(n, FsGen::Z));
  CHECK(transfer_from_generic(theta_divided_power(7), n) ==
        fs_mono(n, FsMonomial{2, 0, 1, 0, 0, 0}, CycloNum(n, Rational(1, 2))));
  CHECK(transfer_from_generic(GradedElem::one(), n) == FsElem::one(n));
  // eps^(3) -> zeps
  GradedElem eps3 =
      qfact(3).inverse() * GradedElem::term(Monomial{0, 3, 0}, RatQ(1));
  CHECK(transfer_from_generic(eps3, n) == FsElem::generator(n, FsGen::Zeps));
  CHECK_THROWS_AS(transfer_from_generic(GradedElem::generator(Gen::D), n),
                  std::invalid_argument);
  // a genuinely diverging coefficient propagates PoleAtRoot
  GradedElem pole = GradedElem::scalar(qnum(3).inverse());
  CHECK_THROWS_AS(transfer_from_generic(pole, n), PoleAtRoot);
}

TEST_CASE("transfer is an algebra map on theta polynomials") {
  std::mt19937_64 rng(43);
  for (int n : {3, 5}) {
    for (int trial = 0; trial < 50; ++trial) {
      GradedElem x, y;
      for (int d = 0; d < 2 * n; ++d) {
        if (rng() % 3 == 0)
          x += GradedElem::term(Monomial{d, 0, 0},
                                RatQ(Rational(static_cast<long>(rng() % 5) - 2)));
        if (rng() % 3 == 0)
          y += GradedElem::term(Monomial{d, 0, 0},
                                RatQ(Rational(static_cast<long>(rng() % 5) - 2)));
      }
      CHECK(transfer_from_generic(x * y, n) ==
            transfer_from_generic(x, n) * transfer_from_generic(y, n));
    }
  }
}

#include <cmath>
#include <complex>

#include "doctest.h"
#include "qcalc/repr.hpp"

using namespace qcalc;

namespace {

Ket<RatQ> basis_q(long m) { return Ket<RatQ>::basis(m, RatQ(1)); }

Ket<CycloNum> basis_root(long m, int n) {
  return Ket<CycloNum>::basis(m, CycloNum(n, Rational(1)));
}

}  // namespace

TEST_CASE("basis actions at generic q") {
  CHECK(act(KetOp::D, basis_q(0)).is_zero());
  CHECK(act(KetOp::D, basis_q(4)) == basis_q(3));
  CHECK(act(KetOp::Theta, basis_q(2)) == qnum(3) * basis_q(3));
  CHECK(act(KetOp::QN, basis_q(5)) == RatQ::q_pow(5) * basis_q(5));
  // theta^(2) |3> = ([5]!/([3]! [2]!)) |5>
  RatQ coeff = qfact(5) / (qfact(3) * qfact(2));
  CHECK(act_theta_bracket(basis_q(3), 2) == coeff * basis_q(5));
}

TEST_CASE("number operator relations on kets") {
  // [N, theta] = theta, [N, D] = -D, and the q^N conjugations
  for (long m = 0; m <= 20; ++m) {
    Ket<RatQ> ket = basis_q(m);
    Ket<RatQ> nt = act(KetOp::N, act(KetOp::Theta, ket));
    Ket<RatQ> tn = act(KetOp::Theta, act(KetOp::N, ket));
    CHECK(nt - tn == act(KetOp::Theta, ket));
    Ket<RatQ> nd = act(KetOp::N, act(KetOp::D, ket));
    Ket<RatQ> dn = act(KetOp::D, act(KetOp::N, ket));
    CHECK(nd - dn == RatQ(-1) * act(KetOp::D, ket));
    // q^N theta q^{-N} = q theta on |m>: q^{-m} scales, then theta, then q^N
    Ket<RatQ> conj =
        act(KetOp::QN, act(KetOp::Theta, RatQ::q_pow(-m) * ket));
    CHECK(conj == RatQ::q() * act(KetOp::Theta, ket));
    Ket<RatQ> conj_d = act(KetOp::QN, act(KetOp::D, RatQ::q_pow(-m) * ket));
    CHECK(conj_d == RatQ::q_pow(-1) * act(KetOp::D, ket));
  }
}

TEST_CASE("defining relations on kets") {
  for (long m = 0; m <= 30; ++m) {
    Ket<RatQ> ket = basis_q(m);
    Ket<RatQ> dt = act(KetOp::D, act(KetOp::Theta, ket));
    Ket<RatQ> td = act(KetOp::Theta, act(KetOp::D, ket));
    CHECK(dt - RatQ::q() * td == ket);                 // D theta - q theta D = 1
    CHECK(dt - td == act(KetOp::QN, ket));             // q^N = D theta - theta D
    CHECK(td == qnum(static_cast<int>(m)) * ket);      // theta D = [N]_q
  }
}

TEST_CASE("number-operator series acts as N on kets") {
  // N = sum_m (1-q)^m/(1-q^m) theta^m D^m truncates on any finite support:
  // theta^k D^k kills |m> for k > m, so the partial sums are exact there.
  const int order = 8;
  GradedElem n_series;
  for (int m = 1; m <= order; ++m) {
    RatQ coeff = (RatQ(1) - RatQ::q()).pow(m) / (RatQ(1) - RatQ::q_pow(m));
    n_series += coeff * GradedElem::term(Monomial{m, 0, m}, RatQ(1));
  }
  for (long m = 0; m <= order; ++m) {
    Ket<RatQ> ket = basis_q(m);
    CHECK(apply_elem(n_series, ket) == act(KetOp::N, ket));
  }
}

TEST_CASE("reduce_ket and the product structure") {
  const int n = 3;
  ProductKet p = reduce_ket(basis_root(7, n), n);
  CHECK(p == ProductKet::basis(n, 2, 1, CycloNum(n, Rational(1))));
  CHECK(reduce_ket(basis_root(0, n), n) ==
        ProductKet::basis(n, 0, 0, CycloNum(n, Rational(1))));
  for (long r = 0; r <= 5; ++r)
    for (int pp = 0; pp < n; ++pp) {
      ProductKet b = ProductKet::basis(n, r, pp, CycloNum(n, Rational(1)));
      CHECK(reduce_ket(expand_ket(b), n) == b);
    }
}

TEST_CASE("product-space actions") {
  const int n = 3;
  CycloNum one(n, Rational(1));
  // z |2,1> = 3 |3,1>
  CHECK(act_product(ProductOp::Z, ProductKet::basis(n, 2, 1, one)) ==
        ProductKet::basis(n, 3, 1, CycloNum(n, Rational(3))));
  CHECK(act_product(ProductOp::Dz, ProductKet::basis(n, 0, 2, one)).is_zero());
  // D |r,0> = |r-1, n-1>
  CHECK(act_product(ProductOp::D, ProductKet::basis(n, 2, 0, one)) ==
        ProductKet::basis(n, 1, n - 1, one));
  CHECK(act_product(ProductOp::D, ProductKet::basis(n, 0, 0, one)).is_zero());
  // theta kills the top graded state
  CHECK(act_product(ProductOp::Theta, ProductKet::basis(n, 1, n - 1, one))
            .is_zero());
}

TEST_CASE("intertwining through the reduction") {
  struct OpPair { RootOp flat; ProductOp prod; };
  const OpPair ops[] = {{RootOp::Theta, ProductOp::Theta},
                        {RootOp::Dtheta, ProductOp::Dtheta},
                        {RootOp::D, ProductOp::D},
                        {RootOp::Z, ProductOp::Z},
                        {RootOp::Dz, ProductOp::Dz}};
  for (int n : {3, 5}) {
    for (long m = 0; m <= 3 * n; ++m) {
      Ket<CycloNum> ket = basis_root(m, n);
      for (const auto& op : ops) {
        CHECK(reduce_ket(act(op.flat, ket, n), n) ==
              act_product(op.prod, reduce_ket(ket, n)));
      }
    }
  }
}

TEST_CASE("z acts as the limit of the n-th divided theta power") {
  for (int n : {3, 5}) {
    for (long m = 0; m <= 3 * n; ++m) {
      Ket<CycloNum> ket = basis_root(m, n);
      CHECK(act_theta_bracket(ket, n, n) == act(RootOp::Z, ket, n));
    }
  }
}

TEST_CASE("oscillator matrices") {
  NumericMatrix a3 = oscillator_a(3);
  CHECK(std::abs(a3(0, 1) - 1.0) < 1e-15);
  CHECK(std::abs(a3(1, 2) - 1.0) < 1e-15);  // sin(2pi/3)/sin(pi/3) = 1
  NumericMatrix a5 = oscillator_a(5);
  double golden = (1.0 + std::sqrt(5.0)) / 2.0;
  CHECK(std::abs(std::norm(a5(1, 2)) - golden) < 1e-12);
  // strictly positive squared coefficients
  for (int n = 3; n <= 13; n += 2) {
    NumericMatrix a = oscillator_a(n);
    for (int p = 1; p < n; ++p) CHECK(std::norm(a(p - 1, p)) > 0.0);
  }
}

TEST_CASE("deformed oscillator relation") {
  DefcrReport generic = defcr_check(std::nullopt, 10);
  CHECK(generic.exact_minus);
  CHECK(generic.exact_plus);
  CHECK_FALSE(generic.has_numeric);
  for (int n = 3; n <= 13; n += 2) {
    DefcrReport rep = defcr_check(n, 10);
    CHECK(rep.exact_minus);
    CHECK(rep.exact_plus);
    CHECK(rep.has_numeric);
    CHECK(rep.residual_minus < 1e-12);
    CHECK(rep.residual_plus < 1e-12);
    CHECK(rep.adjoint_residual < 1e-12);
  }
  CHECK_THROWS_AS(defcr_check(std::nullopt, 1), std::domain_error);
}

TEST_CASE("adjoint of a equals the raising matrix") {
  for (int n = 3; n <= 13; n += 2) {
    NumericMatrix a = oscillator_a(n);
    NumericMatrix ad = oscillator_adag(n);
    CHECK((ad - a.adjoint()).norm() < 1e-12);
  }
}

TEST_CASE("diagonal intertwiner between the two representations") {
  for (int n : {3, 5, 7, 9}) {
    IntertwinerReport rep = similarity_intertwiner(n);
    CHECK(rep.pass);
    CHECK(rep.residual_a < 1e-10);
    CHECK(rep.residual_adag < 1e-10);
    CHECK(rep.moduli_positive);
    CHECK(std::abs(rep.diag[0] - std::complex<double>(1.0, 0.0)) < 1e-15);
  }
}

TEST_CASE("matrix JSON export") {
  nlohmann::json j = rep_matrix_json(3, "a", 0, true);
  CHECK(j["operator"] == "a");
  CHECK(j["cutoff"] == 3);
  CHECK(j["entries"].size() == 3);
  CHECK(j["entries"][0][1][0].get<double>() == doctest::Approx(1.0));
  nlohmann::json t = rep_matrix_json(3, "theta", 4, false);
  CHECK(t["entries"][1][0].get<std::string>() == "[1, 0] mod Phi_3");
  CHECK_THROWS_AS(rep_matrix_json(3, "a", 0, false), std::invalid_argument);
  CHECK_THROWS_AS(rep_matrix_json(3, "bogus", 0, false), std::invalid_argument);
}
